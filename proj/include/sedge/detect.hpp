#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "sedge/moments.hpp"

namespace sedge {

enum class Method { gambini, mann_whitney, kruskal, variance, tpe };

/// Canonical token (also the CSV/CLI spelling, e.g. "mann_whitney").
std::string to_string(Method m);

/// Parses canonical tokens plus the hyphenated aliases.
/// Throws std::invalid_argument on unknown names.
Method method_from_string(const std::string& name);

const std::vector<Method>& all_methods();

/// A rows x cols block of nonnegative intensity pixels, scanned
/// column-by-column for a single vertical edge. Splits are indexed by
/// the number of columns in the left sample, so split j puts columns
/// 1..j left and j+1..cols right (all rows flattened).
class Window {
  public:
    /// Throws std::invalid_argument unless rows >= 1, cols >= 3, pixel
    /// count matches, and every pixel is finite and >= 0.
    Window(std::vector<double> pixels, std::size_t rows, std::size_t cols,
           std::optional<std::size_t> true_edge_col = std::nullopt);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::optional<std::size_t> true_edge_col() const { return true_edge_col_; }

    double at(std::size_t r, std::size_t c) const { return pixels_[r * cols_ + c]; }
    std::span<const double> row_major() const { return pixels_; }

    /// Pixels reordered so that the flattened left sample of any split
    /// is a contiguous prefix.
    std::vector<double> column_major() const;

  private:
    std::vector<double> pixels_;  // row-major
    std::size_t rows_;
    std::size_t cols_;
    std::optional<std::size_t> true_edge_col_;
};

/// Inclusive range of candidate split columns.
struct CandidateRange {
    std::size_t first;
    std::size_t last;
    std::size_t size() const { return last - first + 1; }
};

struct EdgeEstimate {
    std::size_t edge_index;  // split column attaining the method's optimum
    Method method;
    std::vector<double> trace;  // statistic per candidate; NaN / -inf = skipped
    CandidateRange candidates;
};

struct DetectOptions {
    /// Smallest candidate side, in columns. Default 3 keeps the moment
    /// estimator defined on every scanned split of a 20-row strip.
    std::size_t j_min = 3;
    std::optional<CandidateRange> range;  // must lie within [j_min, cols - j_min]
    std::optional<double> looks;          // required for Method::gambini
    std::size_t n_min = 20;               // minimum pixels per side (gambini)
    AlphaBracket bracket{};
};

/// Every candidate split was degenerate (zero rank variance, or no
/// usable likelihood) - no edge can be reported.
struct DetectionFailed : std::runtime_error {
    explicit DetectionFailed(const std::string& what) : std::runtime_error(what) {}
};

/// Split log-likelihood under per-side moment-fitted G0 laws:
/// sum of ln f(z; alpha_l, gamma_l) over the left sample plus the same
/// over the right. Returns -infinity when either side's fit does not
/// converge, which excludes that split from the scan. Throws
/// std::invalid_argument when a side has fewer than n_min observations.
double gambini_loglik(std::span<const double> left, std::span<const double> right,
                      double looks, std::size_t n_min = 20,
                      const AlphaBracket& bracket = {});

/// Scans all candidate splits and returns the one optimizing the
/// method's statistic: argmax for gambini / mann_whitney / kruskal /
/// variance, argmin for tpe, smallest index on ties. The signed
/// statistics are used as-is; mann_whitney in particular maximizes the
/// signed T1, so it looks for a left sample of large ranks.
EdgeEstimate detect_edge(const Window& w, Method method,
                         const DetectOptions& opts = {});

/// The per-candidate statistic values behind detect_edge, for plotting.
std::vector<double> statistic_trace(const Window& w, Method method,
                                    const DetectOptions& opts = {});

}  // namespace sedge
