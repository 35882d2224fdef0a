#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "sedge/detect.hpp"

namespace sedge {

/// One experiment cell: a two-sided window family indexed by
/// (alpha_left, alpha_right, L). Both halves use the unit-mean scale, so
/// the sides differ in texture only - the hardest detection setting.
struct CellConfig {
    double alpha_left;
    double alpha_right;
    double looks;
    std::size_t rows = 20;
    std::size_t cols = 100;
    std::size_t edge_col = 50;
    std::size_t replications = 1000;
    std::vector<Method> methods;
    std::uint64_t seed = 0;

    /// Throws std::invalid_argument on: equal roughnesses (no edge),
    /// alpha > -2 (outside the unit-mean grid), or an edge column
    /// outside the candidate range.
    void validate() const;
};

struct MethodCellStats {
    double error_rate;     // share of replications with |truth - found| > 5
    double mean_time_s;    // wall clock around detect_edge only
    std::size_t failures;  // DetectionFailed count (each counts as an error)
    std::size_t replications;
};

struct CellResult {
    CellConfig cell;
    std::map<Method, MethodCellStats> per_method;
};

using ExperimentReport = std::vector<CellResult>;

/// Window for replication `rep`: columns 1..edge_col drawn from
/// G0(alpha_left, gamma_unit, L), the rest from G0(alpha_right,
/// gamma_unit, L), on the stream (seed, rep).
Window generate_window(const CellConfig& c, std::uint64_t rep);

/// |truth - detected edge| in columns.
std::size_t error_metric(const EdgeEstimate& estimate, std::size_t truth);

/// Detection errors past 5 columns count as misses; the error rate is
/// their share over replications. Error rates depend only on the seed,
/// never on the thread count; timings are whatever the clock says.
CellResult run_cell(const CellConfig& c, unsigned threads = 1);

ExperimentReport run_grid(const std::vector<CellConfig>& grid, unsigned threads = 1);

/// The full benchmark grid: -alpha_left in {3,4,6,8,10,12,14,16,18,20},
/// -alpha_right in {2..20}, L in {1,3,8}, equal-roughness cells dropped:
/// 540 cells. Per-cell seeds are derived from `seed` and the cell index.
std::vector<CellConfig> paper_grid(std::size_t replications,
                                   std::vector<Method> methods, std::uint64_t seed);

}  // namespace sedge
