#include "sedge/detect.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <limits>
#include <memory>

#include "sedge/rank_stats.hpp"
#include "sedge/special.hpp"

namespace sedge {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double side_loglik(std::span<const double> z, double alpha, double gamma,
                   double looks) {
    // n * (constant part of ln f) + pixel terms; matches gi0_log_density
    // summed over the side, with the Gamma-function constants hoisted.
    const double n = static_cast<double>(z.size());
    const double constant = looks * std::log(looks) + log_gamma(looks - alpha) -
                            alpha * std::log(gamma) - log_gamma(looks) -
                            log_gamma(-alpha);
    double acc = n * constant;
    for (double v : z) {
        acc -= (looks - alpha) * std::log(gamma + looks * v);
    }
    if (looks != 1.0) {
        for (double v : z) {
            acc += (looks - 1.0) * std::log(v);
        }
    }
    return acc;
}

}  // namespace

std::string to_string(Method m) {
    switch (m) {
        case Method::gambini: return "gambini";
        case Method::mann_whitney: return "mann_whitney";
        case Method::kruskal: return "kruskal";
        case Method::variance: return "variance";
        case Method::tpe: return "tpe";
    }
    return "unknown";
}

Method method_from_string(const std::string& name) {
    if (name == "gambini") return Method::gambini;
    if (name == "mann_whitney" || name == "mann-whitney") return Method::mann_whitney;
    if (name == "kruskal" || name == "kruskal-wallis") return Method::kruskal;
    if (name == "variance" || name == "squared-ranks") return Method::variance;
    if (name == "tpe") return Method::tpe;
    throw std::invalid_argument("unknown method: " + name);
}

const std::vector<Method>& all_methods() {
    static const std::vector<Method> methods = {
        Method::gambini, Method::mann_whitney, Method::kruskal, Method::variance,
        Method::tpe};
    return methods;
}

Window::Window(std::vector<double> pixels, std::size_t rows, std::size_t cols,
               std::optional<std::size_t> true_edge_col)
    : pixels_(std::move(pixels)), rows_(rows), cols_(cols),
      true_edge_col_(true_edge_col) {
    if (rows_ < 1 || cols_ < 3) {
        throw std::invalid_argument("Window: needs rows >= 1 and cols >= 3");
    }
    if (pixels_.size() != rows_ * cols_) {
        throw std::invalid_argument("Window: pixel count does not match rows*cols");
    }
    for (double& p : pixels_) {
        if (!std::isfinite(p) || p < 0.0) {
            throw std::invalid_argument("Window: pixels must be finite and >= 0");
        }
        if (p == 0.0) {
            p = 0.0;  // normalize -0.0 so bit order equals value order
        }
    }
    if (true_edge_col_ && (*true_edge_col_ < 1 || *true_edge_col_ >= cols_)) {
        throw std::invalid_argument("Window: true edge column out of range");
    }
}

std::vector<double> Window::column_major() const {
    std::vector<double> out(pixels_.size());
    for (std::size_t c = 0; c < cols_; ++c) {
        for (std::size_t r = 0; r < rows_; ++r) {
            out[c * rows_ + r] = pixels_[r * cols_ + c];
        }
    }
    return out;
}

double gambini_loglik(std::span<const double> left, std::span<const double> right,
                      double looks, std::size_t n_min, const AlphaBracket& bracket) {
    if (left.size() < n_min || right.size() < n_min) {
        throw std::invalid_argument("gambini_loglik: side smaller than n_min");
    }
    const ParamEstimate fit_l = estimate_params(left, looks, bracket, n_min);
    const ParamEstimate fit_r = estimate_params(right, looks, bracket, n_min);
    if (!fit_l.converged || !fit_r.converged) {
        return -kInf;
    }
    return side_loglik(left, fit_l.alpha_hat, fit_l.gamma_hat, looks) +
           side_loglik(right, fit_r.alpha_hat, fit_r.gamma_hat, looks);
}

namespace {

CandidateRange resolve_range(const Window& w, const DetectOptions& opts) {
    const std::size_t j_min = opts.j_min;
    if (j_min < 1 || w.cols() < 2 * j_min) {
        throw std::invalid_argument("detect_edge: window too narrow for j_min");
    }
    const CandidateRange full{j_min, w.cols() - j_min};
    if (!opts.range) {
        return full;
    }
    const CandidateRange r = *opts.range;
    if (r.first < full.first || r.last > full.last || r.first > r.last) {
        throw std::invalid_argument(
            "detect_edge: candidate range outside [j_min, cols - j_min]");
    }
    return r;
}

/// Per-column rank sums and the global squared-rank sum for a window,
/// computed without materializing per-pixel ranks. Ordering goes through
/// a counting pass on a monotone integer key (high bits of the
/// nonnegative doubles) with full-precision sorting inside each bucket,
/// so the result is exactly the midrank assignment. Tied values share
/// identical bits, hence always the same bucket.
struct WindowRanks {
    std::vector<double> col_sum;  // rank sum per column
    double sum_r2 = 0.0;
    bool has_ties = false;
};

WindowRanks rank_columns(const Window& w) {
    const std::size_t rows = w.rows();
    const std::size_t cols = w.cols();
    const std::size_t n = rows * cols;
    const std::span<const double> pix = w.row_major();

    // For finite nonnegative doubles the raw bit pattern orders exactly
    // like the value, so ranking runs on integer keys. One record per
    // pixel keeps the scatter and the within-bucket sorts single-stream.
    struct Rec {
        std::uint64_t bits;
        std::uint64_t col;
    };
    const auto rec = std::make_unique_for_overwrite<Rec[]>(n);

    // adaptive key width: shift the 32 high bits right until the spread
    // fits a small counting table, so buckets stay almost empty for
    // continuous data and the table stays cache-resident
    std::uint32_t kmin = 0xffffffffu, kmax = 0;
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t bits;
        std::memcpy(&bits, &pix[i], sizeof bits);
        const std::uint32_t k = static_cast<std::uint32_t>(bits >> 32);
        kmin = std::min(kmin, k);
        kmax = std::max(kmax, k);
    }
    std::uint32_t cap = 256;  // keep the counting table ~4x the pixel count
    while (cap < 4 * n && cap < (1u << 16)) cap <<= 1;
    unsigned shift = 0;
    while (((kmax >> shift) - (kmin >> shift)) >= cap) ++shift;
    const std::uint32_t base = kmin >> shift;

    std::vector<std::uint32_t> start(((kmax >> shift) - base) + 2, 0);
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t bits;
        std::memcpy(&bits, &pix[i], sizeof bits);
        ++start[(static_cast<std::uint32_t>(bits >> 32) >> shift) - base + 1];
    }
    for (std::size_t b = 1; b < start.size(); ++b) start[b] += start[b - 1];
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            std::uint64_t bits;
            std::memcpy(&bits, &pix[r * cols + c], sizeof bits);
            const std::uint32_t k =
                (static_cast<std::uint32_t>(bits >> 32) >> shift) - base;
            rec[start[k]++] = {bits, c};
        }
    }

    // full-precision order within buckets (equal values cannot straddle
    // bucket boundaries, so midrank runs stay intact); bucket limits are
    // recovered from key changes, and buckets are nearly empty for
    // continuous data, so insertion sort wins there
    const auto key_of = [&](const Rec& r) {
        return (static_cast<std::uint32_t>(r.bits >> 32) >> shift) - base;
    };
    std::vector<Rec> scratch;
    std::size_t lo = 0;
    while (lo < n) {
        std::size_t hi = lo + 1;
        const std::uint32_t k = key_of(rec[lo]);
        while (hi < n && key_of(rec[hi]) == k) ++hi;
        if (hi - lo >= 2) {
            if (hi - lo <= 48) {
                for (std::size_t i = lo + 1; i < hi; ++i) {
                    const Rec r = rec[i];
                    std::size_t q = i;
                    while (q > lo && rec[q - 1].bits > r.bits) {
                        rec[q] = rec[q - 1];
                        --q;
                    }
                    rec[q] = r;
                }
            } else {  // heavily quantized data: one big bucket per level
                scratch.assign(rec.get() + lo, rec.get() + hi);
                std::sort(scratch.begin(), scratch.end(),
                          [](const Rec& a, const Rec& b2) { return a.bits < b2.bits; });
                std::copy(scratch.begin(), scratch.end(), rec.get() + lo);
            }
        }
        lo = hi;
    }

    WindowRanks out;
    out.col_sum.assign(cols, 0.0);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i + 1;
        while (j < n && rec[j].bits == rec[i].bits) ++j;
        const double rank = 0.5 * static_cast<double>(i + 1 + j);
        if (j - i > 1) out.has_ties = true;
        out.sum_r2 += static_cast<double>(j - i) * rank * rank;
        for (std::size_t k = i; k < j; ++k) out.col_sum[rec[k].col] += rank;
        i = j;
    }
    return out;
}

/// Shared-rank scan for mann_whitney / kruskal / tpe. The combined
/// sample is the whole window at every split, so the ranks are computed
/// once and each candidate costs O(1) via rank prefix sums.
std::vector<double> rank_scan(const Window& w, Method method,
                              const CandidateRange& cand) {
    const WindowRanks wr = rank_columns(w);
    const double N = static_cast<double>(w.rows() * w.cols());

    // prefix rank sums at column boundaries; exact (half-integer sums)
    std::vector<double> col_prefix(w.cols() + 1, 0.0);
    for (std::size_t c = 0; c < w.cols(); ++c) {
        col_prefix[c + 1] = col_prefix[c] + wr.col_sum[c];
    }
    const double sum_r2 = wr.sum_r2;

    const double total = N * (N + 1.0) / 2.0;
    const double quarter = N * (N + 1.0) * (N + 1.0) / 4.0;
    const double spread = sum_r2 - quarter;  // exactly 0 iff all pixels tie
    const bool has_ties = wr.has_ties;
    const double s2 = spread / (N - 1.0);

    std::vector<double> trace(cand.size(), kNaN);
    if (spread == 0.0) {
        return trace;  // constant window: no rank information at any split
    }
    for (std::size_t j = cand.first; j <= cand.last; ++j) {
        const double n = static_cast<double>(w.rows() * j);
        const double m = N - n;
        const double r1 = col_prefix[j];
        const double r2 = total - r1;
        double value = kNaN;
        switch (method) {
            case Method::mann_whitney: {
                const double var = n * m / (N * (N - 1.0)) * spread;
                value = (r1 - n * (N + 1.0) / 2.0) / std::sqrt(var);
                break;
            }
            case Method::kruskal: {
                const double numer = r1 * r1 / n + r2 * r2 / m - quarter;
                if (!has_ties) {
                    value = 12.0 / (N * (N + 1.0)) * (r1 * r1 / n + r2 * r2 / m) -
                            3.0 * (N + 1.0);
                } else if (s2 > 0.0) {
                    value = numer / s2;
                }
                break;
            }
            case Method::tpe: {
                const double gap = std::abs(r1 / n - r2 / m);
                value = std::abs(gap - (N + 1.0) / 2.0);
                break;
            }
            default: break;
        }
        trace[j - cand.first] = value;
    }
    return trace;
}

std::vector<double> variance_scan(const Window& w, const CandidateRange& cand) {
    const std::vector<double> flat = w.column_major();
    const std::size_t rows = w.rows();
    std::vector<double> trace(cand.size(), kNaN);
    for (std::size_t j = cand.first; j <= cand.last; ++j) {
        const std::size_t n = rows * j;
        const std::span<const double> left(flat.data(), n);
        const std::span<const double> right(flat.data() + n, flat.size() - n);
        if (auto tv = squared_ranks_tv(left, right)) {
            trace[j - cand.first] = *tv;
        }
    }
    return trace;
}

std::vector<double> gambini_scan(const Window& w, const DetectOptions& opts,
                                 const CandidateRange& cand) {
    if (!opts.looks) {
        throw std::invalid_argument("detect_edge: gambini requires looks");
    }
    const std::vector<double> flat = w.column_major();
    const std::size_t rows = w.rows();
    std::vector<double> trace(cand.size(), -kInf);
    for (std::size_t j = cand.first; j <= cand.last; ++j) {
        const std::size_t n = rows * j;
        const std::size_t m = flat.size() - n;
        if (n < opts.n_min || m < opts.n_min) {
            continue;  // estimator undefined on this split
        }
        trace[j - cand.first] =
            gambini_loglik({flat.data(), n}, {flat.data() + n, m}, *opts.looks,
                           opts.n_min, opts.bracket);
    }
    return trace;
}

}  // namespace

EdgeEstimate detect_edge(const Window& w, Method method, const DetectOptions& opts) {
    const CandidateRange cand = resolve_range(w, opts);

    std::vector<double> trace;
    switch (method) {
        case Method::gambini:
            trace = gambini_scan(w, opts, cand);
            break;
        case Method::variance:
            trace = variance_scan(w, cand);
            break;
        default:
            trace = rank_scan(w, method, cand);
            break;
    }

    const bool minimize = method == Method::tpe;
    double best = minimize ? kInf : -kInf;
    std::optional<std::size_t> best_j;
    for (std::size_t k = 0; k < trace.size(); ++k) {
        const double v = trace[k];
        if (std::isnan(v) || v == -kInf || v == kInf) {
            continue;  // skipped split
        }
        if (minimize ? v < best : v > best) {
            best = v;
            best_j = cand.first + k;
        }
    }
    if (!best_j) {
        throw DetectionFailed("detect_edge: every candidate split was degenerate");
    }
    return {*best_j, method, std::move(trace), cand};
}

std::vector<double> statistic_trace(const Window& w, Method method,
                                    const DetectOptions& opts) {
    return detect_edge(w, method, opts).trace;
}

}  // namespace sedge
