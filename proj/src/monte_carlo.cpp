#include "sedge/monte_carlo.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "sedge/gi0.hpp"
#include "sedge/rng.hpp"
#include "sedge/sampling.hpp"

namespace sedge {

void CellConfig::validate() const {
    if (alpha_left == alpha_right) {
        throw std::invalid_argument("CellConfig: equal roughnesses entail no edge");
    }
    if (!(alpha_left <= -2.0) || !(alpha_right <= -2.0)) {
        throw std::invalid_argument("CellConfig: roughness must be <= -2");
    }
    if (!(looks >= 1.0)) {
        throw std::invalid_argument("CellConfig: looks must be >= 1");
    }
    if (rows < 1 || cols < 3) {
        throw std::invalid_argument("CellConfig: bad window shape");
    }
    const DetectOptions defaults{};
    if (edge_col < defaults.j_min || edge_col > cols - defaults.j_min) {
        throw std::invalid_argument("CellConfig: edge column outside candidate range");
    }
}

Window generate_window(const CellConfig& c, std::uint64_t rep) {
    c.validate();
    RngStream rng(c.seed, rep);
    const GI0Params left(c.alpha_left, unit_mean_gamma(c.alpha_left, c.looks), c.looks);
    const GI0Params right(c.alpha_right, unit_mean_gamma(c.alpha_right, c.looks),
                          c.looks);
    const std::vector<double> zl = sample_gi0(left, c.rows * c.edge_col, rng);
    const std::vector<double> zr = sample_gi0(right, c.rows * (c.cols - c.edge_col), rng);

    std::vector<double> pixels(c.rows * c.cols);
    std::size_t il = 0, ir = 0;
    for (std::size_t r = 0; r < c.rows; ++r) {
        for (std::size_t col = 0; col < c.cols; ++col) {
            pixels[r * c.cols + col] = col < c.edge_col ? zl[il++] : zr[ir++];
        }
    }
    return Window(std::move(pixels), c.rows, c.cols, c.edge_col);
}

std::size_t error_metric(const EdgeEstimate& estimate, std::size_t truth) {
    return estimate.edge_index > truth ? estimate.edge_index - truth
                                       : truth - estimate.edge_index;
}

namespace {

struct RepOutcome {
    bool error = false;
    bool failure = false;
    double seconds = 0.0;
};

void run_replication(const CellConfig& c, std::uint64_t rep,
                     std::vector<std::vector<RepOutcome>>& outcomes) {
    const Window w = generate_window(c, rep);
    DetectOptions opts;
    opts.looks = c.looks;
    for (std::size_t mi = 0; mi < c.methods.size(); ++mi) {
        RepOutcome& out = outcomes[mi][rep];
        const auto t0 = std::chrono::steady_clock::now();
        try {
            const EdgeEstimate est = detect_edge(w, c.methods[mi], opts);
            out.error = error_metric(est, c.edge_col) > 5;
        } catch (const DetectionFailed&) {
            out.failure = true;
            out.error = true;  // an undetected edge is a miss
        }
        const auto t1 = std::chrono::steady_clock::now();
        out.seconds = std::chrono::duration<double>(t1 - t0).count();
    }
}

}  // namespace

CellResult run_cell(const CellConfig& c, unsigned threads) {
    c.validate();
    if (c.replications == 0) {
        throw std::invalid_argument("run_cell: needs replications >= 1");
    }
    if (c.methods.empty()) {
        throw std::invalid_argument("run_cell: empty method set");
    }
    std::vector<std::vector<RepOutcome>> outcomes(
        c.methods.size(), std::vector<RepOutcome>(c.replications));

    if (threads <= 1) {
        for (std::uint64_t rep = 0; rep < c.replications; ++rep) {
            run_replication(c, rep, outcomes);
        }
    } else {
        // Replications are independent jobs keyed by index; results land
        // in per-rep slots, so the aggregate is schedule-independent.
        std::atomic<std::uint64_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back([&] {
                for (;;) {
                    const std::uint64_t rep = next.fetch_add(1);
                    if (rep >= c.replications) return;
                    run_replication(c, rep, outcomes);
                }
            });
        }
        for (auto& th : pool) th.join();
    }

    CellResult result{c, {}};
    for (std::size_t mi = 0; mi < c.methods.size(); ++mi) {
        std::size_t errors = 0, failures = 0;
        double seconds = 0.0;
        for (const RepOutcome& out : outcomes[mi]) {
            errors += out.error ? 1 : 0;
            failures += out.failure ? 1 : 0;
            seconds += out.seconds;
        }
        const double reps = static_cast<double>(c.replications);
        result.per_method[c.methods[mi]] = {
            static_cast<double>(errors) / reps,
            seconds / reps,
            failures,
            c.replications,
        };
    }
    return result;
}

ExperimentReport run_grid(const std::vector<CellConfig>& grid, unsigned threads) {
    if (grid.empty()) {
        throw std::invalid_argument("run_grid: empty grid");
    }
    ExperimentReport report;
    report.reserve(grid.size());
    for (const CellConfig& c : grid) {
        report.push_back(run_cell(c, threads));
    }
    return report;
}

std::vector<CellConfig> paper_grid(std::size_t replications,
                                   std::vector<Method> methods, std::uint64_t seed) {
    static const int alpha_left_mag[] = {3, 4, 6, 8, 10, 12, 14, 16, 18, 20};
    std::vector<CellConfig> grid;
    std::uint64_t index = 0;
    for (double looks : {1.0, 3.0, 8.0}) {
        for (int al : alpha_left_mag) {
            for (int ar = 2; ar <= 20; ++ar) {
                if (ar == al) continue;
                CellConfig c;
                c.alpha_left = -static_cast<double>(al);
                c.alpha_right = -static_cast<double>(ar);
                c.looks = looks;
                c.replications = replications;
                c.methods = methods;
                c.seed = mix_u64(seed, index++);
                grid.push_back(c);
            }
        }
    }
    return grid;
}

}  // namespace sedge
