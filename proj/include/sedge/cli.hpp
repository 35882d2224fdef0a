#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "sedge/monte_carlo.hpp"

namespace sedge {

/// Writes one CSV row per (cell, method): alpha_left, alpha_right,
/// looks, method, error_rate, failures, replications, mean_time_s.
/// Everything except the trailing timing column is deterministic given
/// the seed. Floats carry 6 significant digits.
void emit_report(const ExperimentReport& report, const std::filesystem::path& path);

/// Entry point behind the `sedge` binary; argv[0] is the program name.
/// Exit codes: 0 success, 1 usage error, 2 data error, 3 detection
/// failure. Every run that writes an output file also writes a
/// `<out>.manifest.json` sidecar recording the exact invocation.
int run_cli(const std::vector<std::string>& argv);

}  // namespace sedge
