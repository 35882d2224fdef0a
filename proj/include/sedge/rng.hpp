#pragma once

#include <cstdint>
#include <random>

namespace sedge {

/// Deterministic random stream keyed by (seed, stream_id).
///
/// Identical keys reproduce the identical draw sequence; distinct
/// stream ids give statistically independent streams, so replications
/// of an experiment can run in any order (or in parallel) without
/// changing results. The engine and every transformation used by the
/// samplers are fully specified algorithms; the only platform
/// dependence left is libm rounding.
class RngStream {
  public:
    explicit RngStream(std::uint64_t seed, std::uint64_t stream_id = 0);

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream_id() const { return stream_id_; }

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform draw strictly inside (0, 1).
    double uniform01();

    /// Standard normal via Box-Muller (two uniforms per draw, no cache).
    double normal01();

  private:
    std::uint64_t seed_;
    std::uint64_t stream_id_;
    std::mt19937_64 engine_;
};

/// splitmix64 finalizer; used to key engines and derive per-cell seeds.
std::uint64_t mix_u64(std::uint64_t a, std::uint64_t b);

}  // namespace sedge
