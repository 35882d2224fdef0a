#include "sedge/rng.hpp"

#include <cmath>
#include <numbers>

namespace sedge {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

std::uint64_t mix_u64(std::uint64_t a, std::uint64_t b) {
    std::uint64_t state = a;
    std::uint64_t x = splitmix64(state);
    state = x ^ b;
    return splitmix64(state);
}

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id)
    : seed_(seed), stream_id_(stream_id), engine_(mix_u64(seed, stream_id)) {}

double RngStream::uniform01() {
    // 53-bit mantissa, offset by half an ulp so 0 is never returned.
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
}

double RngStream::normal01() {
    const double u = uniform01();
    const double v = uniform01();
    return std::sqrt(-2.0 * std::log(u)) *
           std::cos(2.0 * std::numbers::pi * v);
}

}  // namespace sedge
