#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "smax/bitstream.hpp"

namespace smax {

enum class SngMode { PseudoRandom, Lfsr };

/// Stochastic number generator configuration.
///
/// Generation is a pure function of (mode, master_seed, sub_seed, p, N). In
/// pseudo-random mode each bit compares one 64-bit mt19937_64 draw against
/// p * 2^64. In LFSR mode a Galois LFSR is clocked once per bit and its
/// register value is compared against p * 2^width, like a hardware SNG.
struct StreamGenerator {
    SngMode mode = SngMode::PseudoRandom;
    std::uint64_t master_seed = 0;
    unsigned lfsr_width = 32;
    /// Galois feedback mask; 0 selects the built-in maximal-length taps.
    std::uint64_t lfsr_taps = 0;
};

/// splitmix64 finalizer.
[[nodiscard]] constexpr std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Sub-seed for stream `stream_index` of trial `trial_index` under `master_seed`.
///
/// Every (stream, trial) pair maps to its own seed, so parallel trials are
/// reproducible regardless of how they are scheduled.
[[nodiscard]] constexpr std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t stream_index,
                                                  std::uint64_t trial_index) {
    return mix64(mix64(mix64(master_seed) ^ stream_index) ^ mix64(trial_index + 0x632be59bd9b4e019ULL));
}

/// Engine for auxiliary draws (e.g. trial parameters) tied to a sub-seed.
[[nodiscard]] std::mt19937_64 make_engine(const StreamGenerator& gen, std::uint64_t sub_seed);

/// Uniform double in [0, 1) from the top 53 bits of one draw. Platform independent,
/// unlike std::uniform_real_distribution.
[[nodiscard]] inline double uniform01(std::mt19937_64& engine) {
    return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

/// Default maximal-length Galois taps for widths 8, 16, 24, 32 and 64.
/// Throws std::invalid_argument for other widths.
[[nodiscard]] std::uint64_t default_lfsr_taps(unsigned width);

/// Galois LFSR (right-shifting); never enters the all-zero state.
class GaloisLfsr {
  public:
    GaloisLfsr(unsigned width, std::uint64_t taps, std::uint64_t seed);

    std::uint64_t next() {
        const std::uint64_t lsb = state_ & 1U;
        state_ >>= 1;
        if (lsb != 0) {
            state_ ^= taps_;
        }
        return state_;
    }
    [[nodiscard]] std::uint64_t state() const { return state_; }
    [[nodiscard]] unsigned width() const { return width_; }

  private:
    unsigned width_;
    std::uint64_t taps_;
    std::uint64_t state_;
};

/// Bernoulli(p) stream of length n. Rejects p outside [0, 1] (or NaN) and n == 0.
[[nodiscard]] BitStream generate(double p, std::size_t n, const StreamGenerator& gen, std::uint64_t sub_seed);

}  // namespace smax
