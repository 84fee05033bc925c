#include "smax/generator.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace smax {

namespace {

// Bits with draw < threshold are ones; `always` covers p == 1 where the
// threshold would be 2^width.
struct Threshold {
    std::uint64_t value = 0;
    bool always = false;
};

Threshold make_threshold(double p, unsigned width) {
    if (p >= 1.0) {
        return {0, true};
    }
    return {static_cast<std::uint64_t>(std::ldexp(p, static_cast<int>(width))), false};
}

template <class Draw>
BitStream fill(std::size_t n, Threshold threshold, Draw&& draw) {
    std::vector<std::uint64_t> words((n + 63) / 64, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t x = draw();
        if (threshold.always || x < threshold.value) {
            words[i / 64] |= std::uint64_t{1} << (i % 64);
        }
    }
    return BitStream::from_words(std::move(words), n);
}

}  // namespace

std::mt19937_64 make_engine(const StreamGenerator& gen, std::uint64_t sub_seed) {
    return std::mt19937_64(mix64(gen.master_seed ^ mix64(sub_seed)));
}

std::uint64_t default_lfsr_taps(unsigned width) {
    switch (width) {
        case 8: return 0xB8ULL;                 // x^8 + x^6 + x^5 + x^4 + 1
        case 16: return 0xB400ULL;              // x^16 + x^14 + x^13 + x^11 + 1
        case 24: return 0xE10000ULL;            // x^24 + x^23 + x^22 + x^17 + 1
        case 32: return 0x80200003ULL;          // x^32 + x^22 + x^2 + x + 1
        case 64: return 0xD800000000000000ULL;  // x^64 + x^63 + x^61 + x^60 + 1
        default: throw std::invalid_argument("no default LFSR taps for width " + std::to_string(width));
    }
}

GaloisLfsr::GaloisLfsr(unsigned width, std::uint64_t taps, std::uint64_t seed) : width_(width), taps_(taps) {
    if (width < 2 || width > 64) {
        throw std::invalid_argument("LFSR width must be in [2, 64]");
    }
    const std::uint64_t mask = width == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
    if (taps == 0 || (taps & ~mask) != 0) {
        throw std::invalid_argument("LFSR taps must be a non-zero mask within the register width");
    }
    state_ = seed & mask;
    if (state_ == 0) {
        state_ = 1;
    }
}

BitStream generate(double p, std::size_t n, const StreamGenerator& gen, std::uint64_t sub_seed) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("stream probability must lie in [0, 1]");
    }
    if (n == 0) {
        throw std::invalid_argument("stream length must be at least 1");
    }
    if (p == 0.0) {
        return BitStream(n);
    }

    if (gen.mode == SngMode::PseudoRandom) {
        auto engine = make_engine(gen, sub_seed);
        return fill(n, make_threshold(p, 64), [&engine] { return engine(); });
    }

    const std::uint64_t taps = gen.lfsr_taps != 0 ? gen.lfsr_taps : default_lfsr_taps(gen.lfsr_width);
    GaloisLfsr lfsr(gen.lfsr_width, taps, mix64(gen.master_seed ^ mix64(sub_seed)));
    return fill(n, make_threshold(p, gen.lfsr_width), [&lfsr] { return lfsr.next(); });
}

}  // namespace smax
