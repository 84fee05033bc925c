#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace smax {

/// Exact rate of ones o(X)/N, kept as an integer fraction.
struct Ratio {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    [[nodiscard]] double value() const { return static_cast<double>(num) / static_cast<double>(den); }

    friend bool operator==(const Ratio& x, const Ratio& y) {
        // Compare in lowest terms; cross-multiplying could overflow.
        const std::uint64_t gx = std::gcd(x.num, x.den);
        const std::uint64_t gy = std::gcd(y.num, y.den);
        return x.num / gx == y.num / gy && x.den / gx == y.den / gy;
    }
};

/// Packed stochastic bit stream of length N.
///
/// Bits are stored 64 per word, bit i lives in word i / 64 at position i % 64
/// (little-endian within the word). Bits past N in the last word are kept at
/// zero, so word-wise popcounts and gates never see them.
class BitStream {
  public:
    static constexpr std::size_t kWordBits = 64;

    /// All-zero stream of length n. Throws std::invalid_argument for n == 0.
    explicit BitStream(std::size_t n);

    static BitStream filled(std::size_t n, bool value);
    /// Parses '0'/'1' characters; anything else is rejected.
    static BitStream from_string(std::string_view bits);
    /// Takes ownership of packed words; bits past n are cleared.
    static BitStream from_words(std::vector<std::uint64_t> words, std::size_t n);

    [[nodiscard]] std::size_t size() const { return length_; }
    [[nodiscard]] std::size_t word_count() const { return words_.size(); }
    [[nodiscard]] std::span<const std::uint64_t> words() const { return words_; }

    [[nodiscard]] bool operator[](std::size_t i) const {
        return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
    }
    void set(std::size_t i, bool value) {
        const std::uint64_t mask = std::uint64_t{1} << (i % kWordBits);
        if (value) {
            words_[i / kWordBits] |= mask;
        } else {
            words_[i / kWordBits] &= ~mask;
        }
    }

    /// Mask of the valid bits in the last word.
    [[nodiscard]] std::uint64_t tail_mask() const;

    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const BitStream&, const BitStream&) = default;

  private:
    BitStream(std::vector<std::uint64_t> words, std::size_t n);
    void clear_tail();

    std::vector<std::uint64_t> words_;
    std::size_t length_ = 0;
};

/// Number of ones o(X).
[[nodiscard]] std::uint64_t ones(const BitStream& s);

/// Rate of ones o(X)/N, exact.
[[nodiscard]] Ratio rate(const BitStream& s);

/// Debug dump: one '0'/'1' character per bit followed by a newline.
void write_ascii(std::ostream& out, const BitStream& s);

}  // namespace smax
