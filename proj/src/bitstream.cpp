#include "smax/bitstream.hpp"

#include <bit>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace smax {

namespace {

std::size_t words_for(std::size_t n) { return (n + BitStream::kWordBits - 1) / BitStream::kWordBits; }

void require_length(std::size_t n) {
    if (n == 0) {
        throw std::invalid_argument("bit stream length must be at least 1");
    }
}

}  // namespace

BitStream::BitStream(std::size_t n) : length_(n) {
    require_length(n);
    words_.assign(words_for(n), 0);
}

BitStream::BitStream(std::vector<std::uint64_t> words, std::size_t n) : words_(std::move(words)), length_(n) {
    require_length(n);
    if (words_.size() != words_for(n)) {
        throw std::invalid_argument("word count does not match bit stream length");
    }
    clear_tail();
}

BitStream BitStream::filled(std::size_t n, bool value) {
    require_length(n);
    return BitStream(std::vector<std::uint64_t>(words_for(n), value ? ~std::uint64_t{0} : 0), n);
}

BitStream BitStream::from_string(std::string_view bits) {
    BitStream s(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] != '0' && bits[i] != '1') {
            throw std::invalid_argument("bit stream text may only contain '0' and '1'");
        }
        s.set(i, bits[i] == '1');
    }
    return s;
}

BitStream BitStream::from_words(std::vector<std::uint64_t> words, std::size_t n) {
    return BitStream(std::move(words), n);
}

std::uint64_t BitStream::tail_mask() const {
    const std::size_t used = length_ % kWordBits;
    return used == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << used) - 1;
}

void BitStream::clear_tail() { words_.back() &= tail_mask(); }

std::string BitStream::to_string() const {
    std::string text(length_, '0');
    for (std::size_t i = 0; i < length_; ++i) {
        if ((*this)[i]) {
            text[i] = '1';
        }
    }
    return text;
}

std::uint64_t ones(const BitStream& s) {
    const auto words = s.words();
    return std::accumulate(words.begin(), words.end(), std::uint64_t{0},
                           [](std::uint64_t acc, std::uint64_t w) { return acc + std::popcount(w); });
}

Ratio rate(const BitStream& s) { return Ratio{ones(s), s.size()}; }

void write_ascii(std::ostream& out, const BitStream& s) { out << s.to_string() << '\n'; }

}  // namespace smax
