#include "klsf/bitset.hpp"

#include <algorithm>
#include <stdexcept>

namespace klsf {

void Bitset::set_all() {
    std::fill(words_.begin(), words_.end(), ~std::uint64_t{0});
    if (const std::size_t tail = nbits_ & 63; tail != 0) {
        words_.back() = (std::uint64_t{1} << tail) - 1;
    }
}

std::size_t Bitset::count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

bool Bitset::none() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

bool Bitset::intersects(const Bitset& other) const {
    if (other.nbits_ != nbits_) throw std::invalid_argument("Bitset: size mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if (words_[i] & other.words_[i]) return true;
    }
    return false;
}

std::size_t Bitset::find_next(std::size_t from) const {
    if (from >= nbits_) return nbits_;
    std::size_t w = from >> 6;
    std::uint64_t word = words_[w] & (~std::uint64_t{0} << (from & 63));
    while (true) {
        if (word != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(word));
        if (++w == words_.size()) return nbits_;
        word = words_[w];
    }
}

std::uint64_t Bitset::read_word(std::size_t pos) const {
    const std::size_t w = pos >> 6;
    const unsigned shift = pos & 63;
    if (w >= words_.size()) return 0;
    std::uint64_t lo = words_[w] >> shift;
    if (shift != 0 && w + 1 < words_.size()) lo |= words_[w + 1] << (64 - shift);
    return lo;
}

void Bitset::or_range(std::size_t dst_pos, const Bitset& src, std::size_t src_pos, std::size_t len) {
    while (len > 0) {
        const std::size_t chunk = std::min<std::size_t>(len, 64);
        std::uint64_t bits = src.read_word(src_pos);
        if (chunk < 64) bits &= (std::uint64_t{1} << chunk) - 1;
        const std::size_t w = dst_pos >> 6;
        const unsigned shift = dst_pos & 63;
        words_[w] |= bits << shift;
        if (shift != 0 && (bits >> (64 - shift)) != 0) words_[w + 1] |= bits >> (64 - shift);
        dst_pos += chunk;
        src_pos += chunk;
        len -= chunk;
    }
}

Bitset& Bitset::operator|=(const Bitset& other) {
    if (other.nbits_ != nbits_) throw std::invalid_argument("Bitset: size mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
}

Bitset& Bitset::operator&=(const Bitset& other) {
    if (other.nbits_ != nbits_) throw std::invalid_argument("Bitset: size mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
}

std::strong_ordering Bitset::lex_compare(const Bitset& a, const Bitset& b) {
    std::size_t i = a.find_first();
    std::size_t j = b.find_first();
    while (i < a.nbits_ && j < b.nbits_) {
        if (i != j) return i <=> j;
        i = a.find_next(i + 1);
        j = b.find_next(j + 1);
    }
    const bool a_done = i >= a.nbits_;
    const bool b_done = j >= b.nbits_;
    if (a_done && b_done) return std::strong_ordering::equal;
    return a_done ? std::strong_ordering::less : std::strong_ordering::greater;
}

}  // namespace klsf
