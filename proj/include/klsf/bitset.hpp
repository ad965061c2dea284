#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace klsf {

/// Fixed-length bitset sized at runtime. Bits past `size()` are always zero.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    std::size_t size() const noexcept { return nbits_; }

    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    void clear() { std::fill(words_.begin(), words_.end(), 0); }
    void set_all();

    std::size_t count() const noexcept;
    bool none() const noexcept;
    bool any() const noexcept { return !none(); }
    bool intersects(const Bitset& other) const;

    /// Index of the first set bit at or after `from`, or size() if none.
    std::size_t find_next(std::size_t from) const;
    std::size_t find_first() const { return find_next(0); }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t word = words_[w];
            while (word != 0) {
                f(w * 64 + static_cast<std::size_t>(std::countr_zero(word)));
                word &= word - 1;
            }
        }
    }

    /// 64 bits starting at `pos`; bits beyond size() read as zero.
    std::uint64_t read_word(std::size_t pos) const;

    /// OR `len` bits of `src` starting at `src_pos` into this bitset at `dst_pos`.
    void or_range(std::size_t dst_pos, const Bitset& src, std::size_t src_pos, std::size_t len);

    Bitset& operator|=(const Bitset& other);
    Bitset& operator&=(const Bitset& other);
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }

    bool operator==(const Bitset& other) const = default;

    /// Orders bitsets by their member lists, compared lexicographically.
    static std::strong_ordering lex_compare(const Bitset& a, const Bitset& b);

    const std::vector<std::uint64_t>& words() const noexcept { return words_; }

private:
    std::size_t nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace klsf
