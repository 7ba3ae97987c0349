#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace tworough {

// Fixed-width dynamic bitset. Bits past size() in the last word are always
// kept at zero, so word-wise equality and hashing are exact.
class Bitset {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;

    Bitset() = default;
    explicit Bitset(std::size_t size, bool value = false);

    // Low `size` bits of `pattern`; size must be <= 64.
    static Bitset from_word(std::size_t size, Word pattern);

    std::size_t size() const noexcept { return size_; }
    std::size_t word_count() const noexcept { return words_.size(); }
    const std::vector<Word>& words() const noexcept { return words_; }

    bool test(std::size_t i) const noexcept {
        return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
    }
    void set(std::size_t i, bool value = true) noexcept {
        const Word mask = Word{1} << (i % kWordBits);
        if (value) {
            words_[i / kWordBits] |= mask;
        } else {
            words_[i / kWordBits] &= ~mask;
        }
    }
    void reset(std::size_t i) noexcept { set(i, false); }

    std::size_t count() const noexcept;
    bool none() const noexcept;
    bool any() const noexcept { return !none(); }
    bool all() const noexcept;

    // Index of the lowest set bit, or size() when empty.
    std::size_t first() const noexcept;
    // Next set bit strictly after i, or size().
    std::size_t next(std::size_t i) const noexcept;
    std::vector<std::size_t> indices() const;

    bool is_subset_of(const Bitset& other) const noexcept;
    bool intersects(const Bitset& other) const noexcept;

    Bitset& operator&=(const Bitset& other) noexcept;
    Bitset& operator|=(const Bitset& other) noexcept;
    Bitset& operator^=(const Bitset& other) noexcept;
    // Set difference: this \ other.
    Bitset& subtract(const Bitset& other) noexcept;
    Bitset& flip() noexcept;

    friend Bitset operator&(Bitset a, const Bitset& b) noexcept { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) noexcept { return a |= b; }
    friend Bitset operator^(Bitset a, const Bitset& b) noexcept { return a ^= b; }
    friend Bitset operator-(Bitset a, const Bitset& b) noexcept { return a.subtract(b); }
    friend Bitset operator~(Bitset a) noexcept { return a.flip(); }

    friend bool operator==(const Bitset&, const Bitset&) = default;

    // Mask of valid bits in word w.
    Word word_mask(std::size_t w) const noexcept;

    // "0101..." with bit 0 first.
    std::string to_string() const;

    std::size_t hash() const noexcept;

private:
    void trim() noexcept;

    std::size_t size_ = 0;
    std::vector<Word> words_;
};

struct BitsetHash {
    std::size_t operator()(const Bitset& b) const noexcept { return b.hash(); }
};

// Boolean matrix product over ({0,1}, or, and): row i of the result is the
// union of rhs[j] over every j set in lhs[i]. lhs rows must have width
// rhs.size(); every rhs row has width `width`.
std::vector<Bitset> boolean_product(const std::vector<Bitset>& lhs,
                                    const std::vector<Bitset>& rhs,
                                    std::size_t width);

std::vector<Bitset> transpose(const std::vector<Bitset>& rows, std::size_t width);

}  // namespace tworough
