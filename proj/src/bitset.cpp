#include "tworough/bitset.hpp"

#include <cassert>
#include <stdexcept>

namespace tworough {

namespace {

std::size_t words_for(std::size_t bits) { return (bits + Bitset::kWordBits - 1) / Bitset::kWordBits; }

}  // namespace

Bitset::Bitset(std::size_t size, bool value)
    : size_(size), words_(words_for(size), value ? ~Word{0} : Word{0}) {
    trim();
}

Bitset Bitset::from_word(std::size_t size, Word pattern) {
    if (size > kWordBits) {
        throw std::invalid_argument("Bitset::from_word: size exceeds one word");
    }
    Bitset b(size);
    if (size > 0) {
        b.words_[0] = pattern;
        b.trim();
    }
    return b;
}

Bitset::Word Bitset::word_mask(std::size_t w) const noexcept {
    const std::size_t tail = size_ % kWordBits;
    if (w + 1 == words_.size() && tail != 0) {
        return (Word{1} << tail) - 1;
    }
    return ~Word{0};
}

void Bitset::trim() noexcept {
    if (!words_.empty()) {
        words_.back() &= word_mask(words_.size() - 1);
    }
}

std::size_t Bitset::count() const noexcept {
    std::size_t n = 0;
    for (Word w : words_) {
        n += static_cast<std::size_t>(std::popcount(w));
    }
    return n;
}

bool Bitset::none() const noexcept {
    for (Word w : words_) {
        if (w != 0) {
            return false;
        }
    }
    return true;
}

bool Bitset::all() const noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if (words_[w] != word_mask(w)) {
            return false;
        }
    }
    return true;
}

std::size_t Bitset::first() const noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if (words_[w] != 0) {
            return w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w]));
        }
    }
    return size_;
}

std::size_t Bitset::next(std::size_t i) const noexcept {
    ++i;
    if (i >= size_) {
        return size_;
    }
    std::size_t w = i / kWordBits;
    Word cur = words_[w] & (~Word{0} << (i % kWordBits));
    while (true) {
        if (cur != 0) {
            return w * kWordBits + static_cast<std::size_t>(std::countr_zero(cur));
        }
        if (++w == words_.size()) {
            return size_;
        }
        cur = words_[w];
    }
}

std::vector<std::size_t> Bitset::indices() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for (std::size_t i = first(); i < size_; i = next(i)) {
        out.push_back(i);
    }
    return out;
}

bool Bitset::is_subset_of(const Bitset& other) const noexcept {
    assert(size_ == other.size_);
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if ((words_[w] & ~other.words_[w]) != 0) {
            return false;
        }
    }
    return true;
}

bool Bitset::intersects(const Bitset& other) const noexcept {
    assert(size_ == other.size_);
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if ((words_[w] & other.words_[w]) != 0) {
            return true;
        }
    }
    return false;
}

Bitset& Bitset::operator&=(const Bitset& other) noexcept {
    assert(size_ == other.size_);
    for (std::size_t w = 0; w < words_.size(); ++w) {
        words_[w] &= other.words_[w];
    }
    return *this;
}

Bitset& Bitset::operator|=(const Bitset& other) noexcept {
    assert(size_ == other.size_);
    for (std::size_t w = 0; w < words_.size(); ++w) {
        words_[w] |= other.words_[w];
    }
    return *this;
}

Bitset& Bitset::operator^=(const Bitset& other) noexcept {
    assert(size_ == other.size_);
    for (std::size_t w = 0; w < words_.size(); ++w) {
        words_[w] ^= other.words_[w];
    }
    return *this;
}

Bitset& Bitset::subtract(const Bitset& other) noexcept {
    assert(size_ == other.size_);
    for (std::size_t w = 0; w < words_.size(); ++w) {
        words_[w] &= ~other.words_[w];
    }
    return *this;
}

Bitset& Bitset::flip() noexcept {
    for (Word& w : words_) {
        w = ~w;
    }
    trim();
    return *this;
}

std::string Bitset::to_string() const {
    std::string s(size_, '0');
    for (std::size_t i = first(); i < size_; i = next(i)) {
        s[i] = '1';
    }
    return s;
}

std::size_t Bitset::hash() const noexcept {
    // FNV-style mix over words and size.
    std::size_t h = 1469598103934665603ULL ^ size_;
    for (Word w : words_) {
        h ^= static_cast<std::size_t>(w);
        h *= 1099511628211ULL;
        h ^= h >> 29;
    }
    return h;
}

std::vector<Bitset> boolean_product(const std::vector<Bitset>& lhs,
                                    const std::vector<Bitset>& rhs,
                                    std::size_t width) {
    std::vector<Bitset> out;
    out.reserve(lhs.size());
    for (const Bitset& row : lhs) {
        assert(row.size() == rhs.size());
        Bitset acc(width);
        for (std::size_t j = row.first(); j < row.size(); j = row.next(j)) {
            acc |= rhs[j];
        }
        out.push_back(std::move(acc));
    }
    return out;
}

std::vector<Bitset> transpose(const std::vector<Bitset>& rows, std::size_t width) {
    std::vector<Bitset> cols(width, Bitset(rows.size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = rows[i].first(); j < width; j = rows[i].next(j)) {
            cols[j].set(i);
        }
    }
    return cols;
}

}  // namespace tworough
