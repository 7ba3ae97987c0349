#pragma once

// Binary relations between two finite labeled universes U and V, the
// subsets that live on either side, and the neighborhood structure the
// relation induces.

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tworough/bitset.hpp"
#include "tworough/errors.hpp"

namespace tworough {

enum class Side { U, V };

const char* to_string(Side side) noexcept;

class Universes;
using UniversesPtr = std::shared_ptr<const Universes>;

// The pair (U, V) of ordered, labeled universes. Labels are non-empty and
// contain no whitespace, ':', ',' or '#'; no side may be empty.
class Universes {
public:
    static UniversesPtr create(std::vector<std::string> u_labels,
                               std::vector<std::string> v_labels);
    // U = {x1..x<u_size>}, V = {y1..y<v_size>}.
    static UniversesPtr indexed(std::size_t u_size, std::size_t v_size);

    std::size_t size(Side side) const noexcept { return labels(side).size(); }
    std::size_t u_size() const noexcept { return u_labels_.size(); }
    std::size_t v_size() const noexcept { return v_labels_.size(); }

    const std::vector<std::string>& labels(Side side) const noexcept {
        return side == Side::U ? u_labels_ : v_labels_;
    }
    const std::string& label(Side side, std::size_t index) const;
    std::size_t index_of(Side side, std::string_view label) const;
    bool contains(Side side, std::string_view label) const;

    friend bool operator==(const Universes& a, const Universes& b) {
        return a.u_labels_ == b.u_labels_ && a.v_labels_ == b.v_labels_;
    }

    static bool is_valid_label(std::string_view label) noexcept;

private:
    Universes(std::vector<std::string> u_labels, std::vector<std::string> v_labels);

    std::vector<std::string> u_labels_;
    std::vector<std::string> v_labels_;
    std::unordered_map<std::string, std::size_t> u_index_;
    std::unordered_map<std::string, std::size_t> v_index_;
};

bool same_universes(const UniversesPtr& a, const UniversesPtr& b) noexcept;

// A subset of one side of a universe pair.
class Subset {
public:
    Subset(UniversesPtr universes, Side side);
    Subset(UniversesPtr universes, Side side, Bitset bits);

    static Subset full(UniversesPtr universes, Side side);
    static Subset of_indices(UniversesPtr universes, Side side,
                             const std::vector<std::size_t>& indices);
    static Subset of_labels(UniversesPtr universes, Side side,
                            const std::vector<std::string>& labels);

    Side side() const noexcept { return side_; }
    const Universes& universes() const noexcept { return *universes_; }
    const UniversesPtr& universes_ptr() const noexcept { return universes_; }
    const Bitset& bits() const noexcept { return bits_; }

    std::size_t width() const noexcept { return bits_.size(); }
    std::size_t count() const noexcept { return bits_.count(); }
    bool empty() const noexcept { return bits_.none(); }
    bool is_full() const noexcept { return bits_.all(); }
    bool contains(std::size_t index) const;
    bool contains(std::string_view label) const;

    std::vector<std::size_t> indices() const { return bits_.indices(); }
    std::vector<std::string> labels() const;
    // "{x1, x3}" or "{}".
    std::string to_string() const;

    Subset complement() const;
    bool is_subset_of(const Subset& other) const;
    bool compatible_with(const Subset& other) const noexcept;

    Subset& operator|=(const Subset& other);
    Subset& operator&=(const Subset& other);
    Subset& operator-=(const Subset& other);

    friend Subset operator|(Subset a, const Subset& b) { return a |= b; }
    friend Subset operator&(Subset a, const Subset& b) { return a &= b; }
    friend Subset operator-(Subset a, const Subset& b) { return a -= b; }

    friend bool operator==(const Subset& a, const Subset& b) {
        return a.side_ == b.side_ && a.bits_ == b.bits_ && same_universes(a.universes_, b.universes_);
    }

private:
    void require_compatible(const Subset& other, const char* op) const;

    UniversesPtr universes_;
    Side side_;
    Bitset bits_;
};

// Blocks are pairwise disjoint, non-empty, cover the side, and are ordered
// by their minimum element index.
struct Partition {
    Side side;
    std::vector<Subset> blocks;

    std::string to_string() const;
};

bool is_canonical_partition(const Partition& p);

class BinaryRelation {
public:
    BinaryRelation(UniversesPtr universes, std::vector<Bitset> rows);

    const Universes& universes() const noexcept { return *universes_; }
    const UniversesPtr& universes_ptr() const noexcept { return universes_; }
    std::size_t u_size() const noexcept { return rows_.size(); }
    std::size_t v_size() const noexcept { return columns_.size(); }

    bool holds(std::size_t x, std::size_t y) const noexcept { return rows_[x].test(y); }
    const Bitset& row(std::size_t x) const { return rows_.at(x); }
    const Bitset& column(std::size_t y) const { return columns_.at(y); }
    const std::vector<Bitset>& rows() const noexcept { return rows_; }
    const std::vector<Bitset>& columns() const noexcept { return columns_; }

    // Row-major "110010/001001/..." rendering, for diagnostics.
    std::string to_string() const;

    friend bool operator==(const BinaryRelation& a, const BinaryRelation& b) {
        return a.rows_ == b.rows_ && same_universes(a.universes_, b.universes_);
    }

private:
    UniversesPtr universes_;
    std::vector<Bitset> rows_;
    std::vector<Bitset> columns_;
};

BinaryRelation new_relation(UniversesPtr universes, std::vector<Bitset> rows);
BinaryRelation new_relation(UniversesPtr universes, const std::vector<std::vector<int>>& rows);

// r(x) = {y : (x, y) in R}
Subset right_neighborhood(const BinaryRelation& r, std::size_t x);
Subset right_neighborhood(const BinaryRelation& r, std::string_view x);
// l(y) = {x : (x, y) in R}
Subset left_neighborhood(const BinaryRelation& r, std::size_t y);
Subset left_neighborhood(const BinaryRelation& r, std::string_view y);

// Elements of U with an empty right neighborhood.
Subset solitary_set(const BinaryRelation& r);
bool is_serial(const BinaryRelation& r);

struct QuotientPartitions {
    Partition u;  // x ~ x' iff r(x) = r(x')
    Partition v;  // y ~ y' iff l(y) = l(y')
};
QuotientPartitions quotient_partitions(const BinaryRelation& r);

// Square Boolean matrices of the kernel equivalences E_U and E_V.
std::vector<Bitset> u_kernel_matrix(const BinaryRelation& r);
std::vector<Bitset> v_kernel_matrix(const BinaryRelation& r);

// Compositions, read with the first-applied relation on the right:
//   R o E_U = {(x, y) : exists x', (x, x') in E_U and (x', y) in R}
//   E_V o R = {(x, y) : exists y', (x, y') in R and (y', y) in E_V}
std::vector<Bitset> compose_after_u_kernel(const BinaryRelation& r);
std::vector<Bitset> compose_v_kernel_after(const BinaryRelation& r);

// E_V o R = R = R o E_U, computed through both explicit compositions.
bool saturation_identity_holds(const BinaryRelation& r);

}  // namespace tworough
