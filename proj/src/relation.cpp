#include "tworough/relation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace tworough {

const char* to_string(Side side) noexcept { return side == Side::U ? "U" : "V"; }

// ---------------------------------------------------------------- Universes

bool Universes::is_valid_label(std::string_view label) noexcept {
    if (label.empty()) {
        return false;
    }
    return std::none_of(label.begin(), label.end(), [](char c) {
        return std::isspace(static_cast<unsigned char>(c)) != 0 || c == ':' || c == ',' ||
               c == '#';
    });
}

namespace {

std::unordered_map<std::string, std::size_t> index_labels(const std::vector<std::string>& labels,
                                                          Side side) {
    if (labels.empty()) {
        throw DimensionError(std::string("universe ") + to_string(side) + " must not be empty");
    }
    std::unordered_map<std::string, std::size_t> index;
    index.reserve(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (!Universes::is_valid_label(labels[i])) {
            throw DimensionError(std::string("invalid label '") + labels[i] + "' in universe " +
                                 to_string(side));
        }
        if (!index.emplace(labels[i], i).second) {
            throw DimensionError(std::string("duplicate label '") + labels[i] + "' in universe " +
                                 to_string(side));
        }
    }
    return index;
}

}  // namespace

Universes::Universes(std::vector<std::string> u_labels, std::vector<std::string> v_labels)
    : u_labels_(std::move(u_labels)), v_labels_(std::move(v_labels)) {
    u_index_ = index_labels(u_labels_, Side::U);
    v_index_ = index_labels(v_labels_, Side::V);
}

UniversesPtr Universes::create(std::vector<std::string> u_labels,
                               std::vector<std::string> v_labels) {
    return UniversesPtr(new Universes(std::move(u_labels), std::move(v_labels)));
}

UniversesPtr Universes::indexed(std::size_t u_size, std::size_t v_size) {
    std::vector<std::string> u;
    std::vector<std::string> v;
    for (std::size_t i = 1; i <= u_size; ++i) {
        u.push_back("x" + std::to_string(i));
    }
    for (std::size_t j = 1; j <= v_size; ++j) {
        v.push_back("y" + std::to_string(j));
    }
    return create(std::move(u), std::move(v));
}

const std::string& Universes::label(Side side, std::size_t index) const {
    const auto& l = labels(side);
    if (index >= l.size()) {
        throw LookupError(std::string("index ") + std::to_string(index) + " out of range for " +
                          to_string(side));
    }
    return l[index];
}

std::size_t Universes::index_of(Side side, std::string_view label) const {
    const auto& index = side == Side::U ? u_index_ : v_index_;
    auto it = index.find(std::string(label));
    if (it == index.end()) {
        throw LookupError(std::string("unknown ") + to_string(side) + " label '" +
                          std::string(label) + "'");
    }
    return it->second;
}

bool Universes::contains(Side side, std::string_view label) const {
    const auto& index = side == Side::U ? u_index_ : v_index_;
    return index.count(std::string(label)) != 0;
}

bool same_universes(const UniversesPtr& a, const UniversesPtr& b) noexcept {
    return a == b || (a && b && *a == *b);
}

// ------------------------------------------------------------------- Subset

Subset::Subset(UniversesPtr universes, Side side)
    : universes_(std::move(universes)), side_(side), bits_(universes_->size(side)) {}

Subset::Subset(UniversesPtr universes, Side side, Bitset bits)
    : universes_(std::move(universes)), side_(side), bits_(std::move(bits)) {
    if (bits_.size() != universes_->size(side_)) {
        throw DimensionError(std::string("subset width ") + std::to_string(bits_.size()) +
                             " does not match |" + tworough::to_string(side_) + "| = " +
                             std::to_string(universes_->size(side_)));
    }
}

Subset Subset::full(UniversesPtr universes, Side side) {
    const std::size_t n = universes->size(side);
    return Subset(std::move(universes), side, Bitset(n, true));
}

Subset Subset::of_indices(UniversesPtr universes, Side side,
                          const std::vector<std::size_t>& indices) {
    Subset s(std::move(universes), side);
    for (std::size_t i : indices) {
        if (i >= s.width()) {
            throw LookupError(std::string("index ") + std::to_string(i) + " out of range for " +
                              tworough::to_string(side));
        }
        s.bits_.set(i);
    }
    return s;
}

Subset Subset::of_labels(UniversesPtr universes, Side side,
                         const std::vector<std::string>& labels) {
    Subset s(std::move(universes), side);
    for (const auto& label : labels) {
        s.bits_.set(s.universes_->index_of(side, label));
    }
    return s;
}

bool Subset::contains(std::size_t index) const {
    if (index >= width()) {
        throw LookupError("subset index out of range");
    }
    return bits_.test(index);
}

bool Subset::contains(std::string_view label) const {
    return bits_.test(universes_->index_of(side_, label));
}

std::vector<std::string> Subset::labels() const {
    std::vector<std::string> out;
    const auto& all = universes_->labels(side_);
    for (std::size_t i = bits_.first(); i < bits_.size(); i = bits_.next(i)) {
        out.push_back(all[i]);
    }
    return out;
}

std::string Subset::to_string() const {
    std::string s = "{";
    bool first = true;
    for (const auto& l : labels()) {
        if (!first) {
            s += ", ";
        }
        s += l;
        first = false;
    }
    return s + "}";
}

Subset Subset::complement() const {
    return Subset(universes_, side_, ~bits_);
}

bool Subset::compatible_with(const Subset& other) const noexcept {
    return side_ == other.side_ && same_universes(universes_, other.universes_);
}

void Subset::require_compatible(const Subset& other, const char* op) const {
    if (!compatible_with(other)) {
        throw SideMismatchError(std::string(op) + ": subsets of " + tworough::to_string(side_) +
                                " and " + tworough::to_string(other.side_) +
                                " over different universes cannot be combined");
    }
}

bool Subset::is_subset_of(const Subset& other) const {
    require_compatible(other, "subset test");
    return bits_.is_subset_of(other.bits_);
}

Subset& Subset::operator|=(const Subset& other) {
    require_compatible(other, "union");
    bits_ |= other.bits_;
    return *this;
}

Subset& Subset::operator&=(const Subset& other) {
    require_compatible(other, "intersection");
    bits_ &= other.bits_;
    return *this;
}

Subset& Subset::operator-=(const Subset& other) {
    require_compatible(other, "difference");
    bits_.subtract(other.bits_);
    return *this;
}

// ---------------------------------------------------------------- Partition

std::string Partition::to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (i > 0) {
            s += ", ";
        }
        s += blocks[i].to_string();
    }
    return s + "}";
}

bool is_canonical_partition(const Partition& p) {
    if (p.blocks.empty()) {
        return false;
    }
    Bitset seen(p.blocks.front().width());
    std::size_t prev_min = 0;
    for (std::size_t i = 0; i < p.blocks.size(); ++i) {
        const Subset& b = p.blocks[i];
        if (b.side() != p.side || b.empty() || b.bits().intersects(seen)) {
            return false;
        }
        const std::size_t m = b.bits().first();
        if (i > 0 && m <= prev_min) {
            return false;
        }
        prev_min = m;
        seen |= b.bits();
    }
    return seen.all();
}

// ----------------------------------------------------------- BinaryRelation

BinaryRelation::BinaryRelation(UniversesPtr universes, std::vector<Bitset> rows)
    : universes_(std::move(universes)), rows_(std::move(rows)) {
    if (!universes_) {
        throw DimensionError("relation requires a universe pair");
    }
    const std::size_t nu = universes_->u_size();
    const std::size_t nv = universes_->v_size();
    if (rows_.size() != nu) {
        throw DimensionError("relation has " + std::to_string(rows_.size()) +
                             " rows but |U| = " + std::to_string(nu));
    }
    for (std::size_t i = 0; i < nu; ++i) {
        if (rows_[i].size() != nv) {
            throw DimensionError("row " + std::to_string(i + 1) + " (" +
                                 universes_->label(Side::U, i) + ") has width " +
                                 std::to_string(rows_[i].size()) + ", expected |V| = " +
                                 std::to_string(nv));
        }
    }
    columns_ = transpose(rows_, nv);
}

std::string BinaryRelation::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (i > 0) {
            s += '/';
        }
        s += rows_[i].to_string();
    }
    return s;
}

BinaryRelation new_relation(UniversesPtr universes, std::vector<Bitset> rows) {
    return BinaryRelation(std::move(universes), std::move(rows));
}

BinaryRelation new_relation(UniversesPtr universes, const std::vector<std::vector<int>>& rows) {
    std::vector<Bitset> bits;
    bits.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        Bitset b(rows[i].size());
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            if (rows[i][j] != 0 && rows[i][j] != 1) {
                throw DimensionError("row " + std::to_string(i + 1) + " has a non-0/1 entry");
            }
            b.set(j, rows[i][j] == 1);
        }
        bits.push_back(std::move(b));
    }
    return BinaryRelation(std::move(universes), std::move(bits));
}

// ------------------------------------------------------------ Neighborhoods

Subset right_neighborhood(const BinaryRelation& r, std::size_t x) {
    if (x >= r.u_size()) {
        throw LookupError("U index " + std::to_string(x) + " out of range");
    }
    return Subset(r.universes_ptr(), Side::V, r.row(x));
}

Subset right_neighborhood(const BinaryRelation& r, std::string_view x) {
    return right_neighborhood(r, r.universes().index_of(Side::U, x));
}

Subset left_neighborhood(const BinaryRelation& r, std::size_t y) {
    if (y >= r.v_size()) {
        throw LookupError("V index " + std::to_string(y) + " out of range");
    }
    return Subset(r.universes_ptr(), Side::U, r.column(y));
}

Subset left_neighborhood(const BinaryRelation& r, std::string_view y) {
    return left_neighborhood(r, r.universes().index_of(Side::V, y));
}

Subset solitary_set(const BinaryRelation& r) {
    Bitset s(r.u_size());
    for (std::size_t x = 0; x < r.u_size(); ++x) {
        s.set(x, r.row(x).none());
    }
    return Subset(r.universes_ptr(), Side::U, std::move(s));
}

bool is_serial(const BinaryRelation& r) { return solitary_set(r).empty(); }

namespace {

// Groups indices by equal key bitsets; blocks come out in order of first
// member, which is the canonical order.
Partition group_by_equal(const std::vector<Bitset>& keys, const UniversesPtr& universes,
                         Side side) {
    std::unordered_map<Bitset, std::size_t, BitsetHash> block_of;
    std::vector<Bitset> blocks;
    for (std::size_t i = 0; i < keys.size(); ++i) {
        auto [it, inserted] = block_of.emplace(keys[i], blocks.size());
        if (inserted) {
            blocks.emplace_back(keys.size());
        }
        blocks[it->second].set(i);
    }
    Partition p{side, {}};
    p.blocks.reserve(blocks.size());
    for (auto& b : blocks) {
        p.blocks.emplace_back(universes, side, std::move(b));
    }
    return p;
}

std::vector<Bitset> kernel_matrix(const std::vector<Bitset>& keys) {
    const std::size_t n = keys.size();
    std::vector<Bitset> m(n, Bitset(n));
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            m[a].set(b, keys[a] == keys[b]);
        }
    }
    return m;
}

}  // namespace

QuotientPartitions quotient_partitions(const BinaryRelation& r) {
    return {group_by_equal(r.rows(), r.universes_ptr(), Side::U),
            group_by_equal(r.columns(), r.universes_ptr(), Side::V)};
}

std::vector<Bitset> u_kernel_matrix(const BinaryRelation& r) { return kernel_matrix(r.rows()); }

std::vector<Bitset> v_kernel_matrix(const BinaryRelation& r) { return kernel_matrix(r.columns()); }

std::vector<Bitset> compose_after_u_kernel(const BinaryRelation& r) {
    return boolean_product(u_kernel_matrix(r), r.rows(), r.v_size());
}

std::vector<Bitset> compose_v_kernel_after(const BinaryRelation& r) {
    return boolean_product(r.rows(), v_kernel_matrix(r), r.v_size());
}

bool saturation_identity_holds(const BinaryRelation& r) {
    return compose_v_kernel_after(r) == r.rows() && compose_after_u_kernel(r) == r.rows();
}

}  // namespace tworough
