#include "tworough/approx.hpp"

#include <cctype>

namespace tworough {

namespace {

void require_v_subset(const BinaryRelation& r, const Subset& y) {
    if (y.side() != Side::V) {
        throw SideMismatchError("approximations take a V-side subset, got a U-side one");
    }
    if (!same_universes(r.universes_ptr(), y.universes_ptr())) {
        throw SideMismatchError("subset is over different universes than the relation");
    }
}

Bitset lower_set_form(const BinaryRelation& r, const Bitset& y) {
    Bitset out(r.u_size());
    for (std::size_t x = 0; x < r.u_size(); ++x) {
        out.set(x, r.row(x).is_subset_of(y));
    }
    return out;
}

Bitset upper_set_form(const BinaryRelation& r, const Bitset& y) {
    Bitset out(r.u_size());
    for (std::size_t x = 0; x < r.u_size(); ++x) {
        out.set(x, r.row(x).intersects(y));
    }
    return out;
}

// Each column contributes the vector ((1 - R(., y)) max Y(y)) and the
// results are folded with min; all x are processed together, word-wise.
Bitset lower_matrix_form(const BinaryRelation& r, const Bitset& y) {
    Bitset acc(r.u_size(), true);
    for (std::size_t j = 0; j < r.v_size(); ++j) {
        // Y(y) = 1 makes the term all ones, the identity for min.
        if (!y.test(j)) {
            acc &= ~r.column(j);
        }
    }
    return acc;
}

Bitset upper_matrix_form(const BinaryRelation& r, const Bitset& y) {
    Bitset acc(r.u_size());
    for (std::size_t j = 0; j < r.v_size(); ++j) {
        // Y(y) = 0 makes the term all zeros, the identity for max.
        if (y.test(j)) {
            acc |= r.column(j);
        }
    }
    return acc;
}

Bitset upper_neighborhood_union(const BinaryRelation& r, const Subset& y) {
    Subset acc(r.universes_ptr(), Side::U);
    for (std::size_t j : y.indices()) {
        acc |= left_neighborhood(r, j);
    }
    return acc.bits();
}

}  // namespace

Subset lower_approximation(const BinaryRelation& r, const Subset& y, Strategy strategy) {
    require_v_subset(r, y);
    switch (strategy) {
        case Strategy::SetForm:
            return Subset(r.universes_ptr(), Side::U, lower_set_form(r, y.bits()));
        case Strategy::MatrixForm:
            return Subset(r.universes_ptr(), Side::U, lower_matrix_form(r, y.bits()));
        case Strategy::NeighborhoodUnion:
            break;
    }
    throw std::invalid_argument("lower approximation has no neighborhood-union form");
}

Subset upper_approximation(const BinaryRelation& r, const Subset& y, Strategy strategy) {
    require_v_subset(r, y);
    switch (strategy) {
        case Strategy::SetForm:
            return Subset(r.universes_ptr(), Side::U, upper_set_form(r, y.bits()));
        case Strategy::MatrixForm:
            return Subset(r.universes_ptr(), Side::U, upper_matrix_form(r, y.bits()));
        case Strategy::NeighborhoodUnion:
            return Subset(r.universes_ptr(), Side::U, upper_neighborhood_union(r, y));
    }
    throw std::invalid_argument("unknown strategy");
}

Subset boundary(const BinaryRelation& r, const Subset& y) {
    return upper_approximation(r, y) - lower_approximation(r, y);
}

RoughType rough_type_from_number(int n) {
    if (n < 1 || n > 4) {
        throw std::invalid_argument("rough type number must be 1..4");
    }
    return static_cast<RoughType>(n);
}

std::string to_string(RoughType t) {
    switch (t) {
        case RoughType::RoughlyDefinable:
            return "Type1-RoughlyDefinable";
        case RoughType::InternallyUndefinable:
            return "Type2-InternallyUndefinable";
        case RoughType::ExternallyUndefinable:
            return "Type3-ExternallyUndefinable";
        case RoughType::TotallyUndefinable:
            return "Type4-TotallyUndefinable";
    }
    return "?";
}

std::optional<RoughType> parse_rough_type(std::string_view text) {
    std::string s;
    for (char c : text) {
        s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    for (RoughType t : kAllRoughTypes) {
        const std::string n = std::to_string(type_number(t));
        std::string full = to_string(t);
        for (char& c : full) {
            c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        }
        if (s == n || s == "t" + n || s == "type" + n || s == full) {
            return t;
        }
    }
    return std::nullopt;
}

RoughType classify_rough_type(bool lower_empty, bool upper_full) noexcept {
    if (!lower_empty) {
        return upper_full ? RoughType::ExternallyUndefinable : RoughType::RoughlyDefinable;
    }
    return upper_full ? RoughType::TotallyUndefinable : RoughType::InternallyUndefinable;
}

RoughType rough_type(const BinaryRelation& r, const Subset& y) {
    return classify_rough_type(lower_approximation(r, y).empty(),
                               upper_approximation(r, y).is_full());
}

ApproxResult approximate(const BinaryRelation& r, const Subset& y) {
    Subset lower = lower_approximation(r, y);
    Subset upper = upper_approximation(r, y);
    Subset bnd = upper - lower;
    const RoughType t = classify_rough_type(lower.empty(), upper.is_full());
    return {std::move(lower), std::move(upper), std::move(bnd), t};
}

}  // namespace tworough
