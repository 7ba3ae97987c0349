#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "tworough/relation.hpp"

namespace tworough {

// How an approximation is evaluated. All strategies must agree bit for bit.
enum class Strategy {
    // Row containment: r(x) subset of Y, r(x) meets Y.
    SetForm,
    // Min/max over {0,1}: lower(x) = AND_y ((1 - R(x,y)) OR Y(y)),
    // upper(x) = OR_y (R(x,y) AND Y(y)), swept column by column.
    MatrixForm,
    // Upper only: union of the left neighborhoods l(y), y in Y.
    NeighborhoodUnion,
};

// {x in U : r(x) subset of Y}. Solitary elements always belong.
Subset lower_approximation(const BinaryRelation& r, const Subset& y,
                           Strategy strategy = Strategy::SetForm);
// {x in U : r(x) meets Y}.
Subset upper_approximation(const BinaryRelation& r, const Subset& y,
                           Strategy strategy = Strategy::SetForm);
// upper \ lower
Subset boundary(const BinaryRelation& r, const Subset& y);

enum class RoughType : std::uint8_t {
    RoughlyDefinable = 1,         // lower != {}, upper != U
    InternallyUndefinable = 2,    // lower == {}, upper != U
    ExternallyUndefinable = 3,    // lower != {}, upper == U
    TotallyUndefinable = 4,       // lower == {}, upper == U
};

inline constexpr std::array<RoughType, 4> kAllRoughTypes = {
    RoughType::RoughlyDefinable, RoughType::InternallyUndefinable,
    RoughType::ExternallyUndefinable, RoughType::TotallyUndefinable};

inline int type_number(RoughType t) noexcept { return static_cast<int>(t); }
RoughType rough_type_from_number(int n);
// "Type1-RoughlyDefinable" etc.
std::string to_string(RoughType t);
// Accepts "1".."4", "T1", "Type1" or the full tag.
std::optional<RoughType> parse_rough_type(std::string_view text);

RoughType classify_rough_type(bool lower_empty, bool upper_full) noexcept;
RoughType rough_type(const BinaryRelation& r, const Subset& y);

struct ApproxResult {
    Subset lower;
    Subset upper;
    Subset boundary;
    RoughType type;
};

ApproxResult approximate(const BinaryRelation& r, const Subset& y);

}  // namespace tworough
