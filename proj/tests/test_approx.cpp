#include <doctest.h>

#include <random>
#include <stdexcept>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "tworough/approx.hpp"

using namespace tworough;
using fixtures::us;
using fixtures::vs;

TEST_CASE("worked example approximations") {
    const BinaryRelation r = fixtures::worked_example();
    const Subset all_u = Subset::full(r.universes_ptr(), Side::U);

    CHECK(upper_approximation(r, vs(r, {"y1", "y2", "y6"})) == all_u);
    CHECK(upper_approximation(r, vs(r, {"y3", "y4", "y5"})) == all_u);
    CHECK(lower_approximation(r, vs(r, {"y1", "y2", "y6"})).empty());
    CHECK(lower_approximation(r, vs(r, {"y3", "y4", "y5"})).empty());

    CHECK(lower_approximation(r, vs(r, {"y1", "y2", "y4"})) == us(r, {"x3"}));
    CHECK(lower_approximation(r, vs(r, {"y3", "y5", "y6"})) == us(r, {"x2"}));
    CHECK(upper_approximation(r, vs(r, {"y1", "y2", "y4"})) == us(r, {"x1", "x3", "x4", "x5"}));
    CHECK(upper_approximation(r, vs(r, {"y3", "y5", "y6"})) == us(r, {"x1", "x2", "x4", "x5"}));

    CHECK(lower_approximation(r, vs(r, {"y3", "y6"})) == us(r, {"x2"}));
    CHECK(upper_approximation(r, vs(r, {"y3", "y6"})) == us(r, {"x2", "x4"}));
    CHECK(upper_approximation(r, vs(r, {"y5"})) == us(r, {"x1", "x4", "x5"}));

    const ApproxResult a = approximate(r, vs(r, {"y1", "y2", "y4"}));
    CHECK(a.boundary == us(r, {"x1", "x4", "x5"}));
    CHECK(a.type == RoughType::RoughlyDefinable);
}

TEST_CASE("1x1 full relation") {
    const BinaryRelation r = new_relation(Universes::indexed(1, 1), std::vector<std::vector<int>>{{1}});
    const Subset y = Subset::full(r.universes_ptr(), Side::V);
    CHECK(lower_approximation(r, y).is_full());
    CHECK(upper_approximation(r, y).is_full());
    CHECK(rough_type(r, y) == RoughType::ExternallyUndefinable);
    CHECK(rough_type(r, y.complement()) == RoughType::InternallyUndefinable);
}

TEST_CASE("exhaustive 3x3: every strategy matches the oracle on all of P(V)") {
    for (std::uint64_t k = 0; k < 512; ++k) {
        const auto m = oracle::matrix_from_code(k, 3, 3);
        const BinaryRelation r = new_relation(Universes::indexed(3, 3), m);
        const Subset solitary = solitary_set(r);
        for (std::uint64_t mask = 0; mask < 8; ++mask) {
            const oracle::Set ys = oracle::set_from_mask(mask, 3);
            const Subset y = Subset::of_indices(r.universes_ptr(), Side::V, {ys.begin(), ys.end()});
            const Subset lo = lower_approximation(r, y);
            const Subset up = upper_approximation(r, y);
            CHECK(oracle::indices_of(lo) == oracle::lower(m, ys));
            CHECK(oracle::indices_of(up) == oracle::upper(m, ys));
            CHECK(lower_approximation(r, y, Strategy::MatrixForm) == lo);
            CHECK(upper_approximation(r, y, Strategy::MatrixForm) == up);
            CHECK(upper_approximation(r, y, Strategy::NeighborhoodUnion) == up);
            CHECK(type_number(rough_type(r, y)) == oracle::type_of(m, ys));
            CHECK(solitary.is_subset_of(lo));
            CHECK((solitary & up).empty());
        }
    }
}

TEST_CASE("strategies agree across word boundaries") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t u = 1 + rng() % 140, v = 1 + rng() % 140;
        std::vector<Bitset> rows(u, Bitset(v));
        for (auto& row : rows) {
            for (std::size_t j = 0; j < v; ++j) {
                row.set(j, rng() % 4 == 0);
            }
        }
        const BinaryRelation r = new_relation(Universes::indexed(u, v), rows);
        Bitset bits(v);
        for (std::size_t j = 0; j < v; ++j) {
            bits.set(j, rng() & 1U);
        }
        const Subset y(r.universes_ptr(), Side::V, bits);
        CHECK(lower_approximation(r, y, Strategy::MatrixForm) == lower_approximation(r, y));
        CHECK(upper_approximation(r, y, Strategy::MatrixForm) == upper_approximation(r, y));
        CHECK(upper_approximation(r, y, Strategy::NeighborhoodUnion) == upper_approximation(r, y));
    }
}

TEST_CASE("approximations reject U-side and foreign subsets") {
    const BinaryRelation r = fixtures::worked_example();
    CHECK_THROWS_AS(lower_approximation(r, us(r, {"x1"})), SideMismatchError);
    CHECK_THROWS_AS(upper_approximation(r, Subset::full(Universes::indexed(5, 5), Side::V)),
                    SideMismatchError);
    CHECK_THROWS_AS(lower_approximation(r, vs(r, {"y1"}), Strategy::NeighborhoodUnion),
                    std::invalid_argument);
}

TEST_CASE("rough type names and parsing") {
    CHECK(classify_rough_type(false, false) == RoughType::RoughlyDefinable);
    CHECK(classify_rough_type(true, false) == RoughType::InternallyUndefinable);
    CHECK(classify_rough_type(false, true) == RoughType::ExternallyUndefinable);
    CHECK(classify_rough_type(true, true) == RoughType::TotallyUndefinable);
    for (RoughType t : kAllRoughTypes) {
        CHECK(parse_rough_type(to_string(t)) == t);
        CHECK(parse_rough_type(std::to_string(type_number(t))) == t);
        CHECK(parse_rough_type("T" + std::to_string(type_number(t))) == t);
        CHECK(rough_type_from_number(type_number(t)) == t);
    }
    CHECK(to_string(RoughType::TotallyUndefinable) == "Type4-TotallyUndefinable");
    CHECK(parse_rough_type("type3") == RoughType::ExternallyUndefinable);
    CHECK_FALSE(parse_rough_type("5").has_value());
    CHECK_FALSE(parse_rough_type("").has_value());
    CHECK_THROWS_AS(rough_type_from_number(0), std::invalid_argument);
}
