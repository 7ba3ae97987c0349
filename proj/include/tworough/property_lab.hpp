#pragma once

// Small-model verification: relation generators, the algebraic laws of the
// approximation operators, the seriality criterion, relation
// reconstruction, and conformance of rough types under union and
// intersection against the expected type tables.

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "tworough/approx.hpp"
#include "tworough/classification.hpp"
#include "tworough/ratio.hpp"
#include "tworough/relation.hpp"

namespace tworough {

// ------------------------------------------------------------ generation

enum class GenerationMode { Exhaustive, Random };

// Exhaustive enumeration is capped at 2^20 relations.
inline constexpr std::size_t kExhaustiveCellCap = 20;

struct GeneratorConfig {
    std::size_t u_size = 1;
    std::size_t v_size = 1;
    GenerationMode mode = GenerationMode::Exhaustive;
    Ratio density{1, 2};      // random mode: per-cell probability
    std::uint64_t seed = 0;   // random mode
    std::size_t count = 1;    // random mode
    // Random mode: draw each relation's shape uniformly from
    // [1, u_size] x [1, v_size] instead of using the fixed shape.
    bool vary_shape = false;

    static GeneratorConfig exhaustive(std::size_t u, std::size_t v);
    static GeneratorConfig random(std::size_t u, std::size_t v, Ratio density, std::uint64_t seed,
                                  std::size_t count, bool vary_shape = false);

    // Throws CapExceededError or std::invalid_argument.
    void validate() const;
};

// Random-access view of the relations a config describes. Exhaustive mode
// yields relation k with cell (i, j) = bit (i * |V| + j) of k; random mode
// derives relation k from (seed, k) alone, so the stream does not depend on
// consumption order.
class RelationStream {
public:
    explicit RelationStream(GeneratorConfig config);

    std::size_t size() const noexcept { return size_; }
    BinaryRelation at(std::size_t k) const;
    const GeneratorConfig& config() const noexcept { return config_; }

    class iterator {
    public:
        using value_type = BinaryRelation;
        using difference_type = std::ptrdiff_t;

        iterator(const RelationStream* stream, std::size_t k) : stream_(stream), k_(k) {}
        BinaryRelation operator*() const { return stream_->at(k_); }
        iterator& operator++() {
            ++k_;
            return *this;
        }
        bool operator==(const iterator& o) const { return k_ == o.k_; }
        bool operator!=(const iterator& o) const { return k_ != o.k_; }

    private:
        const RelationStream* stream_;
        std::size_t k_;
    };

    iterator begin() const { return {this, 0}; }
    iterator end() const { return {this, size_}; }

private:
    const UniversesPtr& universes_for(std::size_t u, std::size_t v) const;

    GeneratorConfig config_;
    std::size_t size_ = 0;
    // One entry for fixed shapes, else indexed [(u - 1) * v_size + (v - 1)].
    std::vector<UniversesPtr> universes_;
};

RelationStream generate_relations(const GeneratorConfig& config);

// Every classification of V with more than one block, blocks ordered by
// minimum element and named Y1, Y2, ...
std::vector<Classification> all_classifications(const UniversesPtr& universes);
// A random classification of V (|V| >= 2) with 2..|V| blocks.
Classification random_classification(const UniversesPtr& universes, std::mt19937_64& engine);

// ------------------------------------------------------------ properties

inline constexpr std::size_t kExhaustiveSubsetWidthCap = 12;

struct SubsetBudget {
    enum class Mode { Exhaustive, Sampled };

    Mode mode = Mode::Exhaustive;
    std::size_t pairs = 50;    // sampled: pairs, and families of each size 3 and 4
    std::uint64_t seed = 0;

    static SubsetBudget exhaustive() { return {}; }
    static SubsetBudget sampled(std::size_t pairs, std::uint64_t seed) {
        return {Mode::Sampled, pairs, seed};
    }
};

struct PropertyViolation {
    std::string relation;
    std::vector<std::string> subsets;
    std::string expected;
    std::string got;
};

struct PropertyRecord {
    std::string id;
    std::size_t instances = 0;
    std::size_t violation_count = 0;
    std::vector<PropertyViolation> violations;  // first few, in check order

    bool passed() const noexcept { return violation_count == 0; }
};

struct PropertyReport {
    std::vector<PropertyRecord> records;

    bool passed() const noexcept;
    const PropertyRecord& record(const std::string& id) const;
    // Adds instance and violation counts record by record (matched on id).
    void merge(const PropertyReport& other);
};

// Property ids in report order: "i".."x" for the operator laws,
// "strategies" for set/matrix-form agreement.
extern const std::vector<std::string> kAlgebraicPropertyIds;

// Checks the operator laws over subsets of V within the budget. Exhaustive
// mode requires |V| <= kExhaustiveSubsetWidthCap.
PropertyReport verify_algebraic_properties(const BinaryRelation& r, const SubsetBudget& budget);

struct SerialCriterion {
    bool serial = false;
    bool exact_subset_exists = false;  // some X with lower(X) = upper(X)
    std::optional<Subset> witness;     // first such X in numeric order
    bool holds() const noexcept { return serial == exact_subset_exists; }
};

// Enumerates all of P(V); requires |V| <= 20.
SerialCriterion verify_serial_iff(const BinaryRelation& r);

using ApproxOracle = std::function<Subset(const Subset&)>;

// R(x, y) = 1 iff x in upper({y}).
BinaryRelation reconstruct_relation(const ApproxOracle& upper_oracle, const UniversesPtr& universes);
// R(x, y) = 1 iff x not in lower(V \ {y}).
BinaryRelation reconstruct_relation_from_lower(const ApproxOracle& lower_oracle,
                                               const UniversesPtr& universes);

// verify_algebraic_properties plus "xi" (seriality criterion, |V| <= 20),
// "xii"/"xiii" (reconstruction round trips) and "saturation".
PropertyReport verify_relation(const BinaryRelation& r, const SubsetBudget& budget);

// Runs verify_relation over a generated stream. In sampled mode each
// relation draws its subsets from a seed derived from (budget.seed, k).
PropertyReport run_property_campaign(const GeneratorConfig& config, const SubsetBudget& budget);

// ------------------------------------------------------------ type tables

enum class SetOperation { Union, Intersection };

const char* to_string(SetOperation op) noexcept;
std::optional<SetOperation> parse_set_operation(const std::string& text);

class TypeSet {
public:
    constexpr TypeSet() = default;
    constexpr TypeSet(std::initializer_list<int> type_numbers) {
        for (int n : type_numbers) {
            bits_ |= static_cast<std::uint8_t>(1U << (n - 1));
        }
    }

    bool contains(RoughType t) const noexcept { return (bits_ >> (type_number(t) - 1)) & 1U; }
    void insert(RoughType t) noexcept { bits_ |= static_cast<std::uint8_t>(1U << (type_number(t) - 1)); }
    void erase(RoughType t) noexcept { bits_ &= static_cast<std::uint8_t>(~(1U << (type_number(t) - 1))); }
    std::size_t size() const noexcept;
    bool empty() const noexcept { return bits_ == 0; }
    bool is_subset_of(TypeSet other) const noexcept { return (bits_ & ~other.bits_) == 0; }
    TypeSet minus(TypeSet other) const noexcept {
        TypeSet t;
        t.bits_ = static_cast<std::uint8_t>(bits_ & ~other.bits_);
        return t;
    }
    std::vector<RoughType> types() const;
    // "Type1 / Type3", or "none".
    std::string to_string() const;

    friend bool operator==(TypeSet, TypeSet) = default;

private:
    std::uint8_t bits_ = 0;
};

// allowed[left - 1][right - 1]: the possible types of (X op Y).
struct TypeTable {
    SetOperation op;
    std::array<std::array<TypeSet, 4>, 4> allowed;

    TypeSet cell(RoughType left, RoughType right) const {
        return allowed[type_number(left) - 1][type_number(right) - 1];
    }
    std::size_t ambiguous_cells() const;
    // Copy with one alternative removed from one cell.
    TypeTable without(RoughType left, RoughType right, RoughType result) const;
};

const TypeTable& expected_type_table(SetOperation op);

struct TableWitness {
    BinaryRelation relation;
    Subset x;
    Subset y;
};

struct TableCellFinding {
    SetOperation op;
    RoughType left;
    RoughType right;
    std::size_t instances = 0;
    TypeSet observed;
    TypeSet allowed;
    std::map<RoughType, TableWitness> witnesses;  // first hit per observed type

    bool conformant() const noexcept { return observed.is_subset_of(allowed); }
    TypeSet unrealized() const noexcept { return allowed.minus(observed); }
};

// For every relation of every config (in order) and every ordered pair of
// subsets of V (numeric order), accumulates the type of X op Y per
// (type X, type Y) cell. Returns the 16 cells row-major. Requires
// |V| <= kExhaustiveSubsetWidthCap for every generated relation.
std::vector<TableCellFinding> check_type_tables(const std::vector<GeneratorConfig>& configs,
                                                SetOperation op, const TypeTable& table);
std::vector<TableCellFinding> check_type_tables(const GeneratorConfig& config, SetOperation op);
// The same accumulation over a single relation.
std::vector<TableCellFinding> check_type_tables_for(const BinaryRelation& r, SetOperation op,
                                                    const TypeTable& table);

// Exhaustive configs for every shape u x v with 1 <= u <= max_u and
// 1 <= v <= max_v, ordered by u then v.
std::vector<GeneratorConfig> exhaustive_shapes(std::size_t max_u, std::size_t max_v);

// First (relation, X, Y) in canonical order with types (left, right) and
// X op Y of type `target`, or nullopt when the search space is exhausted.
std::optional<TableWitness> find_type_witness(SetOperation op, RoughType left, RoughType right,
                                              RoughType target,
                                              const std::vector<GeneratorConfig>& search);

Subset apply(SetOperation op, const Subset& x, const Subset& y);

}  // namespace tworough
