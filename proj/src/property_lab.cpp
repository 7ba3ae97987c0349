#include "tworough/property_lab.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <utility>

#include "tworough/random.hpp"

namespace tworough {

// ============================================================ generation

GeneratorConfig GeneratorConfig::exhaustive(std::size_t u, std::size_t v) {
    GeneratorConfig c;
    c.u_size = u;
    c.v_size = v;
    c.mode = GenerationMode::Exhaustive;
    return c;
}

GeneratorConfig GeneratorConfig::random(std::size_t u, std::size_t v, Ratio density,
                                        std::uint64_t seed, std::size_t count, bool vary_shape) {
    GeneratorConfig c;
    c.u_size = u;
    c.v_size = v;
    c.mode = GenerationMode::Random;
    c.density = density;
    c.seed = seed;
    c.count = count;
    c.vary_shape = vary_shape;
    return c;
}

void GeneratorConfig::validate() const {
    if (u_size == 0 || v_size == 0) {
        throw std::invalid_argument("generator dimensions must be positive");
    }
    if (mode == GenerationMode::Exhaustive) {
        if (u_size * v_size > kExhaustiveCellCap) {
            throw CapExceededError("exhaustive generation of " + std::to_string(u_size) + "x" +
                                   std::to_string(v_size) + " relations exceeds the 2^" +
                                   std::to_string(kExhaustiveCellCap) + " cap");
        }
    } else {
        if (count == 0) {
            throw std::invalid_argument("random generation needs a positive count");
        }
        if (density.num() > density.den()) {
            throw std::invalid_argument("density must lie in [0, 1]");
        }
    }
}

RelationStream::RelationStream(GeneratorConfig config) : config_(config) {
    config_.validate();
    size_ = config_.mode == GenerationMode::Exhaustive
                ? (std::size_t{1} << (config_.u_size * config_.v_size))
                : config_.count;
    if (config_.mode == GenerationMode::Random && config_.vary_shape) {
        for (std::size_t u = 1; u <= config_.u_size; ++u) {
            for (std::size_t v = 1; v <= config_.v_size; ++v) {
                universes_.push_back(Universes::indexed(u, v));
            }
        }
    } else {
        universes_.push_back(Universes::indexed(config_.u_size, config_.v_size));
    }
}

const UniversesPtr& RelationStream::universes_for(std::size_t u, std::size_t v) const {
    if (universes_.size() == 1) {
        return universes_.front();
    }
    return universes_[(u - 1) * config_.v_size + (v - 1)];
}

BinaryRelation RelationStream::at(std::size_t k) const {
    if (k >= size_) {
        throw LookupError("relation index out of range");
    }
    if (config_.mode == GenerationMode::Exhaustive) {
        const std::size_t u = config_.u_size;
        const std::size_t v = config_.v_size;
        std::vector<Bitset> rows;
        rows.reserve(u);
        for (std::size_t i = 0; i < u; ++i) {
            rows.push_back(Bitset::from_word(v, static_cast<Bitset::Word>(k >> (i * v))));
        }
        return BinaryRelation(universes_for(u, v), std::move(rows));
    }

    std::size_t u = config_.u_size;
    std::size_t v = config_.v_size;
    if (config_.vary_shape) {
        auto shape = make_engine(config_.seed, Stream::Shapes, k);
        u = 1 + draw_below(shape, config_.u_size);
        v = 1 + draw_below(shape, config_.v_size);
    }
    auto engine = make_engine(config_.seed, Stream::Relations, k);
    std::vector<Bitset> rows(u, Bitset(v));
    for (std::size_t i = 0; i < u; ++i) {
        for (std::size_t j = 0; j < v; ++j) {
            rows[i].set(j, draw_below(engine, config_.density.den()) < config_.density.num());
        }
    }
    return BinaryRelation(universes_for(u, v), std::move(rows));
}

RelationStream generate_relations(const GeneratorConfig& config) { return RelationStream(config); }

namespace {

Classification classification_from_labels(const UniversesPtr& universes,
                                          const std::vector<std::size_t>& block_of) {
    std::size_t n = 0;
    for (std::size_t b : block_of) {
        n = std::max(n, b + 1);
    }
    std::vector<NamedBlock> blocks;
    for (std::size_t b = 0; b < n; ++b) {
        blocks.push_back({"Y" + std::to_string(b + 1), Subset(universes, Side::V)});
    }
    for (std::size_t j = 0; j < block_of.size(); ++j) {
        blocks[block_of[j]].members |= Subset::of_indices(universes, Side::V, {j});
    }
    return validate_classification(std::move(blocks));
}

void restricted_growth(std::vector<std::size_t>& a, std::size_t pos, std::size_t max_used,
                       const UniversesPtr& universes, std::vector<Classification>& out) {
    if (pos == a.size()) {
        if (max_used + 1 > 1) {
            out.push_back(classification_from_labels(universes, a));
        }
        return;
    }
    for (std::size_t b = 0; b <= max_used + 1; ++b) {
        a[pos] = b;
        restricted_growth(a, pos + 1, std::max(max_used, b), universes, out);
    }
}

}  // namespace

std::vector<Classification> all_classifications(const UniversesPtr& universes) {
    const std::size_t m = universes->v_size();
    std::vector<Classification> out;
    if (m < 2) {
        return out;
    }
    std::vector<std::size_t> a(m, 0);
    restricted_growth(a, 1, 0, universes, out);
    return out;
}

Classification random_classification(const UniversesPtr& universes, std::mt19937_64& engine) {
    const std::size_t m = universes->v_size();
    if (m < 2) {
        throw std::invalid_argument("a classification needs |V| >= 2");
    }
    const std::size_t n = 2 + draw_below(engine, m - 1);
    std::vector<std::size_t> label(m);
    for (auto& l : label) {
        l = draw_below(engine, n);
    }
    // Seed each block with a distinct element so none is empty.
    std::vector<std::size_t> order(m);
    for (std::size_t j = 0; j < m; ++j) {
        order[j] = j;
    }
    for (std::size_t b = 0; b < n; ++b) {
        std::swap(order[b], order[b + draw_below(engine, m - b)]);
        label[order[b]] = b;
    }
    // Renumber by first occurrence for canonical block order.
    std::vector<std::size_t> rename(n, n);
    std::size_t next = 0;
    for (auto& l : label) {
        if (rename[l] == n) {
            rename[l] = next++;
        }
        l = rename[l];
    }
    return classification_from_labels(universes, label);
}

// ============================================================ properties

const std::vector<std::string> kAlgebraicPropertyIds = {
    "i", "ii", "iii", "iv", "v", "vi", "vii", "viii", "ix", "x", "strategies"};

namespace {

enum Slot : std::size_t { kI, kII, kIII, kIV, kV, kVI, kVII, kVIII, kIX, kX, kStrategies };

constexpr std::size_t kKeptViolations = 8;
constexpr std::size_t kFamilyEnumerationCap = 100000;
constexpr std::size_t kSampledFamilies = 256;

PropertyReport empty_report(const std::vector<std::string>& ids) {
    PropertyReport report;
    for (const auto& id : ids) {
        report.records.push_back({id, 0, 0, {}});
    }
    return report;
}

struct Approximations {
    Subset lower;
    Subset upper;
};

class ApproxMemo {
public:
    explicit ApproxMemo(const BinaryRelation& r) : r_(r) {}

    const Approximations& get(const Subset& x) {
        auto it = memo_.find(x.bits());
        if (it == memo_.end()) {
            it = memo_.emplace(x.bits(), Approximations{lower_approximation(r_, x),
                                                        upper_approximation(r_, x)})
                     .first;
        }
        return it->second;
    }

private:
    const BinaryRelation& r_;
    std::unordered_map<Bitset, Approximations, BitsetHash> memo_;
};

class LawChecker {
public:
    LawChecker(const BinaryRelation& r, PropertyReport& report)
        : r_(r),
          report_(report),
          memo_(r),
          solitary_(solitary_set(r)),
          non_solitary_(solitary_.complement()),
          reach_(r.universes_ptr(), Side::V) {
        for (const auto& row : r.rows()) {
            reach_ = reach_ | Subset(r.universes_ptr(), Side::V, row);
        }
    }

    void check_constants() {
        const auto& u = r_.universes_ptr();
        const Subset empty_v(u, Side::V);
        const Subset full_v = Subset::full(u, Side::V);
        const auto& at_empty = memo_.get(empty_v);
        const auto& at_full = memo_.get(full_v);
        expect(kII, at_empty.lower == solitary_, {empty_v}, "lower = S", at_empty.lower);
        expect(kII, at_empty.upper.empty(), {empty_v}, "upper = {}", at_empty.upper);
        expect(kII, at_full.lower.is_full(), {full_v}, "lower = U", at_full.lower);
        expect(kII, at_full.upper == non_solitary_, {full_v}, "upper = S'", at_full.upper);
    }

    void check_single(const Subset& x) {
        const Approximations& a = memo_.get(x);

        const Subset by_union = upper_approximation(r_, x, Strategy::NeighborhoodUnion);
        expect(kI, a.upper == by_union, {x}, "upper = " + by_union.to_string(), a.upper);

        const Subset lower_m = lower_approximation(r_, x, Strategy::MatrixForm);
        const Subset upper_m = upper_approximation(r_, x, Strategy::MatrixForm);
        expect(kStrategies, a.lower == lower_m, {x}, "lower (matrix) = " + lower_m.to_string(),
               a.lower);
        expect(kStrategies, a.upper == upper_m, {x}, "upper (matrix) = " + upper_m.to_string(),
               a.upper);

        expect(kIII, solitary_.is_subset_of(a.lower), {x}, "S within lower", a.lower);
        expect(kIII, a.upper.is_subset_of(non_solitary_), {x}, "upper within S'", a.upper);

        expect(kIV, (a.lower - solitary_).is_subset_of(a.upper), {x}, "lower \\ S within upper",
               a.lower - solitary_);

        expect(kV, a.lower.is_full() == reach_.is_subset_of(x), {x},
               "lower = U iff union of r(x) within X", a.lower);
        expect(kV, a.upper.empty() == x.is_subset_of(reach_.complement()), {x},
               "upper = {} iff X misses every r(x)", a.upper);

        expect(kVI, solitary_.empty() || !(a.lower == a.upper), {x}, "lower != upper when S != {}",
               a.lower);

        const Approximations& c = memo_.get(x.complement());
        expect(kX, a.lower.complement() == c.upper, {x}, "lower' = upper(X')", c.upper);
        expect(kX, a.upper.complement() == c.lower, {x}, "upper' = lower(X')", c.lower);
    }

    void check_pair(const Subset& x, const Subset& y) {
        const Approximations& ax = memo_.get(x);
        const Approximations& ay = memo_.get(y);
        const Subset meet = x & y;
        const Subset join = x | y;
        const Approximations& am = memo_.get(meet);
        const Approximations& aj = memo_.get(join);

        expect(kVII, am.lower == (ax.lower & ay.lower), {x, y}, "lower(X&Y) = lower X & lower Y",
               am.lower);
        expect(kVII, aj.upper == (ax.upper | ay.upper), {x, y}, "upper(X|Y) = upper X | upper Y",
               aj.upper);

        // Comparable pairs (X&Y, X) and (X, X|Y) always exist.
        expect(kVIII, am.lower.is_subset_of(ax.lower) && am.upper.is_subset_of(ax.upper), {meet, x},
               "monotone on X&Y within X", am.lower);
        expect(kVIII, ax.lower.is_subset_of(aj.lower) && ax.upper.is_subset_of(aj.upper), {x, join},
               "monotone on X within X|Y", ax.lower);
        if (x.is_subset_of(y)) {
            expect(kVIII, ax.lower.is_subset_of(ay.lower) && ax.upper.is_subset_of(ay.upper),
                   {x, y}, "monotone on X within Y", ax.lower);
        }

        expect(kIX, (ax.lower | ay.lower).is_subset_of(aj.lower), {x, y},
               "lower X | lower Y within lower(X|Y)", aj.lower);
        expect(kIX, am.upper.is_subset_of(ax.upper & ay.upper), {x, y},
               "upper(X&Y) within upper X & upper Y", am.upper);
    }

    void check_family(const std::vector<Subset>& family) {
        Subset meet = Subset::full(r_.universes_ptr(), Side::V);
        Subset join(r_.universes_ptr(), Side::V);
        Subset lower_meet = Subset::full(r_.universes_ptr(), Side::U);
        Subset upper_join(r_.universes_ptr(), Side::U);
        for (const auto& x : family) {
            meet &= x;
            join |= x;
            const Approximations& a = memo_.get(x);
            lower_meet &= a.lower;
            upper_join |= a.upper;
        }
        const Approximations& am = memo_.get(meet);
        const Approximations& aj = memo_.get(join);
        expect(kVII, am.lower == lower_meet, family, "lower of meet = " + lower_meet.to_string(),
               am.lower);
        expect(kVII, aj.upper == upper_join, family, "upper of join = " + upper_join.to_string(),
               aj.upper);
    }

private:
    void expect(std::size_t slot, bool ok, const std::vector<Subset>& subsets,
                const std::string& expected, const Subset& got) {
        PropertyRecord& rec = report_.records[slot];
        ++rec.instances;
        if (ok) {
            return;
        }
        ++rec.violation_count;
        if (rec.violations.size() < kKeptViolations) {
            PropertyViolation v{r_.to_string(), {}, expected, got.to_string()};
            for (const auto& s : subsets) {
                v.subsets.push_back(s.to_string());
            }
            rec.violations.push_back(std::move(v));
        }
    }

    const BinaryRelation& r_;
    PropertyReport& report_;
    ApproxMemo memo_;
    Subset solitary_;
    Subset non_solitary_;
    Subset reach_;
};

Subset random_subset(const UniversesPtr& u, std::mt19937_64& engine) {
    const std::size_t m = u->v_size();
    Bitset b(m);
    for (std::size_t j = 0; j < m; j += 64) {
        const auto word = engine();
        for (std::size_t k = j; k < std::min(m, j + 64); ++k) {
            b.set(k, (word >> (k - j)) & 1U);
        }
    }
    return Subset(u, Side::V, std::move(b));
}

std::size_t multiset_count(std::size_t n, std::size_t k) {
    // C(n + k - 1, k), saturating well above the enumeration cap.
    long double c = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        c = c * static_cast<long double>(n + k - i) / static_cast<long double>(i);
    }
    return c > 1e12L ? static_cast<std::size_t>(1e12) : static_cast<std::size_t>(c + 0.5L);
}

void enumerate_families(const std::vector<Subset>& all, std::size_t size, std::size_t start,
                        std::vector<Subset>& current, LawChecker& checker) {
    if (current.size() == size) {
        checker.check_family(current);
        return;
    }
    for (std::size_t i = start; i < all.size(); ++i) {
        current.push_back(all[i]);
        enumerate_families(all, size, i, current, checker);
        current.pop_back();
    }
}

}  // namespace

bool PropertyReport::passed() const noexcept {
    return std::all_of(records.begin(), records.end(), [](const auto& r) { return r.passed(); });
}

const PropertyRecord& PropertyReport::record(const std::string& id) const {
    for (const auto& r : records) {
        if (r.id == id) {
            return r;
        }
    }
    throw LookupError("no property record '" + id + "'");
}

void PropertyReport::merge(const PropertyReport& other) {
    for (const auto& o : other.records) {
        auto it = std::find_if(records.begin(), records.end(),
                               [&](const auto& r) { return r.id == o.id; });
        if (it == records.end()) {
            records.push_back(o);
            continue;
        }
        it->instances += o.instances;
        it->violation_count += o.violation_count;
        for (const auto& v : o.violations) {
            if (it->violations.size() >= kKeptViolations) {
                break;
            }
            it->violations.push_back(v);
        }
    }
}

PropertyReport verify_algebraic_properties(const BinaryRelation& r, const SubsetBudget& budget) {
    PropertyReport report = empty_report(kAlgebraicPropertyIds);
    LawChecker checker(r, report);
    checker.check_constants();

    const auto& u = r.universes_ptr();
    const std::size_t m = r.v_size();

    if (budget.mode == SubsetBudget::Mode::Exhaustive) {
        if (m > kExhaustiveSubsetWidthCap) {
            throw CapExceededError("exhaustive subset enumeration needs |V| <= " +
                                   std::to_string(kExhaustiveSubsetWidthCap));
        }
        std::vector<Subset> all;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
            all.emplace_back(u, Side::V, Bitset::from_word(m, mask));
        }
        for (const auto& x : all) {
            checker.check_single(x);
        }
        for (const auto& x : all) {
            for (const auto& y : all) {
                checker.check_pair(x, y);
            }
        }
        for (std::size_t size = 3; size <= 4; ++size) {
            if (multiset_count(all.size(), size) <= kFamilyEnumerationCap) {
                std::vector<Subset> current;
                enumerate_families(all, size, 0, current, checker);
            } else {
                auto engine = make_engine(budget.seed, Stream::Families, size);
                for (std::size_t k = 0; k < kSampledFamilies; ++k) {
                    std::vector<Subset> family;
                    for (std::size_t i = 0; i < size; ++i) {
                        family.push_back(all[draw_below(engine, all.size())]);
                    }
                    checker.check_family(family);
                }
            }
        }
        return report;
    }

    auto engine = make_engine(budget.seed, Stream::Subsets, 0);
    for (std::size_t k = 0; k < budget.pairs; ++k) {
        const Subset x = random_subset(u, engine);
        const Subset y = random_subset(u, engine);
        checker.check_single(x);
        checker.check_single(y);
        checker.check_pair(x, y);
    }
    for (std::size_t size = 3; size <= 4; ++size) {
        auto fam_engine = make_engine(budget.seed, Stream::Families, size);
        for (std::size_t k = 0; k < budget.pairs; ++k) {
            std::vector<Subset> family;
            for (std::size_t i = 0; i < size; ++i) {
                family.push_back(random_subset(u, fam_engine));
            }
            checker.check_family(family);
        }
    }
    return report;
}

SerialCriterion verify_serial_iff(const BinaryRelation& r) {
    const std::size_t m = r.v_size();
    if (m > 20) {
        throw CapExceededError("seriality criterion enumerates P(V); needs |V| <= 20");
    }
    SerialCriterion out;
    out.serial = is_serial(r);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        const Subset x(r.universes_ptr(), Side::V, Bitset::from_word(m, mask));
        if (lower_approximation(r, x) == upper_approximation(r, x)) {
            out.exact_subset_exists = true;
            out.witness = x;
            break;
        }
    }
    return out;
}

namespace {

Subset call_oracle(const ApproxOracle& oracle, const Subset& arg, const UniversesPtr& universes) {
    Subset out = oracle(arg);
    if (out.side() != Side::U || !same_universes(out.universes_ptr(), universes)) {
        throw SideMismatchError("approximation oracle must return a U-side subset of the same universes");
    }
    return out;
}

}  // namespace

BinaryRelation reconstruct_relation(const ApproxOracle& upper_oracle, const UniversesPtr& universes) {
    std::vector<Bitset> rows(universes->u_size(), Bitset(universes->v_size()));
    for (std::size_t y = 0; y < universes->v_size(); ++y) {
        const Subset image = call_oracle(upper_oracle, Subset::of_indices(universes, Side::V, {y}),
                                         universes);
        for (std::size_t x : image.indices()) {
            rows[x].set(y);
        }
    }
    return BinaryRelation(universes, std::move(rows));
}

BinaryRelation reconstruct_relation_from_lower(const ApproxOracle& lower_oracle,
                                               const UniversesPtr& universes) {
    std::vector<Bitset> rows(universes->u_size(), Bitset(universes->v_size()));
    for (std::size_t y = 0; y < universes->v_size(); ++y) {
        const Subset all_but_y = Subset::of_indices(universes, Side::V, {y}).complement();
        const Subset image = call_oracle(lower_oracle, all_but_y, universes);
        for (std::size_t x = 0; x < universes->u_size(); ++x) {
            rows[x].set(y, !image.contains(x));
        }
    }
    return BinaryRelation(universes, std::move(rows));
}

PropertyReport verify_relation(const BinaryRelation& r, const SubsetBudget& budget) {
    PropertyReport report = verify_algebraic_properties(r, budget);
    auto add = [&](const std::string& id, std::size_t instances, bool ok, std::string expected,
                   std::string got) {
        PropertyRecord rec{id, instances, ok ? 0U : 1U, {}};
        if (!ok) {
            rec.violations.push_back({r.to_string(), {}, std::move(expected), std::move(got)});
        }
        report.records.push_back(std::move(rec));
    };

    if (r.v_size() <= 20) {
        const SerialCriterion sc = verify_serial_iff(r);
        add("xi", 1, sc.holds(), sc.serial ? "exact subset exists" : "no exact subset",
            sc.exact_subset_exists ? "exact subset " + sc.witness->to_string() : "no exact subset");
    } else {
        add("xi", 0, true, "", "");
    }

    const auto upper_of = [&r](const Subset& y) { return upper_approximation(r, y); };
    const auto lower_of = [&r](const Subset& y) { return lower_approximation(r, y); };
    const BinaryRelation from_upper = reconstruct_relation(upper_of, r.universes_ptr());
    const BinaryRelation from_lower = reconstruct_relation_from_lower(lower_of, r.universes_ptr());
    add("xii", 1, from_upper == r, r.to_string(), from_upper.to_string());
    add("xiii", 1, from_lower == r, r.to_string(), from_lower.to_string());
    add("saturation", 1, saturation_identity_holds(r), "E_V o R = R = R o E_U", "identity fails");
    return report;
}

PropertyReport run_property_campaign(const GeneratorConfig& config, const SubsetBudget& budget) {
    const RelationStream stream(config);
    PropertyReport total;
    for (std::size_t k = 0; k < stream.size(); ++k) {
        SubsetBudget local = budget;
        local.seed = derive_seed(budget.seed, Stream::Subsets, k);
        total.merge(verify_relation(stream.at(k), local));
    }
    return total;
}

// ============================================================ type tables

const char* to_string(SetOperation op) noexcept {
    return op == SetOperation::Union ? "union" : "intersection";
}

std::optional<SetOperation> parse_set_operation(const std::string& text) {
    if (text == "union" || text == "cup") {
        return SetOperation::Union;
    }
    if (text == "intersection" || text == "cap") {
        return SetOperation::Intersection;
    }
    return std::nullopt;
}

std::size_t TypeSet::size() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }

std::vector<RoughType> TypeSet::types() const {
    std::vector<RoughType> out;
    for (RoughType t : kAllRoughTypes) {
        if (contains(t)) {
            out.push_back(t);
        }
    }
    return out;
}

std::string TypeSet::to_string() const {
    if (empty()) {
        return "none";
    }
    std::string s;
    for (RoughType t : types()) {
        s += (s.empty() ? "" : " / ") + std::string("Type") + std::to_string(type_number(t));
    }
    return s;
}

std::size_t TypeTable::ambiguous_cells() const {
    std::size_t n = 0;
    for (const auto& row : allowed) {
        for (const auto& cell : row) {
            n += cell.size() > 1 ? 1 : 0;
        }
    }
    return n;
}

TypeTable TypeTable::without(RoughType left, RoughType right, RoughType result) const {
    TypeTable copy = *this;
    copy.allowed[type_number(left) - 1][type_number(right) - 1].erase(result);
    return copy;
}

const TypeTable& expected_type_table(SetOperation op) {
    // Rows: type of X; columns: type of Y.
    static const TypeTable kUnion{SetOperation::Union,
                                  {{{{{1, 3}, {1, 3}, {3}, {3}}},
                                    {{{1, 3}, {1, 2, 3, 4}, {3}, {3, 4}}},
                                    {{{3}, {3}, {3}, {3}}},
                                    {{{3}, {3, 4}, {3}, {3, 4}}}}}};
    static const TypeTable kIntersection{SetOperation::Intersection,
                                         {{{{{1, 2}, {2}, {1, 2}, {2}}},
                                           {{{2}, {2}, {2}, {2}}},
                                           {{{1, 2}, {2}, {1, 2, 3, 4}, {2, 4}}},
                                           {{{2}, {2}, {2, 4}, {2, 4}}}}}};
    return op == SetOperation::Union ? kUnion : kIntersection;
}

Subset apply(SetOperation op, const Subset& x, const Subset& y) {
    return op == SetOperation::Union ? (x | y) : (x & y);
}

namespace {

std::uint64_t apply_mask(SetOperation op, std::uint64_t a, std::uint64_t b) {
    return op == SetOperation::Union ? (a | b) : (a & b);
}

// Rough type of every subset of V, indexed by its bit mask.
std::vector<RoughType> subset_types(const BinaryRelation& r) {
    const std::size_t m = r.v_size();
    if (m > kExhaustiveSubsetWidthCap) {
        throw CapExceededError("type-table sweeps enumerate P(V); needs |V| <= " +
                               std::to_string(kExhaustiveSubsetWidthCap));
    }
    std::vector<RoughType> types;
    types.reserve(std::size_t{1} << m);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        types.push_back(rough_type(r, Subset(r.universes_ptr(), Side::V, Bitset::from_word(m, mask))));
    }
    return types;
}

Subset subset_of_mask(const BinaryRelation& r, std::uint64_t mask) {
    return Subset(r.universes_ptr(), Side::V, Bitset::from_word(r.v_size(), mask));
}

}  // namespace

namespace {

std::vector<TableCellFinding> empty_cells(SetOperation op, const TypeTable& table) {
    std::vector<TableCellFinding> cells;
    for (RoughType left : kAllRoughTypes) {
        for (RoughType right : kAllRoughTypes) {
            TableCellFinding f{op, left, right, 0, TypeSet{}, table.cell(left, right), {}};
            cells.push_back(std::move(f));
        }
    }
    return cells;
}

void accumulate_cells(const BinaryRelation& r, SetOperation op, std::vector<TableCellFinding>& cells) {
    const auto types = subset_types(r);
    for (std::uint64_t a = 0; a < types.size(); ++a) {
        for (std::uint64_t b = 0; b < types.size(); ++b) {
            const RoughType result = types[apply_mask(op, a, b)];
            auto& cell = cells[(type_number(types[a]) - 1) * 4 + (type_number(types[b]) - 1)];
            ++cell.instances;
            if (!cell.observed.contains(result)) {
                cell.observed.insert(result);
                cell.witnesses.emplace(result,
                                       TableWitness{r, subset_of_mask(r, a), subset_of_mask(r, b)});
            }
        }
    }
}

}  // namespace

std::vector<TableCellFinding> check_type_tables(const std::vector<GeneratorConfig>& configs,
                                                SetOperation op, const TypeTable& table) {
    auto cells = empty_cells(op, table);
    for (const auto& config : configs) {
        const RelationStream stream(config);
        for (std::size_t k = 0; k < stream.size(); ++k) {
            accumulate_cells(stream.at(k), op, cells);
        }
    }
    return cells;
}

std::vector<TableCellFinding> check_type_tables_for(const BinaryRelation& r, SetOperation op,
                                                    const TypeTable& table) {
    auto cells = empty_cells(op, table);
    accumulate_cells(r, op, cells);
    return cells;
}

std::vector<TableCellFinding> check_type_tables(const GeneratorConfig& config, SetOperation op) {
    return check_type_tables(std::vector<GeneratorConfig>{config}, op, expected_type_table(op));
}

std::vector<GeneratorConfig> exhaustive_shapes(std::size_t max_u, std::size_t max_v) {
    std::vector<GeneratorConfig> out;
    for (std::size_t u = 1; u <= max_u; ++u) {
        for (std::size_t v = 1; v <= max_v; ++v) {
            out.push_back(GeneratorConfig::exhaustive(u, v));
        }
    }
    return out;
}

std::optional<TableWitness> find_type_witness(SetOperation op, RoughType left, RoughType right,
                                              RoughType target,
                                              const std::vector<GeneratorConfig>& search) {
    for (const auto& config : search) {
        const RelationStream stream(config);
        for (std::size_t k = 0; k < stream.size(); ++k) {
            const BinaryRelation r = stream.at(k);
            const auto types = subset_types(r);
            for (std::uint64_t a = 0; a < types.size(); ++a) {
                if (types[a] != left) {
                    continue;
                }
                for (std::uint64_t b = 0; b < types.size(); ++b) {
                    if (types[b] == right && types[apply_mask(op, a, b)] == target) {
                        return TableWitness{r, subset_of_mask(r, a), subset_of_mask(r, b)};
                    }
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace tworough
