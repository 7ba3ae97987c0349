#include "tworough/classification.hpp"

#include <algorithm>
#include <set>

#include "tworough/random.hpp"

namespace tworough {

// ----------------------------------------------------------- validation

std::string ClassificationViolation::message() const {
    auto join = [](const std::vector<std::string>& items) {
        std::string s;
        for (std::size_t i = 0; i < items.size(); ++i) {
            s += (i > 0 ? ", " : "") + items[i];
        }
        return s;
    };
    switch (kind) {
        case Kind::TooFewBlocks:
            return "a classification needs more than one block";
        case Kind::WrongSide:
            return "block " + join(blocks) + " is not a subset of the shared V universe";
        case Kind::DuplicateName:
            return "duplicate block name " + join(blocks);
        case Kind::EmptyBlock:
            return "block " + join(blocks) + " is empty";
        case Kind::Overlap:
            return "blocks " + join(blocks) + " overlap on {" + join(elements) + "}";
        case Kind::CoverageGap:
            return "elements {" + join(elements) + "} are not covered by any block";
    }
    return "invalid classification";
}

namespace {

std::string violations_summary(const std::vector<ClassificationViolation>& violations) {
    std::string s = "invalid classification: ";
    for (std::size_t i = 0; i < violations.size(); ++i) {
        s += (i > 0 ? "; " : "") + violations[i].message();
    }
    return s;
}

}  // namespace

ClassificationError::ClassificationError(std::vector<ClassificationViolation> violations)
    : Error(violations_summary(violations)), violations_(std::move(violations)) {}

std::vector<ClassificationViolation> classification_violations(const std::vector<NamedBlock>& blocks) {
    using Kind = ClassificationViolation::Kind;
    std::vector<ClassificationViolation> out;
    if (blocks.size() <= 1) {
        out.push_back({Kind::TooFewBlocks, {}, {}});
    }
    if (blocks.empty()) {
        return out;
    }

    const UniversesPtr& universes = blocks.front().members.universes_ptr();
    bool sides_ok = true;
    for (const auto& b : blocks) {
        if (b.members.side() != Side::V || !same_universes(b.members.universes_ptr(), universes)) {
            out.push_back({Kind::WrongSide, {b.name}, {}});
            sides_ok = false;
        }
    }

    std::set<std::string> names;
    for (const auto& b : blocks) {
        if (!names.insert(b.name).second) {
            out.push_back({Kind::DuplicateName, {b.name}, {}});
        }
    }
    if (!sides_ok) {
        return out;
    }

    for (const auto& b : blocks) {
        if (b.members.empty()) {
            out.push_back({Kind::EmptyBlock, {b.name}, {}});
        }
    }
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        for (std::size_t j = i + 1; j < blocks.size(); ++j) {
            const Subset common = blocks[i].members & blocks[j].members;
            if (!common.empty()) {
                out.push_back({Kind::Overlap, {blocks[i].name, blocks[j].name}, common.labels()});
            }
        }
    }
    Subset covered(universes, Side::V);
    for (const auto& b : blocks) {
        covered |= b.members;
    }
    if (!covered.is_full()) {
        out.push_back({Kind::CoverageGap, {}, covered.complement().labels()});
    }
    return out;
}

Classification validate_classification(std::vector<NamedBlock> blocks) {
    auto violations = classification_violations(blocks);
    if (!violations.empty()) {
        throw ClassificationError(std::move(violations));
    }
    return Classification(std::move(blocks));
}

Subset Classification::union_of(const std::vector<std::size_t>& indices) const {
    Subset acc(universes_ptr(), Side::V);
    for (std::size_t i : indices) {
        acc |= blocks_.at(i).members;
    }
    return acc;
}

// ------------------------------------------------------------- measures

std::size_t FamilyApprox::lower_total() const {
    std::size_t n = 0;
    for (const auto& s : lowers) {
        n += s.count();
    }
    return n;
}

std::size_t FamilyApprox::upper_total() const {
    std::size_t n = 0;
    for (const auto& s : uppers) {
        n += s.count();
    }
    return n;
}

FamilyApprox approximate_family(const BinaryRelation& r, const Classification& f) {
    if (!same_universes(r.universes_ptr(), f.universes_ptr())) {
        throw SideMismatchError("classification is over different universes than the relation");
    }
    std::vector<Subset> lowers;
    std::vector<Subset> uppers;
    lowers.reserve(f.size());
    uppers.reserve(f.size());
    for (const auto& b : f.blocks()) {
        lowers.push_back(lower_approximation(r, b.members));
        uppers.push_back(upper_approximation(r, b.members));
    }
    return FamilyApprox{f, std::move(lowers), std::move(uppers), solitary_set(r), r.u_size(),
                        r.v_size()};
}

Ratio accuracy(const FamilyApprox& fa) {
    const std::size_t den = fa.upper_total();
    if (den == 0) {
        throw UndefinedMeasureError("accuracy is undefined: every upper approximation is empty");
    }
    return Ratio(fa.lower_total(), den);
}

Quality quality(const FamilyApprox& fa) {
    const std::size_t num = fa.lower_total();
    return {Ratio(num, fa.v_size), Ratio(num, fa.u_size)};
}

bool is_r_definable(const FamilyApprox& fa) {
    for (std::size_t i = 0; i < fa.lowers.size(); ++i) {
        if (!(fa.lowers[i] == fa.uppers[i])) {
            return false;
        }
    }
    return true;
}

// ----------------------------------------------------------- claim checks

const char* to_string(Verdict v) noexcept {
    switch (v) {
        case Verdict::Holds:
            return "holds";
        case Verdict::Violated:
            return "violated";
        case Verdict::Vacuous:
            return "vacuous";
    }
    return "?";
}

const char* to_string(ClaimForm f) noexcept {
    return f == ClaimForm::Implication ? "implication" : "biconditional";
}

std::size_t TheoremReport::count(Verdict v) const {
    return static_cast<std::size_t>(std::count_if(instances.begin(), instances.end(),
                                                  [v](const auto& c) { return c.verdict == v; }));
}

std::vector<const ClaimInstance*> TheoremReport::of_claim(const std::string& claim) const {
    std::vector<const ClaimInstance*> out;
    for (const auto& c : instances) {
        if (c.claim == claim) {
            out.push_back(&c);
        }
    }
    return out;
}

namespace {

constexpr std::size_t kExhaustiveIndexLimit = 12;
constexpr std::size_t kSampledIndexSets = 64;

IndexSet mask_to_indices(std::uint64_t mask, std::size_t n) {
    IndexSet out;
    for (std::size_t i = 0; i < n; ++i) {
        if ((mask >> i) & 1U) {
            out.push_back(i);
        }
    }
    return out;
}

IndexSet complement_of(const IndexSet& chosen, std::size_t n) {
    IndexSet rest;
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (k < chosen.size() && chosen[k] == i) {
            ++k;
        } else {
            rest.push_back(i);
        }
    }
    return rest;
}

void require_proper(const IndexSet& chosen, std::size_t n) {
    if (chosen.empty() || chosen.size() >= n) {
        throw LookupError("index set must be nonempty and proper");
    }
    for (std::size_t k = 0; k < chosen.size(); ++k) {
        if (chosen[k] >= n || (k > 0 && chosen[k] <= chosen[k - 1])) {
            throw LookupError("index set must be strictly ascending block indices below " +
                              std::to_string(n));
        }
    }
}

ClaimInstance make_claim(const char* claim, ClaimForm form, IndexSet indices, bool hyp, bool concl) {
    Verdict v;
    if (form == ClaimForm::Biconditional) {
        v = hyp == concl ? Verdict::Holds : Verdict::Violated;
    } else if (!hyp) {
        v = Verdict::Vacuous;
    } else {
        v = concl ? Verdict::Holds : Verdict::Violated;
    }
    return {claim, form, std::move(indices), hyp, concl, v};
}

}  // namespace

std::vector<IndexSet> proper_index_subsets(std::size_t n, std::uint64_t seed) {
    std::vector<IndexSet> out;
    if (n < 2) {
        return out;
    }
    if (n <= kExhaustiveIndexLimit) {
        const std::uint64_t full = (std::uint64_t{1} << n) - 1;
        for (std::uint64_t mask = 1; mask < full; ++mask) {
            out.push_back(mask_to_indices(mask, n));
        }
    } else {
        std::set<IndexSet> picked;
        for (std::size_t i = 0; i < n; ++i) {
            picked.insert(IndexSet{i});
            picked.insert(complement_of(IndexSet{i}, n));
        }
        auto engine = make_engine(seed, Stream::IndexSets, n);
        for (std::size_t s = 0; s < kSampledIndexSets; ++s) {
            IndexSet set;
            for (std::size_t i = 0; i < n; ++i) {
                if (engine() & 1U) {
                    set.push_back(i);
                }
            }
            if (!set.empty() && set.size() < n) {
                picked.insert(std::move(set));
            }
        }
        out.assign(picked.begin(), picked.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

ClaimInstance check_upper_cover_duality(const BinaryRelation& r, const Classification& f,
                                        const IndexSet& chosen) {
    require_proper(chosen, f.size());
    const bool upper_full = upper_approximation(r, f.union_of(chosen)).is_full();
    const bool rest_lower_empty =
        lower_approximation(r, f.union_of(complement_of(chosen, f.size()))).empty();
    return make_claim(claims::kUnionUpperFullIffRestLowerEmpty, ClaimForm::Biconditional, chosen,
                      upper_full, rest_lower_empty);
}

ClaimInstance check_lower_exclusion_duality(const BinaryRelation& r, const Classification& f,
                                            const IndexSet& chosen) {
    require_proper(chosen, f.size());
    const bool lower_nonempty = !lower_approximation(r, f.union_of(chosen)).empty();
    Subset rest_uppers(r.universes_ptr(), Side::U);
    for (std::size_t j : complement_of(chosen, f.size())) {
        rest_uppers |= upper_approximation(r, f.block(j).members);
    }
    return make_claim(claims::kUnionLowerNonemptyIffRestUppersNotFull, ClaimForm::Biconditional,
                      chosen, lower_nonempty, !rest_uppers.is_full());
}

TheoremReport dualities_report(const BinaryRelation& r, const Classification& f, std::uint64_t seed) {
    TheoremReport report;
    const auto subsets = proper_index_subsets(f.size(), seed);
    for (const auto& s : subsets) {
        report.instances.push_back(check_upper_cover_duality(r, f, s));
    }
    for (const auto& s : subsets) {
        report.instances.push_back(check_lower_exclusion_duality(r, f, s));
    }
    return report;
}

TheoremReport corollaries_report(const BinaryRelation& r, const Classification& f,
                                 std::uint64_t seed) {
    namespace c = claims;
    const FamilyApprox fa = approximate_family(r, f);
    const std::size_t n = f.size();
    IndexSet everything(n);
    for (std::size_t i = 0; i < n; ++i) {
        everything[i] = i;
    }

    auto all_of = [](const IndexSet& idx, auto pred) {
        return std::all_of(idx.begin(), idx.end(), pred);
    };
    auto lower_empty = [&](std::size_t j) { return fa.lowers[j].empty(); };
    auto upper_not_full = [&](std::size_t j) { return !fa.uppers[j].is_full(); };
    auto lower_of = [&](const IndexSet& idx) { return lower_approximation(r, f.union_of(idx)); };
    auto upper_of = [&](const IndexSet& idx) { return upper_approximation(r, f.union_of(idx)); };

    const auto subsets = proper_index_subsets(n, seed);
    TheoremReport report;
    auto& out = report.instances;

    for (const auto& chosen : subsets) {
        const IndexSet rest = complement_of(chosen, n);
        out.push_back(make_claim(c::kUnionUpperFullImpliesRestLowersEmpty, ClaimForm::Implication,
                                 chosen, upper_of(chosen).is_full(), all_of(rest, lower_empty)));
    }
    for (std::size_t i = 0; i < n; ++i) {
        const IndexSet rest = complement_of({i}, n);
        out.push_back(make_claim(c::kBlockUpperFullIffRestLowerEmpty, ClaimForm::Biconditional, {i},
                                 fa.uppers[i].is_full(), lower_of(rest).empty()));
    }
    for (std::size_t i = 0; i < n; ++i) {
        const IndexSet rest = complement_of({i}, n);
        out.push_back(make_claim(c::kBlockLowerEmptyIffRestUpperFull, ClaimForm::Biconditional, {i},
                                 fa.lowers[i].empty(), upper_of(rest).is_full()));
    }
    for (std::size_t i = 0; i < n; ++i) {
        const IndexSet rest = complement_of({i}, n);
        out.push_back(make_claim(c::kBlockUpperFullImpliesOtherLowersEmpty, ClaimForm::Implication,
                                 {i}, fa.uppers[i].is_full(), all_of(rest, lower_empty)));
    }
    out.push_back(make_claim(c::kAllUppersFullImpliesAllLowersEmpty, ClaimForm::Implication,
                             everything,
                             all_of(everything, [&](std::size_t j) { return fa.uppers[j].is_full(); }),
                             all_of(everything, lower_empty)));
    for (const auto& chosen : subsets) {
        const IndexSet rest = complement_of(chosen, n);
        out.push_back(make_claim(c::kUnionLowerNonemptyImpliesRestUppersNotFull,
                                 ClaimForm::Implication, chosen, !lower_of(chosen).empty(),
                                 all_of(rest, upper_not_full)));
    }
    for (std::size_t i = 0; i < n; ++i) {
        Subset rest_uppers(r.universes_ptr(), Side::U);
        for (std::size_t j : complement_of({i}, n)) {
            rest_uppers |= fa.uppers[j];
        }
        out.push_back(make_claim(c::kBlockLowerNonemptyIffRestUppersNotFull,
                                 ClaimForm::Biconditional, {i}, !fa.lowers[i].empty(),
                                 !rest_uppers.is_full()));
    }
    for (std::size_t i = 0; i < n; ++i) {
        const IndexSet rest = complement_of({i}, n);
        out.push_back(make_claim(c::kBlockUpperNotFullIffRestLowerNonempty, ClaimForm::Biconditional,
                                 {i}, !fa.uppers[i].is_full(), !lower_of(rest).empty()));
    }
    for (std::size_t i = 0; i < n; ++i) {
        const IndexSet rest = complement_of({i}, n);
        out.push_back(make_claim(c::kBlockLowerNonemptyImpliesOtherUppersNotFull,
                                 ClaimForm::Implication, {i}, !fa.lowers[i].empty(),
                                 all_of(rest, upper_not_full)));
    }
    out.push_back(make_claim(
        c::kAllLowersNonemptyImpliesAllUppersNotFull, ClaimForm::Implication, everything,
        all_of(everything, [&](std::size_t j) { return !fa.lowers[j].empty(); }),
        all_of(everything, upper_not_full)));
    return report;
}

}  // namespace tworough
