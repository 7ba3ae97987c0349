#pragma once

// Classifications of V (partitions into at least two named blocks), their
// approximation by a relation, the accuracy and quality measures, and
// checkable instances of the duality theorems relating the approximations
// of a union of blocks to those of the remaining blocks.

#include <cstdint>
#include <string>
#include <vector>

#include "tworough/approx.hpp"
#include "tworough/ratio.hpp"
#include "tworough/relation.hpp"

namespace tworough {

struct NamedBlock {
    std::string name;
    Subset members;
};

struct ClassificationViolation {
    enum class Kind { TooFewBlocks, WrongSide, DuplicateName, EmptyBlock, Overlap, CoverageGap };

    Kind kind;
    std::vector<std::string> blocks;    // block names involved
    std::vector<std::string> elements;  // offending V labels

    std::string message() const;
};

class ClassificationError : public Error {
public:
    explicit ClassificationError(std::vector<ClassificationViolation> violations);
    const std::vector<ClassificationViolation>& violations() const noexcept { return violations_; }

private:
    std::vector<ClassificationViolation> violations_;
};

// A partition of V into n > 1 named, non-empty, pairwise disjoint blocks.
class Classification {
public:
    std::size_t size() const noexcept { return blocks_.size(); }
    const std::vector<NamedBlock>& blocks() const noexcept { return blocks_; }
    const NamedBlock& block(std::size_t i) const { return blocks_.at(i); }
    const UniversesPtr& universes_ptr() const noexcept { return blocks_.front().members.universes_ptr(); }

    // Union of the blocks at `indices`.
    Subset union_of(const std::vector<std::size_t>& indices) const;

private:
    friend Classification validate_classification(std::vector<NamedBlock> blocks);
    explicit Classification(std::vector<NamedBlock> blocks) : blocks_(std::move(blocks)) {}

    std::vector<NamedBlock> blocks_;
};

// Every violation found, in a stable order; empty means valid.
std::vector<ClassificationViolation> classification_violations(const std::vector<NamedBlock>& blocks);
// Throws ClassificationError listing all violations.
Classification validate_classification(std::vector<NamedBlock> blocks);

struct FamilyApprox {
    Classification classification;
    std::vector<Subset> lowers;  // aligned with classification blocks
    std::vector<Subset> uppers;
    Subset solitary;
    std::size_t u_size;
    std::size_t v_size;

    std::size_t lower_total() const;
    std::size_t upper_total() const;
};

FamilyApprox approximate_family(const BinaryRelation& r, const Classification& f);

// Summed lower sizes over summed upper sizes. Throws UndefinedMeasureError
// when every upper approximation is empty.
Ratio accuracy(const FamilyApprox& fa);

struct Quality {
    Ratio over_v;  // summed lower sizes / |V|, the measure as defined
    Ratio over_u;  // summed lower sizes / |U|
};
Quality quality(const FamilyApprox& fa);

// lower == upper for every block.
bool is_r_definable(const FamilyApprox& fa);

enum class Verdict { Holds, Violated, Vacuous };
enum class ClaimForm { Implication, Biconditional };

const char* to_string(Verdict v) noexcept;
const char* to_string(ClaimForm f) noexcept;

using IndexSet = std::vector<std::size_t>;

// One evaluated claim instance. For implications the verdict is vacuous
// when the hypothesis is false; biconditionals are never vacuous.
struct ClaimInstance {
    std::string claim;
    ClaimForm form;
    IndexSet indices;  // 0-based, ascending; the "chosen" blocks
    bool hypothesis;
    bool conclusion;
    Verdict verdict;
};

struct TheoremReport {
    std::vector<ClaimInstance> instances;

    std::size_t count(Verdict v) const;
    bool any_violated() const { return count(Verdict::Violated) > 0; }
    // Instances of one claim, in report order.
    std::vector<const ClaimInstance*> of_claim(const std::string& claim) const;
};

// Claim identifiers.
namespace claims {
// upper(union of chosen) = U  <=>  lower(union of the rest) = {}
inline constexpr const char* kUnionUpperFullIffRestLowerEmpty = "union-upper-full-iff-rest-lower-empty";
// lower(union of chosen) != {}  <=>  union of the rest's uppers != U
inline constexpr const char* kUnionLowerNonemptyIffRestUppersNotFull = "union-lower-nonempty-iff-rest-uppers-not-full";

inline constexpr const char* kUnionUpperFullImpliesRestLowersEmpty = "union-upper-full-implies-rest-lowers-empty";
inline constexpr const char* kBlockUpperFullIffRestLowerEmpty = "block-upper-full-iff-rest-lower-empty";
inline constexpr const char* kBlockLowerEmptyIffRestUpperFull = "block-lower-empty-iff-rest-upper-full";
inline constexpr const char* kBlockUpperFullImpliesOtherLowersEmpty = "block-upper-full-implies-other-lowers-empty";
inline constexpr const char* kAllUppersFullImpliesAllLowersEmpty = "all-uppers-full-implies-all-lowers-empty";
inline constexpr const char* kUnionLowerNonemptyImpliesRestUppersNotFull = "union-lower-nonempty-implies-rest-uppers-not-full";
inline constexpr const char* kBlockLowerNonemptyIffRestUppersNotFull = "block-lower-nonempty-iff-rest-uppers-not-full";
inline constexpr const char* kBlockUpperNotFullIffRestLowerNonempty = "block-upper-not-full-iff-rest-lower-nonempty";
inline constexpr const char* kBlockLowerNonemptyImpliesOtherUppersNotFull = "block-lower-nonempty-implies-other-uppers-not-full";
inline constexpr const char* kAllLowersNonemptyImpliesAllUppersNotFull = "all-lowers-nonempty-implies-all-uppers-not-full";

// The ten consequences, in the order they are reported.
inline constexpr const char* kCorollaries[] = {
    kUnionUpperFullImpliesRestLowersEmpty,   kBlockUpperFullIffRestLowerEmpty,
    kBlockLowerEmptyIffRestUpperFull,        kBlockUpperFullImpliesOtherLowersEmpty,
    kAllUppersFullImpliesAllLowersEmpty,     kUnionLowerNonemptyImpliesRestUppersNotFull,
    kBlockLowerNonemptyIffRestUppersNotFull, kBlockUpperNotFullIffRestLowerNonempty,
    kBlockLowerNonemptyImpliesOtherUppersNotFull, kAllLowersNonemptyImpliesAllUppersNotFull,
};
}  // namespace claims

// Nonempty proper subsets of {0..n-1} in lexicographic order: all of them
// when n <= 12, otherwise singletons, complements of singletons and a
// seeded sample.
std::vector<IndexSet> proper_index_subsets(std::size_t n, std::uint64_t seed = 0);

// upper(union of chosen blocks) = U  <=>  lower(union of the rest) = {}.
// Throws LookupError unless `chosen` is a nonempty proper index set.
ClaimInstance check_upper_cover_duality(const BinaryRelation& r, const Classification& f,
                                        const IndexSet& chosen);
// lower(union of chosen blocks) != {}  <=>  union of the rest's uppers != U.
ClaimInstance check_lower_exclusion_duality(const BinaryRelation& r, const Classification& f,
                                            const IndexSet& chosen);

// Both dualities over every index set from proper_index_subsets.
TheoremReport dualities_report(const BinaryRelation& r, const Classification& f,
                               std::uint64_t seed = 0);
// The ten consequences over all applicable index choices.
TheoremReport corollaries_report(const BinaryRelation& r, const Classification& f,
                                 std::uint64_t seed = 0);

}  // namespace tworough
