#pragma once

// Structured analysis reports and their serialization. A report is a JSON
// tree; objects keep sorted keys, so both renderings are deterministic.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "tworough/classification.hpp"
#include "tworough/property_lab.hpp"
#include "tworough/ratio.hpp"
#include "tworough/relation.hpp"

namespace tworough {

inline constexpr int kReportSchemaVersion = 1;

struct AnalysisReport {
    nlohmann::json tree = nlohmann::json::object();
};

enum class ReportFormat { Json, Text };

// Json: two-space indented, trailing newline.
// Text: indented "key: value" lines. Label arrays print as "{a, b}"; an
// empty array under a plural key prints "no <key>".
std::string emit_report(const AnalysisReport& report, ReportFormat format);

// {"num", "den", "decimal"}
nlohmann::json ratio_json(const Ratio& r);
// Labels in universe order.
nlohmann::json subset_json(const Subset& s);
nlohmann::json relation_json(const BinaryRelation& r);

// Each builder stamps "schema_version" and "command".
AnalysisReport neighbors_report(const BinaryRelation& r, const std::string& source);
AnalysisReport approx_report(const BinaryRelation& r, const std::string& source,
                             const std::vector<Subset>& queries);

struct ClassificationAnalysis {
    FamilyApprox family;
    TheoremReport dualities;
    TheoremReport corollaries;

    bool any_violated() const { return dualities.any_violated() || corollaries.any_violated(); }
};

ClassificationAnalysis analyze_classification(const BinaryRelation& r, const Classification& f,
                                              std::uint64_t seed = 0);
AnalysisReport classification_report(const BinaryRelation& r, const std::string& source,
                                     const ClassificationAnalysis& analysis);

// `scope` describes what was swept; it is copied under "scope".
AnalysisReport property_report(const PropertyReport& report, const nlohmann::json& scope);

struct TableRun {
    SetOperation op;
    TypeTable table;
    std::vector<TableCellFinding> cells;
};

AnalysisReport tables_report(const std::vector<TableRun>& runs, std::size_t max_u,
                             std::size_t max_v);
bool tables_conformant(const std::vector<TableRun>& runs);

AnalysisReport witness_report(SetOperation op, RoughType left, RoughType right, RoughType target,
                              std::size_t max_u, std::size_t max_v,
                              const std::optional<TableWitness>& witness);

}  // namespace tworough
