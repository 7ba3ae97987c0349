#include "tworough/report.hpp"

#include <sstream>

#include "tworough/approx.hpp"

namespace tworough {

using nlohmann::json;

namespace {

bool is_ratio(const json& j) {
    return j.is_object() && j.size() == 3 && j.contains("num") && j.contains("den") &&
           j.contains("decimal");
}

std::string scalar_text(const json& j) {
    if (j.is_null()) {
        return "none";
    }
    if (j.is_string()) {
        return j.get<std::string>();
    }
    if (is_ratio(j)) {
        const auto num = j["num"].get<std::uint64_t>();
        const auto den = j["den"].get<std::uint64_t>();
        std::string fraction = std::to_string(num);
        if (den != 1) {
            fraction += "/" + std::to_string(den);
        }
        return fraction + " (" + j["decimal"].get<std::string>() + ")";
    }
    return j.dump();
}

bool is_inline(const json& j) { return !j.is_structured() || is_ratio(j); }

bool all_inline(const json& array) {
    for (const auto& e : array) {
        if (!is_inline(e)) {
            return false;
        }
    }
    return true;
}

std::string braced(const json& array) {
    std::string out = "{";
    bool first = true;
    for (const auto& e : array) {
        out += (first ? "" : ", ") + scalar_text(e);
        first = false;
    }
    return out + "}";
}

void emit_object(const json& obj, std::size_t indent, std::vector<std::string>& out);

void emit_member(const std::string& key, const json& v, std::size_t indent,
                 std::vector<std::string>& out) {
    const std::string pad(indent, ' ');
    if (is_inline(v)) {
        out.push_back(pad + key + ": " + scalar_text(v));
    } else if (v.is_array() && v.empty()) {
        out.push_back(!key.empty() && key.back() == 's' ? pad + "no " + key : pad + key + ": {}");
    } else if (v.is_array() && all_inline(v)) {
        out.push_back(pad + key + ": " + braced(v));
    } else if (v.is_array()) {
        out.push_back(pad + key + ":");
        for (const auto& e : v) {
            if (e.is_array() && all_inline(e)) {
                out.push_back(pad + "  - " + braced(e));
            } else if (e.is_object()) {
                std::vector<std::string> lines;
                emit_object(e, indent + 4, lines);
                if (lines.empty()) {
                    out.push_back(pad + "  - {}");
                    continue;
                }
                lines.front().replace(indent, 4, "  - ");
                out.insert(out.end(), lines.begin(), lines.end());
            } else {
                out.push_back(pad + "  - " + scalar_text(e));
            }
        }
    } else if (v.empty()) {
        out.push_back(pad + key + ": {}");
    } else {
        out.push_back(pad + key + ":");
        emit_object(v, indent + 2, out);
    }
}

void emit_object(const json& obj, std::size_t indent, std::vector<std::string>& out) {
    for (const auto& [key, value] : obj.items()) {
        emit_member(key, value, indent, out);
    }
}

json types_json(TypeSet s) {
    json out = json::array();
    for (RoughType t : s.types()) {
        out.push_back(to_string(t));
    }
    return out;
}

json verdict_counts(const TheoremReport& report) {
    return {{"holds", report.count(Verdict::Holds)},
            {"vacuous", report.count(Verdict::Vacuous)},
            {"violated", report.count(Verdict::Violated)}};
}

json instances_json(const TheoremReport& report, const Classification& f) {
    json out = json::array();
    for (const auto& inst : report.instances) {
        json names = json::array();
        for (std::size_t i : inst.indices) {
            names.push_back(f.block(i).name);
        }
        out.push_back({{"claim", inst.claim},
                       {"form", to_string(inst.form)},
                       {"blocks", names},
                       {"hypothesis", inst.hypothesis},
                       {"conclusion", inst.conclusion},
                       {"verdict", to_string(inst.verdict)}});
    }
    return out;
}

json witness_json(const TableWitness& w, SetOperation op) {
    const Subset result = apply(op, w.x, w.y);
    return {{"relation", relation_json(w.relation)},
            {"x", subset_json(w.x)},
            {"y", subset_json(w.y)},
            {"result", subset_json(result)},
            {"result_type", to_string(rough_type(w.relation, result))}};
}

AnalysisReport stamped(const char* command) {
    AnalysisReport report;
    report.tree["schema_version"] = kReportSchemaVersion;
    report.tree["command"] = command;
    return report;
}

}  // namespace

std::string emit_report(const AnalysisReport& report, ReportFormat format) {
    if (format == ReportFormat::Json) {
        return report.tree.dump(2) + "\n";
    }
    std::vector<std::string> lines;
    emit_object(report.tree, 0, lines);
    std::string out;
    for (const auto& l : lines) {
        out += l + "\n";
    }
    return out;
}

json ratio_json(const Ratio& r) {
    return {{"num", r.num()}, {"den", r.den()}, {"decimal", r.decimal(6)}};
}

json subset_json(const Subset& s) { return s.labels(); }

json relation_json(const BinaryRelation& r) {
    json rows = json::array();
    for (const auto& row : r.rows()) {
        rows.push_back(row.to_string());
    }
    return {{"dims", {{"u", r.u_size()}, {"v", r.v_size()}}},
            {"u", r.universes().labels(Side::U)},
            {"v", r.universes().labels(Side::V)},
            {"rows", rows}};
}

AnalysisReport neighbors_report(const BinaryRelation& r, const std::string& source) {
    AnalysisReport report = stamped("neighbors");
    json& t = report.tree;
    t["relation"] = relation_json(r);
    t["relation"]["source"] = source;

    json right = json::array();
    for (std::size_t x = 0; x < r.u_size(); ++x) {
        right.push_back({{"element", r.universes().label(Side::U, x)},
                         {"r", subset_json(right_neighborhood(r, x))}});
    }
    json left = json::array();
    for (std::size_t y = 0; y < r.v_size(); ++y) {
        left.push_back({{"element", r.universes().label(Side::V, y)},
                        {"l", subset_json(left_neighborhood(r, y))}});
    }
    t["right_neighborhoods"] = right;
    t["left_neighborhoods"] = left;
    t["solitary"] = subset_json(solitary_set(r));
    t["serial"] = is_serial(r);

    const QuotientPartitions q = quotient_partitions(r);
    auto blocks = [](const Partition& p) {
        json out = json::array();
        for (const auto& b : p.blocks) {
            out.push_back(subset_json(b));
        }
        return out;
    };
    t["u_partition"] = blocks(q.u);
    t["v_partition"] = blocks(q.v);
    t["saturated"] = saturation_identity_holds(r);
    return report;
}

AnalysisReport approx_report(const BinaryRelation& r, const std::string& source,
                             const std::vector<Subset>& queries) {
    AnalysisReport report = stamped("approx");
    json& t = report.tree;
    t["relation"] = relation_json(r);
    t["relation"]["source"] = source;
    json out = json::array();
    for (const auto& q : queries) {
        const ApproxResult a = approximate(r, q);
        out.push_back({{"set", subset_json(q)},
                       {"lower", subset_json(a.lower)},
                       {"upper", subset_json(a.upper)},
                       {"boundary", subset_json(a.boundary)},
                       {"type", to_string(a.type)}});
    }
    t["queries"] = out;
    return report;
}

ClassificationAnalysis analyze_classification(const BinaryRelation& r, const Classification& f,
                                              std::uint64_t seed) {
    return {approximate_family(r, f), dualities_report(r, f, seed), corollaries_report(r, f, seed)};
}

AnalysisReport classification_report(const BinaryRelation& r, const std::string& source,
                                     const ClassificationAnalysis& analysis) {
    AnalysisReport report = stamped("classify");
    json& t = report.tree;
    const FamilyApprox& fa = analysis.family;
    const Classification& f = fa.classification;

    t["relation"] = relation_json(r);
    t["relation"]["source"] = source;
    t["relation"]["serial"] = fa.solitary.empty();
    t["relation"]["solitary"] = subset_json(fa.solitary);

    json blocks = json::array();
    for (std::size_t i = 0; i < f.size(); ++i) {
        const Subset& lower = fa.lowers[i];
        const Subset& upper = fa.uppers[i];
        blocks.push_back({{"name", f.block(i).name},
                          {"members", subset_json(f.block(i).members)},
                          {"lower", subset_json(lower)},
                          {"upper", subset_json(upper)},
                          {"boundary", subset_json(upper - lower)},
                          {"type", to_string(classify_rough_type(lower.empty(), upper.is_full()))}});
    }
    t["blocks"] = blocks;

    json measures;
    measures["lower_total"] = fa.lower_total();
    measures["upper_total"] = fa.upper_total();
    try {
        measures["accuracy"] = ratio_json(accuracy(fa));
    } catch (const UndefinedMeasureError&) {
        measures["accuracy"] = nullptr;
    }
    const Quality q = quality(fa);
    measures["quality"] = ratio_json(q.over_v);
    measures["quality_u"] = ratio_json(q.over_u);
    t["measures"] = measures;
    t["definable"] = is_r_definable(fa);

    json dualities = verdict_counts(analysis.dualities);
    dualities["instances"] = instances_json(analysis.dualities, f);
    t["dualities"] = dualities;

    json corollaries = verdict_counts(analysis.corollaries);
    json per_claim = json::array();
    for (const char* id : claims::kCorollaries) {
        TheoremReport sub;
        for (const ClaimInstance* inst : analysis.corollaries.of_claim(id)) {
            sub.instances.push_back(*inst);
        }
        json c = verdict_counts(sub);
        c["claim"] = id;
        per_claim.push_back(c);
    }
    corollaries["claims"] = per_claim;
    corollaries["instances"] = instances_json(analysis.corollaries, f);
    t["corollaries"] = corollaries;
    return report;
}

AnalysisReport property_report(const PropertyReport& report, const json& scope) {
    AnalysisReport out = stamped("verify");
    json& t = out.tree;
    t["scope"] = scope;
    t["passed"] = report.passed();
    json records = json::array();
    for (const auto& rec : report.records) {
        json violations = json::array();
        for (const auto& v : rec.violations) {
            violations.push_back({{"relation", v.relation},
                                  {"subsets", v.subsets},
                                  {"expected", v.expected},
                                  {"got", v.got}});
        }
        records.push_back({{"id", rec.id},
                           {"instances", rec.instances},
                           {"violation_count", rec.violation_count},
                           {"passed", rec.passed()},
                           {"violations", violations}});
    }
    t["properties"] = records;
    return out;
}

bool tables_conformant(const std::vector<TableRun>& runs) {
    for (const auto& run : runs) {
        for (const auto& c : run.cells) {
            if (!c.conformant()) {
                return false;
            }
        }
    }
    return true;
}

AnalysisReport tables_report(const std::vector<TableRun>& runs, std::size_t max_u,
                             std::size_t max_v) {
    AnalysisReport report = stamped("tables");
    json& t = report.tree;
    t["bound"] = {{"max_u", max_u}, {"max_v", max_v}};
    t["conformant"] = tables_conformant(runs);

    json tables = json::array();
    json findings = json::array();
    json violations = json::array();
    for (const auto& run : runs) {
        json cells = json::array();
        for (const auto& c : run.cells) {
            json witnesses = json::array();
            for (const auto& [type, w] : c.witnesses) {
                json entry = witness_json(w, run.op);
                entry["type"] = to_string(type);
                witnesses.push_back(entry);
            }
            cells.push_back({{"left", to_string(c.left)},
                             {"right", to_string(c.right)},
                             {"allowed", types_json(c.allowed)},
                             {"observed", types_json(c.observed)},
                             {"instances", c.instances},
                             {"conformant", c.conformant()},
                             {"witnesses", witnesses}});
            const TypeSet unrealized = c.unrealized();
            if (c.allowed.size() > 1 && !unrealized.empty()) {
                findings.push_back({{"operation", to_string(run.op)},
                                    {"left", to_string(c.left)},
                                    {"right", to_string(c.right)},
                                    {"unrealized", types_json(unrealized)}});
            }
            if (!c.conformant()) {
                violations.push_back({{"operation", to_string(run.op)},
                                      {"left", to_string(c.left)},
                                      {"right", to_string(c.right)},
                                      {"unexpected", types_json(c.observed.minus(c.allowed))}});
            }
        }
        tables.push_back({{"operation", to_string(run.op)},
                          {"ambiguous_cells", run.table.ambiguous_cells()},
                          {"cells", cells}});
    }
    t["tables"] = tables;
    t["findings"] = findings;
    t["violations"] = violations;
    return report;
}

AnalysisReport witness_report(SetOperation op, RoughType left, RoughType right, RoughType target,
                              std::size_t max_u, std::size_t max_v,
                              const std::optional<TableWitness>& witness) {
    AnalysisReport report = stamped("witness");
    json& t = report.tree;
    t["request"] = {{"operation", to_string(op)},
                    {"left", to_string(left)},
                    {"right", to_string(right)},
                    {"result", to_string(target)}};
    t["bound"] = {{"max_u", max_u}, {"max_v", max_v}};
    t["found"] = witness.has_value();
    t["witness"] = witness ? witness_json(*witness, op) : json(nullptr);
    return report;
}

}  // namespace tworough
