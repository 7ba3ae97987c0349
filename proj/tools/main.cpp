// tworough: command-line front end.
//
// Exit codes: 0 success, 1 a check found a violation or a witness search
// came up empty, 2 input or usage error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tworough/approx.hpp"
#include "tworough/classification.hpp"
#include "tworough/io.hpp"
#include "tworough/property_lab.hpp"
#include "tworough/random.hpp"
#include "tworough/report.hpp"

namespace {

using namespace tworough;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;

struct Loaded {
    BinaryRelation relation;
    std::string source;
};

Loaded load_relation(const std::string& path) {
    const std::string text = read_text_file(path);
    try {
        RelationDocument doc = parse_relation_file(text, path);
        return {doc.to_relation(), path};
    } catch (const ParseError& e) {
        throw Error(path + ": " + e.what());
    }
}

RoughType require_type(const std::string& text) {
    const auto t = parse_rough_type(text);
    if (!t) {
        throw Error("unknown rough type '" + text + "' (expected 1-4, T1-T4 or Type1-Type4)");
    }
    return *t;
}

SetOperation require_op(const std::string& text) {
    const auto op = parse_set_operation(text);
    if (!op) {
        throw Error("unknown operation '" + text + "' (expected union or intersection)");
    }
    return *op;
}

// "L,R:T" -> remove T from cell (L, R).
struct Drop {
    RoughType left, right, result;
};

Drop parse_drop(const std::string& text) {
    const auto comma = text.find(',');
    const auto colon = text.find(':');
    if (comma == std::string::npos || colon == std::string::npos || colon < comma) {
        throw Error("malformed --drop-allowed '" + text + "' (expected L,R:T)");
    }
    return {require_type(text.substr(0, comma)), require_type(text.substr(comma + 1, colon - comma - 1)),
            require_type(text.substr(colon + 1))};
}

void emit(const AnalysisReport& report, const std::string& format) {
    std::cout << emit_report(report, format == "json" ? ReportFormat::Json : ReportFormat::Text);
}

struct Options {
    std::string format = "text";
    std::string relation;
    std::vector<std::string> sets;
    std::string classes;
    std::uint64_t seed = 0;
    bool exhaustive = false;
    std::size_t samples = 0;
    std::size_t pairs = 50;
    std::size_t max_u = 3;
    std::size_t max_v = 3;
    std::vector<std::string> ops;
    std::vector<std::string> drops;
    std::string op;
    std::string left, right, result;
    std::size_t u = 3, v = 3;
    std::string density = "1/2";
};

int cmd_neighbors(const Options& o) {
    const Loaded in = load_relation(o.relation);
    emit(neighbors_report(in.relation, in.source), o.format);
    return kExitOk;
}

int cmd_approx(const Options& o) {
    const Loaded in = load_relation(o.relation);
    std::vector<Subset> queries;
    for (const auto& s : o.sets) {
        queries.push_back(parse_subset_list(s, in.relation.universes_ptr(), Side::V));
    }
    emit(approx_report(in.relation, in.source, queries), o.format);
    return kExitOk;
}

int cmd_classify(const Options& o) {
    const Loaded in = load_relation(o.relation);
    std::vector<NamedBlock> blocks;
    try {
        blocks = parse_classification_file(read_text_file(o.classes), in.relation.universes_ptr());
    } catch (const ParseError& e) {
        throw Error(o.classes + ": " + e.what());
    }
    const Classification f = validate_classification(std::move(blocks));
    const ClassificationAnalysis analysis = analyze_classification(in.relation, f, o.seed);
    emit(classification_report(in.relation, in.source, analysis), o.format);
    return analysis.any_violated() ? kExitViolation : kExitOk;
}

int cmd_verify(const Options& o) {
    // With a relation, --samples is the number of subset pairs; without
    // one it is the number of random relations, each with --pairs pairs.
    const std::size_t pairs = o.relation.empty() ? o.pairs : o.samples;
    const SubsetBudget budget =
        o.samples > 0 ? SubsetBudget::sampled(pairs, o.seed) : SubsetBudget::exhaustive();
    nlohmann::json scope;
    scope["subsets"] = o.samples > 0 ? "sampled" : "exhaustive";
    if (o.samples > 0) {
        scope["pairs"] = pairs;
        scope["seed"] = o.seed;
    }
    PropertyReport report;
    if (!o.relation.empty()) {
        const Loaded in = load_relation(o.relation);
        scope["relation"] = in.source;
        report = verify_relation(in.relation, budget);
    } else if (o.samples > 0) {
        scope["relations"] = {{"mode", "random"},
                              {"count", o.samples},
                              {"max_u", o.max_u},
                              {"max_v", o.max_v},
                              {"density", Ratio::parse(o.density).to_string()}};
        report = run_property_campaign(
            GeneratorConfig::random(o.max_u, o.max_v, Ratio::parse(o.density), o.seed, o.samples, true),
            budget);
    } else {
        scope["relations"] = {{"mode", "exhaustive"}, {"max_u", o.max_u}, {"max_v", o.max_v}};
        for (const auto& config : exhaustive_shapes(o.max_u, o.max_v)) {
            PropertyReport part = run_property_campaign(config, budget);
            if (report.records.empty()) {
                report = std::move(part);
            } else {
                report.merge(part);
            }
        }
    }
    emit(property_report(report, scope), o.format);
    return report.passed() ? kExitOk : kExitViolation;
}

int cmd_tables(const Options& o) {
    std::vector<SetOperation> ops;
    for (const auto& s : o.ops) {
        ops.push_back(require_op(s));
    }
    if (ops.empty()) {
        ops = {SetOperation::Union, SetOperation::Intersection};
    }
    std::vector<GeneratorConfig> configs;
    std::size_t max_u = o.max_u;
    std::size_t max_v = o.max_v;
    std::optional<Loaded> in;
    if (!o.relation.empty()) {
        in = load_relation(o.relation);
        max_u = in->relation.u_size();
        max_v = in->relation.v_size();
    } else {
        if (max_v > kExhaustiveSubsetWidthCap) {
            throw Error("--max-v above the subset cap " + std::to_string(kExhaustiveSubsetWidthCap));
        }
        configs = exhaustive_shapes(max_u, max_v);
        for (const auto& c : configs) {
            c.validate();
        }
    }
    std::vector<Drop> drops;
    for (const auto& d : o.drops) {
        drops.push_back(parse_drop(d));
    }

    std::vector<TableRun> runs;
    for (SetOperation op : ops) {
        TypeTable table = expected_type_table(op);
        for (const Drop& d : drops) {
            table = table.without(d.left, d.right, d.result);
        }
        std::vector<TableCellFinding> cells;
        if (in) {
            cells = check_type_tables_for(in->relation, op, table);
        } else {
            cells = check_type_tables(configs, op, table);
        }
        runs.push_back({op, table, std::move(cells)});
    }
    AnalysisReport report = tables_report(runs, max_u, max_v);
    if (in) {
        report.tree["relation"] = relation_json(in->relation);
        report.tree["relation"]["source"] = in->source;
    }
    emit(report, o.format);
    return tables_conformant(runs) ? kExitOk : kExitViolation;
}

int cmd_witness(const Options& o) {
    const SetOperation op = require_op(o.op);
    const RoughType left = require_type(o.left);
    const RoughType right = require_type(o.right);
    const RoughType target = require_type(o.result);
    if (o.max_u * o.max_v > kExhaustiveCellCap || o.max_v > kExhaustiveSubsetWidthCap) {
        throw Error("search bound " + std::to_string(o.max_u) + "x" + std::to_string(o.max_v) +
                    " exceeds the exhaustive cap");
    }
    const auto witness = find_type_witness(op, left, right, target, exhaustive_shapes(o.max_u, o.max_v));
    emit(witness_report(op, left, right, target, o.max_u, o.max_v, witness), o.format);
    return witness ? kExitOk : kExitViolation;
}

int cmd_gen(const Options& o) {
    const GeneratorConfig config =
        GeneratorConfig::random(o.u, o.v, Ratio::parse(o.density), o.seed, 1);
    config.validate();
    const BinaryRelation r = generate_relations(config).at(0);
    std::cout << "# random relation: " << o.u << "x" << o.v << ", density "
              << config.density.to_string() << ", seed " << o.seed << "\n"
              << render_relation(r);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Approximation operators for relations between two universes"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "tworough 0.1.0");
    Options o;

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "Output format")
            ->check(CLI::IsMember({"text", "json"}))
            ->capture_default_str();
    };
    auto add_relation = [&](CLI::App* sub, bool required) {
        auto* opt = sub->add_option("--relation,-r", o.relation, "Relation file");
        if (required) {
            opt->required();
        }
    };

    auto* neighbors = app.add_subcommand("neighbors", "Neighborhoods, solitary set, seriality, partitions");
    add_relation(neighbors, true);
    add_format(neighbors);

    auto* approx = app.add_subcommand("approx", "Lower/upper approximation, boundary and rough type");
    add_relation(approx, true);
    approx->add_option("--set,-s", o.sets, "Comma-separated V labels (repeatable)")->required();
    add_format(approx);

    auto* classify = app.add_subcommand("classify", "Family approximation, measures and duality checks");
    add_relation(classify, true);
    classify->add_option("--classes,-c", o.classes, "Classification file")->required();
    classify->add_option("--seed", o.seed, "Seed for index-set sampling when there are many blocks");
    add_format(classify);

    auto* verify = app.add_subcommand("verify", "Algebraic property campaign");
    add_relation(verify, false);
    auto* exhaustive = verify->add_flag("--exhaustive", o.exhaustive, "Enumerate all subsets (default)");
    auto* samples = verify->add_option("--samples", o.samples, "Sample N subset pairs for --relation, else N random relations")
                        ->check(CLI::PositiveNumber);
    exhaustive->excludes(samples);
    verify->add_option("--seed", o.seed, "Sampling seed");
    verify->add_option("--pairs", o.pairs, "Subset pairs per relation when sampling")->capture_default_str();
    verify->add_option("--max-u", o.max_u, "Largest |U| swept")->capture_default_str();
    verify->add_option("--max-v", o.max_v, "Largest |V| swept")->capture_default_str();
    verify->add_option("--density", o.density, "Cell density for random relations")->capture_default_str();
    add_format(verify);

    auto* tables = app.add_subcommand("tables", "Type-table conformance and witness inventory");
    add_relation(tables, false);
    tables->add_option("--op", o.ops, "union and/or intersection (default both)");
    tables->add_option("--max-u", o.max_u, "Largest |U| swept")->capture_default_str();
    tables->add_option("--max-v", o.max_v, "Largest |V| swept")->capture_default_str();
    tables->add_option("--drop-allowed", o.drops, "Remove an alternative, L,R:T (repeatable)");
    add_format(tables);

    auto* witness = app.add_subcommand("witness", "Search for a relation realizing a table cell alternative");
    witness->add_option("--op", o.op, "union or intersection")->required();
    witness->add_option("--left", o.left, "Type of X")->required();
    witness->add_option("--right", o.right, "Type of Y")->required();
    witness->add_option("--result", o.result, "Wanted type of X op Y")->required();
    witness->add_option("--max-u", o.max_u, "Largest |U| searched")->capture_default_str();
    witness->add_option("--max-v", o.max_v, "Largest |V| searched")->capture_default_str();
    add_format(witness);

    auto* gen = app.add_subcommand("gen", "Emit a seeded random relation file");
    gen->add_option("--u", o.u, "|U|")->capture_default_str();
    gen->add_option("--v", o.v, "|V|")->capture_default_str();
    gen->add_option("--density", o.density, "Cell density, e.g. 1/2 or 0.3")->capture_default_str();
    gen->add_option("--seed", o.seed, "Seed")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (neighbors->parsed()) return cmd_neighbors(o);
        if (approx->parsed()) return cmd_approx(o);
        if (classify->parsed()) return cmd_classify(o);
        if (verify->parsed()) return cmd_verify(o);
        if (tables->parsed()) return cmd_tables(o);
        if (witness->parsed()) return cmd_witness(o);
        if (gen->parsed()) return cmd_gen(o);
    } catch (const ClassificationError& e) {
        std::cerr << "error: invalid classification\n";
        for (const auto& v : e.violations()) {
            std::cerr << "  " << v.message() << "\n";
        }
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
