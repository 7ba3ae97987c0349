#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tworough/approx.hpp"
#include "tworough/classification.hpp"
#include "tworough/io.hpp"
#include "tworough/property_lab.hpp"
#include "tworough/report.hpp"

namespace py = pybind11;
using namespace tworough;

namespace {

using Labels = std::vector<std::string>;

Subset v_subset(const BinaryRelation& r, const Labels& labels) {
    return Subset::of_labels(r.universes_ptr(), Side::V, labels);
}

py::object fraction(const Ratio& q) {
    return py::module_::import("fractions").attr("Fraction")(q.num(), q.den());
}

Strategy parse_strategy(const std::string& name) {
    if (name == "set") return Strategy::SetForm;
    if (name == "matrix") return Strategy::MatrixForm;
    if (name == "neighborhood") return Strategy::NeighborhoodUnion;
    throw py::value_error("strategy must be 'set', 'matrix' or 'neighborhood'");
}

SetOperation parse_op(const std::string& name) {
    const auto op = parse_set_operation(name);
    if (!op) {
        throw py::value_error("operation must be 'union' or 'intersection'");
    }
    return *op;
}

RoughType parse_type(int n) { return rough_type_from_number(n); }

std::vector<Labels> partition_labels(const Partition& p) {
    std::vector<Labels> out;
    for (const auto& b : p.blocks) {
        out.push_back(b.labels());
    }
    return out;
}

Classification build_classification(const BinaryRelation& r,
                                    const std::vector<std::pair<std::string, Labels>>& blocks) {
    std::vector<NamedBlock> named;
    for (const auto& [name, labels] : blocks) {
        named.push_back({name, v_subset(r, labels)});
    }
    return validate_classification(std::move(named));
}

py::dict witness_dict(const TableWitness& w) {
    py::dict d;
    d["relation"] = w.relation;
    d["x"] = w.x.labels();
    d["y"] = w.y.labels();
    return d;
}

}  // namespace

PYBIND11_MODULE(_tworough, m) {
    m.doc() = "Rough approximations of relations between two universes";

    auto base = py::register_exception<Error>(m, "TwoRoughError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<DimensionError>(m, "DimensionError", base.ptr());
    py::register_exception<LookupError>(m, "UnknownLabelError", base.ptr());
    py::register_exception<SideMismatchError>(m, "SideMismatchError", base.ptr());
    py::register_exception<UndefinedMeasureError>(m, "UndefinedMeasureError", base.ptr());
    py::register_exception<CapExceededError>(m, "CapExceededError", base.ptr());
    py::register_exception<ClassificationError>(m, "ClassificationError", base.ptr());

    py::class_<BinaryRelation>(m, "Relation")
        .def(py::init([](Labels u, Labels v, const std::vector<std::vector<int>>& rows) {
                 return new_relation(Universes::create(std::move(u), std::move(v)), rows);
             }),
             py::arg("u_labels"), py::arg("v_labels"), py::arg("rows"))
        .def_static(
            "parse", [](const std::string& text) { return parse_relation_file(text).to_relation(); },
            py::arg("text"))
        .def("render", [](const BinaryRelation& r) { return render_relation(r); })
        .def_property_readonly("u_labels",
                               [](const BinaryRelation& r) { return r.universes().labels(Side::U); })
        .def_property_readonly("v_labels",
                               [](const BinaryRelation& r) { return r.universes().labels(Side::V); })
        .def_property_readonly("shape",
                               [](const BinaryRelation& r) { return std::make_pair(r.u_size(), r.v_size()); })
        .def("holds",
             [](const BinaryRelation& r, const std::string& x, const std::string& y) {
                 return r.holds(r.universes().index_of(Side::U, x), r.universes().index_of(Side::V, y));
             })
        .def("rows",
             [](const BinaryRelation& r) {
                 std::vector<std::vector<int>> out;
                 for (std::size_t i = 0; i < r.u_size(); ++i) {
                     std::vector<int> row;
                     for (std::size_t j = 0; j < r.v_size(); ++j) {
                         row.push_back(r.holds(i, j) ? 1 : 0);
                     }
                     out.push_back(std::move(row));
                 }
                 return out;
             })
        .def("right_neighborhood",
             [](const BinaryRelation& r, const std::string& x) { return right_neighborhood(r, x).labels(); })
        .def("left_neighborhood",
             [](const BinaryRelation& r, const std::string& y) { return left_neighborhood(r, y).labels(); })
        .def("solitary", [](const BinaryRelation& r) { return solitary_set(r).labels(); })
        .def("is_serial", [](const BinaryRelation& r) { return is_serial(r); })
        .def("partitions",
             [](const BinaryRelation& r) {
                 const auto q = quotient_partitions(r);
                 return std::make_pair(partition_labels(q.u), partition_labels(q.v));
             })
        .def("saturation_identity_holds", [](const BinaryRelation& r) { return saturation_identity_holds(r); })
        .def("__eq__", [](const BinaryRelation& a, const BinaryRelation& b) { return a == b; })
        .def("__repr__", [](const BinaryRelation& r) { return "Relation(" + r.to_string() + ")"; });

    m.def(
        "lower",
        [](const BinaryRelation& r, const Labels& y, const std::string& strategy) {
            return lower_approximation(r, v_subset(r, y), parse_strategy(strategy)).labels();
        },
        py::arg("relation"), py::arg("y"), py::arg("strategy") = "set");
    m.def(
        "upper",
        [](const BinaryRelation& r, const Labels& y, const std::string& strategy) {
            return upper_approximation(r, v_subset(r, y), parse_strategy(strategy)).labels();
        },
        py::arg("relation"), py::arg("y"), py::arg("strategy") = "set");
    m.def(
        "boundary", [](const BinaryRelation& r, const Labels& y) { return boundary(r, v_subset(r, y)).labels(); },
        py::arg("relation"), py::arg("y"));
    m.def(
        "rough_type", [](const BinaryRelation& r, const Labels& y) { return type_number(rough_type(r, v_subset(r, y))); },
        py::arg("relation"), py::arg("y"));

    m.def(
        "classify",
        [](const BinaryRelation& r, const std::vector<std::pair<std::string, Labels>>& blocks) {
            const Classification f = build_classification(r, blocks);
            const FamilyApprox fa = approximate_family(r, f);
            py::dict d;
            py::list lowers, uppers;
            for (std::size_t i = 0; i < f.size(); ++i) {
                lowers.append(fa.lowers[i].labels());
                uppers.append(fa.uppers[i].labels());
            }
            d["lowers"] = lowers;
            d["uppers"] = uppers;
            try {
                d["accuracy"] = fraction(accuracy(fa));
            } catch (const UndefinedMeasureError&) {
                d["accuracy"] = py::none();
            }
            const Quality q = quality(fa);
            d["quality"] = fraction(q.over_v);
            d["quality_u"] = fraction(q.over_u);
            d["definable"] = is_r_definable(fa);
            const TheoremReport dual = dualities_report(r, f);
            const TheoremReport cor = corollaries_report(r, f);
            d["dualities_violated"] = dual.count(Verdict::Violated);
            d["corollaries_violated"] = cor.count(Verdict::Violated);
            return d;
        },
        py::arg("relation"), py::arg("blocks"),
        "blocks: sequence of (name, labels) pairs");

    m.def(
        "verify_relation",
        [](const BinaryRelation& r, std::optional<std::size_t> pairs, std::uint64_t seed) {
            const SubsetBudget budget = pairs ? SubsetBudget::sampled(*pairs, seed) : SubsetBudget::exhaustive();
            const PropertyReport report = verify_relation(r, budget);
            py::dict d;
            for (const auto& rec : report.records) {
                d[py::str(rec.id)] = std::make_pair(rec.instances, rec.violation_count);
            }
            return d;
        },
        py::arg("relation"), py::arg("pairs") = py::none(), py::arg("seed") = 0,
        "Maps property id to (instances, violations). Exhaustive unless pairs is given.");

    m.def(
        "type_table",
        [](const std::string& op) {
            const TypeTable& t = expected_type_table(parse_op(op));
            std::vector<std::vector<std::vector<int>>> out(4, std::vector<std::vector<int>>(4));
            for (RoughType a : kAllRoughTypes) {
                for (RoughType b : kAllRoughTypes) {
                    for (RoughType c : t.cell(a, b).types()) {
                        out[type_number(a) - 1][type_number(b) - 1].push_back(type_number(c));
                    }
                }
            }
            return out;
        },
        py::arg("op"));

    m.def(
        "find_witness",
        [](const std::string& op, int left, int right, int result, std::size_t max_u,
           std::size_t max_v) -> py::object {
            const auto w = find_type_witness(parse_op(op), parse_type(left), parse_type(right),
                                             parse_type(result), exhaustive_shapes(max_u, max_v));
            if (!w) {
                return py::none();
            }
            return witness_dict(*w);
        },
        py::arg("op"), py::arg("left"), py::arg("right"), py::arg("result"), py::arg("max_u") = 3,
        py::arg("max_v") = 3);

    m.def(
        "neighbors_report",
        [](const BinaryRelation& r, const std::string& format) {
            return emit_report(neighbors_report(r, "<inline>"),
                               format == "json" ? ReportFormat::Json : ReportFormat::Text);
        },
        py::arg("relation"), py::arg("format") = "json");
}
