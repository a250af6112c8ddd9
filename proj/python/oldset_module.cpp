#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "oldset/canonical.hpp"
#include "oldset/construct.hpp"
#include "oldset/edge_list.hpp"
#include "oldset/enumerate.hpp"
#include "oldset/forcing.hpp"
#include "oldset/old_solver.hpp"
#include "oldset/trees.hpp"
#include "oldset/verify.hpp"

namespace py = pybind11;
using namespace oldset;

namespace {

std::vector<int> set_to_list(const VertexSet& s) {
    std::vector<int> out;
    for (int v : s) out.push_back(v);
    return out;
}

VertexSet list_to_set(int universe, const std::vector<int>& vs) {
    VertexSet s(universe);
    for (int v : vs) s.add(v);
    return s;
}

}  // namespace

PYBIND11_MODULE(oldset, m) {
    m.doc() = "open-neighbourhood locating-domination analysis on digraphs with loops";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    py::class_<Digraph>(m, "Digraph")
        .def(py::init<int>(), py::arg("n"))
        .def(py::init<int, const std::vector<Arc>&>(), py::arg("n"), py::arg("arcs"))
        .def_property_readonly("order", &Digraph::order)
        .def("add_arc", &Digraph::add_arc)
        .def("has_arc", &Digraph::has_arc)
        .def("arcs", &Digraph::arcs)
        .def("in_neighbours",
             [](const Digraph& d, int v) { return set_to_list(d.in_neighbours(v)); })
        .def("out_neighbours",
             [](const Digraph& d, int v) { return set_to_list(d.out_neighbours(v)); })
        .def("__eq__", [](const Digraph& a, const Digraph& b) { return a == b; })
        .def("__repr__", [](const Digraph& d) { return "<Digraph " + compact_edge_list(d) + ">"; });

    m.def("parse_edge_list", [](const std::string& text) { return parse_edge_list(text); });
    m.def("emit_edge_list", &emit_edge_list);
    m.def("to_dot", [](const Digraph& d) {
        DotAnnotations ann;
        ann.forcing_arcs = forcing_arcs(d);
        ann.domination_forced = forced_report(d).domination_forced_set();
        return to_dot(d, &ann);
    });
    m.def("canonical_key", [](const Digraph& d) { return canonical_form(d).to_string(); });

    m.def("is_locatable", &is_locatable);
    m.def("in_twins", &in_twins);
    m.def("is_old_set", [](const Digraph& d, const std::vector<int>& s) {
        return is_old_set(d, list_to_set(d.order(), s));
    });
    m.def("min_old_set", [](const Digraph& d) {
        const OldResult r = min_old_set(d);
        py::dict out;
        out["locatable"] = r.locatable;
        out["gamma"] = r.gamma ? py::cast(*r.gamma) : py::none();
        out["witness"] = r.witness ? py::cast(set_to_list(*r.witness)) : py::none();
        return out;
    });
    m.def("is_extremal", &is_extremal);
    m.def("greedy_old_upper_bound", [](const Digraph& d) -> py::object {
        const auto bound = greedy_old_upper_bound(d);
        return bound ? py::cast(*bound) : py::none();
    });

    m.def("forced_report", [](const Digraph& d) {
        const ForcedReport rep = forced_report(d);
        py::list out;
        for (int v = 0; v < d.order(); ++v) {
            const ForcedVertex& fv = rep.vertices[v];
            py::dict entry;
            entry["vertex"] = v;
            entry["domination_witness"] =
                fv.domination_witness ? py::cast(*fv.domination_witness) : py::none();
            entry["location_witnesses"] = fv.location_witnesses;
            entry["domination_forced"] = fv.domination_forced();
            entry["location_forced"] = fv.location_forced();
            entry["double_forced"] = fv.double_forced();
            out.append(entry);
        }
        return out;
    });
    m.def("forcing_arcs", &forcing_arcs);
    m.def("forcing_decomposition", [](const Digraph& d) {
        const ForcingDecomposition fd = forcing_decomposition(d);
        py::dict out;
        out["arcs"] = fd.arcs;
        out["spans_cycles"] = fd.spans_cycles;
        out["cycles"] = fd.cycles;
        out["f_plus"] = fd.f_plus;
        out["f_minus"] = fd.f_minus;
        return out;
    });
    m.def("is_extremal_structural", &is_extremal_structural);
    m.def("strip_non_forcing_arcs", &strip_non_forcing_arcs);
    m.def("build_h_digraph", [](const Digraph& d) {
        const HForest h = build_h_digraph(d);
        py::dict out;
        out["arcs"] = h.arcs;
        out["parent"] = h.parent;
        out["roots"] = set_to_list(h.roots);
        out["is_forest"] = h.is_forest;
        return out;
    });

    py::class_<ExtremalBlueprint>(m, "ExtremalBlueprint")
        .def(py::init([](int n, const std::vector<int>& f_plus, const std::vector<int>& v_d,
                         const std::vector<int>& h_parent) {
                 ExtremalBlueprint b;
                 b.n = n;
                 b.f_plus = f_plus;
                 b.v_d = list_to_set(n, v_d);
                 b.h_parent = h_parent;
                 return b;
             }),
             py::arg("n"), py::arg("f_plus"), py::arg("v_d"), py::arg("h_parent"))
        .def_readonly("n", &ExtremalBlueprint::n)
        .def_readonly("f_plus", &ExtremalBlueprint::f_plus)
        .def_property_readonly("v_d",
                               [](const ExtremalBlueprint& b) { return set_to_list(b.v_d); })
        .def_readonly("h_parent", &ExtremalBlueprint::h_parent);

    m.def("validate_blueprint",
          [](const ExtremalBlueprint& b) { return validate_blueprint(b).problems; });
    m.def("construct_from_blueprint", &construct_from_blueprint);
    m.def("decompose_to_blueprint", &decompose_to_blueprint);
    m.def("build_half_graph_digraph", &build_half_graph_digraph);
    m.def("build_tc_rooted_tree", &build_tc_rooted_tree, py::arg("parent"),
          py::arg("add_loops") = true);
    m.def("build_directed_cycle", &build_directed_cycle);
    m.def("count_blueprints",
          [](int n) { return enumerate_blueprints(n, [](const ExtremalBlueprint&) {}); });

    m.def(
        "enumerate_tree_catalog",
        [](int n) {
            const TreeCatalog cat = enumerate_T_n(n);
            py::list members;
            for (const auto& entry : cat.members)
                members.append(py::make_tuple(entry.digraph, entry.provenance));
            py::dict out;
            out["order"] = cat.order;
            out["members"] = members;
            out["labelled_count"] = cat.labelled_count;
            return out;
        },
        py::arg("n"));
    m.def(
        "oracle_tree_catalog",
        [](int n) {
            const TreeCatalog cat = oracle_T_n(n);
            py::list members;
            for (const auto& entry : cat.members) members.append(entry.digraph);
            py::dict out;
            out["order"] = cat.order;
            out["members"] = members;
            out["labelled_count"] = cat.labelled_count;
            return out;
        },
        py::arg("n"));
    m.def("check_tree_lemmas",
          [](const Digraph& d) { return check_tree_lemmas(d).violations; });

    m.def("claim_names", [] { return claim_names(); });
    m.def(
        "verify_claim",
        [](const std::string& claim, py::object max_n, int workers) {
            VerifyOptions options;
            if (!max_n.is_none()) options.max_n = max_n.cast<int>();
            options.workers = workers;
            const VerificationReport report = verify_claim(claim, options);
            py::dict out;
            out["claim"] = report.claim;
            out["population"] = report.population;
            out["instances_checked"] = report.instances_checked;
            out["counterexamples"] = report.counterexamples;
            out["notes"] = report.notes;
            out["elapsed_seconds"] = report.elapsed_seconds;
            out["verified"] = report.verified();
            return out;
        },
        py::arg("claim"), py::arg("max_n") = py::none(), py::arg("workers") = 1);
}
