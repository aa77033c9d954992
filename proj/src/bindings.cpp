#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "couponkit/extend.hpp"
#include "couponkit/factors.hpp"
#include "couponkit/generators.hpp"
#include "couponkit/graph.hpp"
#include "couponkit/io.hpp"
#include "couponkit/solver.hpp"

namespace py = pybind11;
using namespace couponkit;

namespace {

std::vector<int> coloring_to_list(const Coloring& c) {
    std::vector<int> out(c.size());
    for (int v = 0; v < c.size(); ++v) out[v] = c.is_set(v) ? c.get(v) : -1;
    return out;
}

Coloring coloring_from_list(const std::vector<int>& values) {
    return Coloring::from_values(values);
}

const char* status_name(SolveStatus s) {
    switch (s) {
        case SolveStatus::kSat: return "SAT";
        case SolveStatus::kUnsat: return "UNSAT";
        default: return "UNKNOWN";
    }
}

}  // namespace

PYBIND11_MODULE(_couponkit, m) {
    m.doc() = "Coupon colorings of cubic graphs: generators, exact solver, "
              "{1,2}-factors and the constructive coloring engine";

    py::class_<Graph>(m, "Graph")
        .def_static("from_edges", &Graph::from_edges, py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &Graph::n)
        .def_property_readonly("m", &Graph::m)
        .def("neighbors", &Graph::neighbors, py::arg("v"))
        .def("degree", &Graph::degree, py::arg("v"))
        .def("has_edge", &Graph::has_edge, py::arg("u"), py::arg("v"))
        .def("edges", &Graph::edges)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.n()) + ", m=" + std::to_string(g.m()) + ")";
        });

    m.def("parse_graph", &parse_graph_string, py::arg("text"));
    m.def("format_graph", &format_graph, py::arg("graph"));
    m.def("parse_coloring",
          [](const std::string& text) { return coloring_to_list(parse_coloring_string(text)); },
          py::arg("text"));
    m.def("format_coloring",
          [](const std::vector<int>& c) { return format_coloring(coloring_from_list(c)); },
          py::arg("coloring"));

    m.def("validate_cubic", [](const Graph& g) {
        auto r = validate_cubic(g);
        return py::make_tuple(r.ok, r.offending);
    });
    m.def("is_bipartite", [](const Graph& g) -> py::object {
        auto r = is_bipartite(g);
        if (!r.parts) return py::none();
        std::vector<int> side(r.parts->side.begin(), r.parts->side.end());
        return py::cast(side);
    });
    m.def("odd_cycle", [](const Graph& g) -> py::object {
        auto r = is_bipartite(g);
        if (r.parts) return py::none();
        return py::cast(r.odd_cycle);
    });
    m.def("is_connected", &is_connected);
    m.def("girth", [](const Graph& g) -> py::object {
        int gi = girth(g);
        if (gi == kInfiniteGirth) return py::none();
        return py::int_(gi);
    });
    m.def("find_cycle", [](const Graph& g, int len) -> py::object {
        auto c = find_cycle(g, len);
        if (!c) return py::none();
        return py::cast(*c);
    }, py::arg("graph"), py::arg("len"));
    m.def("contains_induced_cycle", &contains_induced_cycle, py::arg("graph"), py::arg("r"),
          py::arg("max_n") = 150);
    m.def("verify_coupon", [](const Graph& g, const std::vector<int>& c) {
        auto r = verify_coupon(g, coloring_from_list(c));
        return py::make_tuple(r.is_coupon, r.bad_vertices);
    }, py::arg("graph"), py::arg("coloring"));
    m.def("tds_pair_from_coloring", [](const Graph& g, const std::vector<int>& c) {
        auto p = tds_pair_from_coloring(g, coloring_from_list(c));
        return py::make_tuple(p.s0, p.s1);
    });
    m.def("coloring_from_tds_pair",
          [](const Graph& g, const std::vector<int>& s0, const std::vector<int>& s1) {
              return coloring_to_list(coloring_from_tds_pair(g, TdsPair{s0, s1}));
          });

    m.def("heawood", &heawood);
    m.def("counterexample60", &counterexample60);
    m.def("remark_graph", &remark_graph, py::arg("r"));
    m.def("double_cover", [](const Graph& g) { return double_cover(g).graph; });
    m.def("named", &named, py::arg("name"), py::arg("size") = 0, py::arg("seed") = 0);
    m.def("random_cubic", &random_cubic, py::arg("n"), py::arg("seed"),
          py::arg("require_connected") = false);

    m.def("one_two_factor", [](const Graph& g) -> py::object {
        auto f = one_two_factor(g);
        if (!f) return py::none();
        std::vector<std::vector<int>> comps;
        for (const auto& c : f->components) comps.push_back(c.vertices);
        return py::cast(comps);
    });

    m.def("decide", [](const Graph& g, bool fix_first, std::uint64_t budget) {
        SolveOptions opts;
        opts.fix_first = fix_first;
        opts.decision_budget = budget;
        SolveResult r = decide(g, opts);
        py::dict out;
        out["status"] = status_name(r.status);
        out["witness"] = r.witness ? py::cast(coloring_to_list(*r.witness)) : py::none();
        out["decisions"] = r.stats.decisions;
        out["propagations"] = r.stats.propagations;
        return out;
    }, py::arg("graph"), py::arg("fix_first") = false, py::arg("budget") = 0);

    m.def("enumerate_min_bad", [](const Graph& g, int limit_n) {
        EnumerationResult r = enumerate_min_bad(g, limit_n);
        py::dict out;
        out["min_bad"] = r.min_bad;
        out["achiever"] = coloring_to_list(r.achiever);
        out["histogram"] = r.histogram;
        return out;
    }, py::arg("graph"), py::arg("limit_n") = 24);

    m.def("color_cubic_with_c4",
          [](const Graph& g) { return coloring_to_list(color_cubic_with_c4(g)); },
          py::arg("graph"));
}
