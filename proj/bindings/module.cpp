#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "edgedel/exact.hpp"
#include "edgedel/forbidden.hpp"
#include "edgedel/graph_io.hpp"
#include "edgedel/kernelize.hpp"
#include "edgedel/reductions.hpp"
#include "edgedel/vc_solver.hpp"

namespace py = pybind11;
using namespace edgedel;

namespace {

std::vector<Edge> to_edges(const std::vector<std::pair<int, int>>& pairs) {
    std::vector<Edge> out;
    out.reserve(pairs.size());
    for (auto [u, v] : pairs) out.push_back(make_edge(u, v));
    return out;
}

std::vector<std::pair<int, int>> from_edges(const std::vector<Edge>& edges) {
    std::vector<std::pair<int, int>> out;
    out.reserve(edges.size());
    for (const auto& e : edges) out.push_back({e.u, e.v});
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "edge-deletion solvers for component-capped graphs";

    py::register_exception<GuardError>(m, "GuardError");

    py::class_<Graph>(m, "Graph")
        .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) {
                 return Graph(n, to_edges(edges));
             }),
             py::arg("vertex_count"), py::arg("edges"))
        .def_property_readonly("vertex_count", &Graph::vertex_count)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def_property_readonly("edges", [](const Graph& g) { return from_edges(g.edges()); })
        .def("degree", &Graph::degree)
        .def("has_edge", &Graph::has_edge)
        .def("without_edges",
             [](const Graph& g, const std::vector<std::pair<int, int>>& edges) {
                 return g.without_edges(to_edges(edges));
             })
        .def("__repr__", [](const Graph& g) {
            std::ostringstream os;
            os << "Graph(" << g.vertex_count() << " vertices, " << g.edge_count() << " edges)";
            return os.str();
        });

    py::class_<WeightedGraph>(m, "WeightedGraph")
        .def(py::init([](int n, const std::vector<std::tuple<int, int, int>>& wedges) {
                 std::vector<Edge> edges;
                 std::vector<int> weights;
                 for (auto [u, v, w] : wedges) {
                     edges.push_back(make_edge(u, v));
                     weights.push_back(w);
                 }
                 std::vector<std::size_t> order(edges.size());
                 for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
                 std::sort(order.begin(), order.end(),
                           [&](std::size_t a, std::size_t b) { return edges[a] < edges[b]; });
                 std::vector<Edge> se;
                 std::vector<int> sw;
                 for (std::size_t i : order) {
                     se.push_back(edges[i]);
                     sw.push_back(weights[i]);
                 }
                 return WeightedGraph(Graph(n, std::move(se)), std::move(sw));
             }),
             py::arg("vertex_count"), py::arg("weighted_edges"))
        .def_property_readonly("graph", &WeightedGraph::graph)
        .def_property_readonly("total_weight", &WeightedGraph::total_weight)
        .def("weighted_degree", &WeightedGraph::weighted_degree)
        .def_property_readonly("max_weighted_degree", &WeightedGraph::max_weighted_degree);

    m.def("read_graph", [](const std::string& text) { return read_graph(text); });
    m.def("write_graph", &write_graph);
    m.def("read_weighted", [](const std::string& text) { return read_weighted(text); });
    m.def("write_weighted", &write_weighted);

    m.def("connected_components", &connected_components);
    m.def("min_vertex_cover", &min_vertex_cover, py::arg("graph"), py::arg("bound"));
    m.def("twin_classes", [](const Graph& g, const std::vector<Vertex>& cover) {
        auto tc = twin_classes(g, cover);
        std::vector<std::pair<std::vector<Vertex>, std::vector<Vertex>>> out;
        for (const auto& c : tc.classes) out.push_back({c.signature, c.members});
        return out;
    });

    py::class_<ForbiddenFamily>(m, "ForbiddenFamily")
        .def_static("from_json", &family_from_json)
        .def_static("all_trees", &ForbiddenFamily::all_trees)
        .def("to_json", [](const ForbiddenFamily& f) { return family_to_json(f); });

    m.def("contains_star", &contains_star);
    m.def("contains_cycle_exact", &contains_cycle_exact);
    m.def("contains_tree_family", &contains_tree_family);
    m.def("family_free", &family_free);
    m.def("subgraph_isomorphic", &subgraph_isomorphic);

    py::class_<Solution>(m, "Solution")
        .def_property_readonly("deleted_edges",
                               [](const Solution& s) { return from_edges(s.deleted_edges); })
        .def_property_readonly("size", &Solution::size)
        .def("__repr__", [](const Solution& s) {
            return "Solution(size " + std::to_string(s.size()) + ")";
        });

    m.def(
        "brute_force_min",
        [](const Graph& g, const ForbiddenFamily& fam, int k_max) {
            return brute_force_min(g, fam, k_max);
        },
        py::arg("graph"), py::arg("family"), py::arg("k_max"));
    m.def(
        "branch_cap", [](const Graph& g, int h, int k) { return branch_cap(g, h, k); },
        py::arg("graph"), py::arg("h"), py::arg("k"));
    m.def("verify", [](const Graph& g, const std::vector<std::pair<int, int>>& deleted,
                       const ForbiddenFamily& fam) {
        Solution sol;
        sol.deleted_edges = to_edges(deleted);
        std::sort(sol.deleted_edges.begin(), sol.deleted_edges.end());
        return verify(g, sol, fam);
    });

    py::class_<KernelResult> kr(m, "KernelResult");
    kr.def_readonly("reduced", &KernelResult::reduced)
        .def_readonly("removed_components", &KernelResult::removed_components)
        .def_readonly("vertex_map", &KernelResult::vertex_map)
        .def_property_readonly("verdict", [](const KernelResult& r) {
            return r.verdict == KernelResult::Verdict::open ? "open" : "no_by_bounds";
        });
    m.def("kernelize", &kernelize, py::arg("graph"), py::arg("k"), py::arg("h"));

    m.def("enumerate_partitions", [](const std::vector<Vertex>& cover) {
        std::vector<std::pair<std::string, std::vector<std::vector<Vertex>>>> out;
        for (const auto& p : enumerate_partitions(cover)) out.push_back({p.rgs, p.blocks});
        return out;
    });
    py::class_<VcSolveReport>(m, "VcSolveReport")
        .def_readonly("solution", &VcSolveReport::solution)
        .def_readonly("objective", &VcSolveReport::objective)
        .def_readonly("best_partition_rgs", &VcSolveReport::best_partition_rgs)
        .def_readonly("partitions_tried", &VcSolveReport::partitions_tried)
        .def_readonly("cover_size", &VcSolveReport::cover_size);
    m.def("solve_vc", &solve_vc, py::arg("graph"), py::arg("h"));
    m.def("solve_vc_report", &solve_vc_report, py::arg("graph"), py::arg("h"));

    py::class_<MmoReduction>(m, "MmoReduction")
        .def_readonly("graph", &MmoReduction::graph)
        .def_readonly("family", &MmoReduction::family)
        .def_readonly("budget", &MmoReduction::budget)
        .def_property_readonly("N", [](const MmoReduction& r) { return r.layout.path_unit; })
        .def_property_readonly("omega", [](const MmoReduction& r) { return r.layout.omega; });
    m.def(
        "gen_mmo", [](const WeightedGraph& wg, int r) { return gen_mmo({wg, r}); },
        py::arg("weighted_graph"), py::arg("r"));
    m.def(
        "mmo_brute_force",
        [](const WeightedGraph& wg, int r) -> std::optional<std::vector<Vertex>> {
            auto o = mmo_brute_force({wg, r});
            if (!o) return std::nullopt;
            return o->tail;
        },
        py::arg("weighted_graph"), py::arg("r"));
    m.def(
        "orientation_witness",
        [](const MmoReduction& red, const std::vector<Vertex>& tails) {
            return orientation_witness(red.layout, Orientation{tails});
        },
        py::arg("reduction"), py::arg("tails"));

    py::class_<HsReduction>(m, "HsReduction")
        .def_readonly("graph", &HsReduction::graph)
        .def_readonly("family", &HsReduction::family)
        .def_readonly("budget", &HsReduction::budget)
        .def_readonly("center", &HsReduction::center);
    m.def(
        "gen_hs",
        [](int universe, const std::vector<std::vector<int>>& sets, int k) {
            return gen_hs({universe, sets, k});
        },
        py::arg("universe"), py::arg("sets"), py::arg("k"));
    m.def(
        "hs_brute_force",
        [](int universe, const std::vector<std::vector<int>>& sets, int k) {
            return hs_brute_force({universe, sets, k});
        },
        py::arg("universe"), py::arg("sets"), py::arg("k"));
    m.def(
        "hs_witness",
        [](const HsReduction& red, int universe, const std::vector<std::vector<int>>& sets, int k,
           const std::vector<int>& hitting_set) {
            return hs_witness(red, {universe, sets, k}, hitting_set);
        },
        py::arg("reduction"), py::arg("universe"), py::arg("sets"), py::arg("k"),
        py::arg("hitting_set"));
}
