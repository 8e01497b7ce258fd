#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "mist/bipartite_permutation.hpp"
#include "mist/block_cactus.hpp"
#include "mist/chain.hpp"
#include "mist/cograph.hpp"
#include "mist/generators.hpp"
#include "mist/oracle.hpp"
#include "mist/solve.hpp"
#include "mist/verify.hpp"

namespace py = pybind11;
using namespace mist;

namespace {

GraphClass class_arg(const std::string& name) {
    auto c = parse_graph_class(name);
    if (!c) throw py::value_error("unknown graph class '" + name + "'");
    return *c;
}

std::vector<std::pair<int, int>> edge_pairs(const std::vector<Edge>& edges) {
    std::vector<std::pair<int, int>> out;
    out.reserve(edges.size());
    for (const Edge& e : edges) out.emplace_back(e.u, e.v);
    return out;
}

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<Edge> e;
    e.reserve(edges.size());
    for (auto [u, v] : edges) e.emplace_back(u, v);
    return Graph::from_edges(n, e);
}

std::vector<std::string> class_names(const ClassSet& s) {
    std::vector<std::string> out;
    for (GraphClass c : s.list()) out.emplace_back(to_string(c));
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Maximum internal spanning trees on block, cactus, cograph, bipartite permutation and chain graphs";

    py::register_exception<GraphError>(m, "GraphError", PyExc_ValueError);
    py::register_exception<InvariantViolation>(m, "InvariantViolation", PyExc_RuntimeError);
    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

    py::class_<Graph>(m, "Graph")
        .def(py::init(&make_graph), py::arg("n"), py::arg("edges"),
             "Connected simple graph on vertices 0..n-1.")
        .def_static("parse", &parse_graph_string, py::arg("text"),
                    "Read the edge-list text format (1-based ids).")
        .def_property_readonly("n", &Graph::n)
        .def_property_readonly("m", &Graph::m)
        .def("edges", [](const Graph& g) { return edge_pairs(g.edges()); })
        .def("neighbors", [](const Graph& g, Vertex v) {
            if (v < 0 || v >= g.n()) throw py::index_error("vertex out of range");
            auto s = g.neighbors(v);
            return std::vector<Vertex>(s.begin(), s.end());
        })
        .def("adjacent", &Graph::adjacent)
        .def("to_text", [](const Graph& g) {
            std::ostringstream out;
            write_graph(out, g);
            return out.str();
        })
        .def("__repr__", [](const Graph& g) {
            return "<Graph n=" + std::to_string(g.n()) + " m=" + std::to_string(g.m()) + ">";
        });

    py::class_<SpanningTree>(m, "SpanningTree")
        .def_property_readonly("n", &SpanningTree::n)
        .def_property_readonly("internal_count", &SpanningTree::internal_count)
        .def("edges", [](const SpanningTree& t) { return edge_pairs(t.edges()); })
        .def("degree", &SpanningTree::degree)
        .def("leaves", &SpanningTree::leaves)
        .def("__repr__", [](const SpanningTree& t) {
            return "<SpanningTree n=" + std::to_string(t.n()) + " internal=" +
                   std::to_string(t.internal_count()) + ">";
        });

    m.def("classify", [](const Graph& g) { return class_names(classify_graph(g)); }, py::arg("graph"),
          "Names of the supported classes containing the graph.");

    m.def(
        "solve",
        [](const Graph& g, const std::string& cls) {
            GraphClass c;
            if (cls == "auto") {
                auto picked = pick_class(classify_graph(g));
                if (!picked) throw py::value_error("graph is in none of the supported classes");
                c = *picked;
            } else {
                c = class_arg(cls);
            }
            return solve_graph(g, c).tree;
        },
        py::arg("graph"), py::arg("cls") = "auto", "Maximum internal spanning tree.");

    m.def(
        "path_cover",
        [](const Graph& g, const std::string& cls) {
            GraphClass c = cls == "auto" ? (classify_graph(g).has(GraphClass::chain) ? GraphClass::chain
                                                                                    : GraphClass::cograph)
                                         : class_arg(cls);
            if (c == GraphClass::chain) return chain_path_cover(g, compute_chain_ordering(g)).cover.paths();
            if (c == GraphClass::cograph) return cotree_path_cover(g, build_cotree(g)).cover.paths();
            throw py::value_error("path covers are available for cographs and chain graphs");
        },
        py::arg("graph"), py::arg("cls") = "auto", "Maximum-edge path cover as a list of vertex lists.");

    m.def("oracle_mist", [](const Graph& g) { return oracle_mist(g).count; }, py::arg("graph"),
          "Exact optimum by exhaustive dynamic programming (n <= 11).");
    m.def("oracle_max_pathcover_edges", [](const Graph& g) { return oracle_max_pathcover_edges(g); },
          py::arg("graph"));
    m.def("spanning_tree_count", &matrix_tree_count, py::arg("graph"));

    m.def(
        "generate",
        [](const std::string& cls, int n, std::uint64_t seed, double density) {
            return generate(GenSpec{class_arg(cls), n, seed, density}).graph;
        },
        py::arg("cls"), py::arg("n"), py::arg("seed") = 1, py::arg("density") = 0.5);
    m.def("family_block_cactus", &family_block_cactus, py::arg("k"));
    m.def("family_bp", [](int k) { return family_bp(k).graph; }, py::arg("k"));

    m.def(
        "verify",
        [](int trials, std::uint64_t seed) {
            VerifyOptions opt;
            opt.trials = trials;
            opt.seed = seed;
            VerifyReport rep = run_verification(opt);
            py::dict checks;
            for (int c = 0; c < kCheckCount; ++c)
                checks[py::str(std::string(to_string(static_cast<Check>(c))))] =
                    py::make_tuple(rep.performed[c], rep.failed[c]);
            py::dict out;
            out["instances"] = rep.instances;
            out["ok"] = rep.ok();
            out["checks"] = checks;
            return out;
        },
        py::arg("trials") = 20, py::arg("seed") = 1,
        "Solver versus oracle on random instances; checks map to (performed, failed).");
}
