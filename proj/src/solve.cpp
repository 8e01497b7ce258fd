#include "mist/solve.hpp"

#include <algorithm>

#include "mist/bipartite_permutation.hpp"
#include "mist/block_cactus.hpp"
#include "mist/chain.hpp"
#include "mist/cograph.hpp"

namespace mist {

std::optional<GraphClass> pick_class(const ClassSet& classes) {
    for (GraphClass c : {GraphClass::chain, GraphClass::bipartite_permutation, GraphClass::block,
                         GraphClass::cactus, GraphClass::cograph})
        if (classes.has(c)) return c;
    return std::nullopt;
}

namespace {

BoundCheck upper_bound_check(const SolveReport& r) {
    const int opt = r.tree.internal_count();
    const int pc = r.path_cover->edge_count();
    return {"internal <= path cover edges - 1", r.tree.n() < 2 || opt <= pc - 1,
            std::to_string(opt) + " vs " + std::to_string(pc)};
}

}  // namespace

SolveReport solve_graph(const Graph& g, GraphClass cls,
                        const std::optional<BipartiteOrdering>& ordering) {
    SolveReport r;
    r.cls = cls;
    switch (cls) {
        case GraphClass::block:
        case GraphClass::cactus: {
            BlockCactusResult res = solve_block_cactus_detailed(g, cls);
            r.tree = std::move(res.tree);
            if (res.blocks.size() >= 2) {
                r.bad_count = res.labels.bad_count;
                r.checks.push_back({"internal = n - bad blocks",
                                    r.tree.internal_count() == g.n() - res.labels.bad_count,
                                    std::to_string(g.n()) + " - " + std::to_string(res.labels.bad_count)});
            }
            break;
        }
        case GraphClass::cograph: {
            CographResult res = solve_cograph_detailed(g, build_cotree(g));
            r.tree = std::move(res.tree);
            r.path_cover = std::move(res.cover.cover);
            r.checks.push_back(upper_bound_check(r));
            r.checks.push_back({"internal = path cover edges - 1",
                                r.tree.n() < 2 || r.tree.internal_count() == r.path_cover->edge_count() - 1,
                                ""});
            break;
        }
        case GraphClass::bipartite_permutation: {
            StrongOrdering o = ordering ? *ordering : compute_strong_ordering(g);
            r.tree = solve_bp(g, o);
            break;
        }
        case GraphClass::chain: {
            ChainOrdering o = ordering ? *ordering : compute_chain_ordering(g);
            OrderingCheck c = verify_chain_ordering(g, o);
            if (!c) throw NotChain(c.violation, c.witness.size() > 0 ? c.witness[0] : -1,
                                   c.witness.size() > 1 ? c.witness[1] : -1);
            ContiguousPathCover pc = chain_path_cover(g, o);
            r.tree = solve_bp(g, o);
            r.path_cover = pc.cover;
            r.checks.push_back(upper_bound_check(r));
            const int gap = pc.cover.edge_count() - r.tree.internal_count();
            r.checks.push_back({"path cover edges - internal in {1, 2}", g.n() < 2 || gap == 1 || gap == 2,
                                "gap " + std::to_string(gap)});
            StitchResult st = stitch_path_cover(g, pc, o);
            r.checks.push_back({"stitched cover >= path cover edges - 2",
                                st.tree.internal_count() >= pc.cover.edge_count() - 2,
                                std::to_string(st.tree.internal_count())});
            break;
        }
    }
    return r;
}

void write_dot(std::ostream& out, const Graph& g, const SpanningTree& t, bool all_edges) {
    out << "graph mist {\n";
    out << "  label=\"internal_count " << t.internal_count() << "\";\n";
    out << "  node [shape=circle, style=filled];\n";
    for (Vertex v = 0; v < g.n(); ++v) {
        out << "  " << v + 1 << " [label=\"" << g.label(v) << "\", fillcolor="
            << (t.is_internal(v) ? "\"#9ecae1\"" : "white") << "];\n";
    }
    std::vector<Edge> tree_edges = t.edges();
    std::sort(tree_edges.begin(), tree_edges.end());
    for (const Edge& e : g.edges()) {
        bool in_tree = std::binary_search(tree_edges.begin(), tree_edges.end(), e);
        if (!in_tree && !all_edges) continue;
        out << "  " << e.u + 1 << " -- " << e.v + 1;
        if (in_tree)
            out << " [penwidth=2];\n";
        else
            out << " [style=dashed, color=gray];\n";
    }
    out << "}\n";
}

}  // namespace mist
