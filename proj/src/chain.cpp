#include "mist/chain.hpp"

#include <algorithm>

#include "mist/bipartite_permutation.hpp"

namespace mist {

namespace {

// Longest zig-zag s_a t_b s_{a+1} t_{b+1} ... starting on side `s` at rank a,
// with the other side starting at rank b.
std::vector<Vertex> zigzag_from(const Graph& g, const ChainOrdering& o, int s, int a, int b) {
    const auto& mine = o.order(s);
    const auto& other = o.order(1 - s);
    std::vector<Vertex> path{mine[a]};
    while (true) {
        if (b >= static_cast<int>(other.size()) || !g.adjacent(mine[a], other[b])) break;
        path.push_back(other[b]);
        if (a + 1 >= static_cast<int>(mine.size()) || !g.adjacent(other[b], mine[a + 1])) break;
        path.push_back(mine[++a]);
        ++b;
    }
    return path;
}

}  // namespace

ContiguousPathCover chain_path_cover(const Graph& g, const ChainOrdering& o) {
    const int n1 = static_cast<int>(o.x.size());
    const int n2 = static_cast<int>(o.y.size());
    std::vector<std::vector<Vertex>> paths;
    int a = 0, b = 0;  // first unvisited rank on each side
    while (a < n1 || b < n2) {
        std::vector<Vertex> px, py;
        if (a < n1) px = zigzag_from(g, o, 0, a, b);
        if (b < n2) py = zigzag_from(g, o, 1, b, a);
        std::vector<Vertex>& q = px.size() >= py.size() ? px : py;
        for (Vertex v : q) (o.side[v] == 0 ? a : b)++;
        paths.push_back(std::move(q));
    }
    ContiguousPathCover pc;
    pc.cover = PathCover::build(g, std::move(paths));
    pc.side = o.side;
    return pc;
}

StitchResult stitch_path_cover(const Graph& g, const ContiguousPathCover& pc,
                               const ChainOrdering& o) {
    StitchResult r;
    const auto& side = pc.side;
    std::vector<std::vector<Vertex>> paths = pc.cover.paths();
    std::vector<Edge> edges;

    int prev = -1;  // index of the previous nontrivial path
    for (int q = 0; q < static_cast<int>(paths.size()); ++q) {
        auto& Q = paths[q];
        if (Q.size() < 2) continue;
        if (prev < 0) {
            prev = q;
            continue;
        }
        const auto& P = paths[prev];
        if (side[P.back()] != 0)
            throw InvariantViolation("a path ends on the y side before another nontrivial path");
        if (side[Q.front()] == 0) {
            ++r.case1;
            r.combining.emplace_back(P[P.size() - 2], Q.front());
        } else if (side[Q.back()] == 0) {
            // y x y x ... y x  ->  x y x y ... x y
            ++r.case41;
            for (std::size_t i = 0; i + 1 < Q.size(); i += 2) std::swap(Q[i], Q[i + 1]);
            r.combining.emplace_back(P[P.size() - 2], Q.front());
        } else {
            ++r.case42;
            if (r.case42 > 1) throw InvariantViolation("the y-to-x combining case occurred twice");
            if (Q.size() < 3 || Q[Q.size() - 2] != o.x.back())
                throw InvariantViolation("path ending on the y side does not pass the last x");
            for (int later = q + 1; later < static_cast<int>(paths.size()); ++later)
                if (paths[later].size() != 1 || side[paths[later][0]] != 1)
                    throw InvariantViolation("component after a y-ended path is not a single y");
            r.combining.emplace_back(P[P.size() - 2], Q[1]);
        }
        prev = q;
    }

    std::vector<int> path_of(g.n(), -1);
    std::vector<char> inner(g.n(), 0);
    for (int p = 0; p < static_cast<int>(paths.size()); ++p)
        for (std::size_t i = 0; i < paths[p].size(); ++i) {
            path_of[paths[p][i]] = p;
            inner[paths[p][i]] = i > 0 && i + 1 < paths[p].size();
        }
    for (const auto& P : paths) {
        for (std::size_t i = 1; i < P.size(); ++i) edges.emplace_back(P[i - 1], P[i]);
        if (P.size() != 1) continue;
        Vertex v = P[0];
        Vertex best = -1;
        int best_path = -1;
        for (Vertex w : g.neighbors(v)) {
            if (!inner[w]) continue;
            if (path_of[w] > best_path || (path_of[w] == best_path && w < best)) {
                best = w;
                best_path = path_of[w];
            }
        }
        if (best < 0 && paths.size() > 1) best = g.neighbors(v).front();
        if (best >= 0) r.attachments.emplace_back(best, v);
    }
    edges.insert(edges.end(), r.combining.begin(), r.combining.end());
    edges.insert(edges.end(), r.attachments.begin(), r.attachments.end());
    r.tree = SpanningTree::build(g, std::move(edges));
    if (r.tree.internal_count() < pc.cover.edge_count() - 2)
        throw InvariantViolation("stitched tree has fewer than |E(P)| - 2 internal vertices");
    return r;
}

ChainBounds chain_bounds_report(const Graph& g) {
    ChainOrdering o = compute_chain_ordering(g);
    ChainBounds b;
    b.pathcover_edges = chain_path_cover(g, o).cover.edge_count();
    b.opt = solve_bp(g, o).internal_count();
    b.gap = b.pathcover_edges - b.opt;
    if (g.n() > 1 && (b.gap < 1 || b.gap > 2))
        throw InvariantViolation("chain graph gap " + std::to_string(b.gap) + " outside {1, 2}");
    return b;
}

}  // namespace mist
