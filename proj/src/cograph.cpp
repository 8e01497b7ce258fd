#include "mist/cograph.hpp"

#include <algorithm>

namespace mist {

namespace {

using Paths = std::vector<std::vector<Vertex>>;

std::size_t vertex_count(const Paths& ps) {
    std::size_t total = 0;
    for (const auto& p : ps) total += p.size();
    return total;
}

// Cuts single vertices off the front of paths until there are `count` pieces.
Paths split_into(Paths ps, std::size_t count) {
    std::size_t extra = count - ps.size();
    Paths out;
    out.reserve(count);
    for (auto& p : ps) {
        std::size_t i = 0;
        while (extra > 0 && p.size() - i >= 2) {
            out.push_back({p[i++]});
            --extra;
        }
        out.emplace_back(p.begin() + static_cast<std::ptrdiff_t>(i), p.end());
    }
    return out;
}

void append(std::vector<Vertex>& dst, const std::vector<Vertex>& src) {
    dst.insert(dst.end(), src.begin(), src.end());
}

struct JoinResult {
    Paths paths;
    int leftover = -1;  // 0 = left child, 1 = right child, -1 = single path
};

// Every vertex of `a` is adjacent to every vertex of `b`.
JoinResult join(Paths a, Paths b) {
    const std::size_t p = a.size(), q = b.size();
    const std::size_t na = vertex_count(a), nb = vertex_count(b);
    JoinResult r;
    if (p > nb || q > na) {
        // One side has more paths than the other has vertices: use every
        // vertex of the small side as a connector between big-side paths.
        bool a_heavy = p > nb;
        Paths& big = a_heavy ? a : b;
        const Paths& small = a_heavy ? b : a;
        std::vector<Vertex> connectors;
        for (const auto& path : small) append(connectors, path);
        std::vector<Vertex> merged;
        for (std::size_t i = 0; i < connectors.size(); ++i) {
            append(merged, big[i]);
            merged.push_back(connectors[i]);
        }
        append(merged, big[connectors.size()]);
        r.paths.push_back(std::move(merged));
        for (std::size_t i = connectors.size() + 1; i < big.size(); ++i)
            r.paths.push_back(std::move(big[i]));
        r.leftover = r.paths.size() > 1 ? (a_heavy ? 0 : 1) : -1;
        return r;
    }
    // Alternate segments of both sides in one Hamiltonian path.
    std::size_t sa = std::max(p, q - 1);
    std::size_t sb = std::max(q, sa - 1);
    Paths segs_a = split_into(std::move(a), sa);
    Paths segs_b = split_into(std::move(b), sb);
    const Paths& lead = sa >= sb ? segs_a : segs_b;
    const Paths& follow = sa >= sb ? segs_b : segs_a;
    std::vector<Vertex> merged;
    for (std::size_t i = 0; i < lead.size(); ++i) {
        append(merged, lead[i]);
        if (i < follow.size()) append(merged, follow[i]);
    }
    r.paths.push_back(std::move(merged));
    return r;
}

}  // namespace

CotreePathCover cotree_path_cover(const Graph& g, const Cotree& t) {
    std::vector<Paths> result(t.nodes.size());
    JoinResult root_join;

    // Post-order without recursion.
    std::vector<std::pair<int, bool>> stack{{t.root, false}};
    while (!stack.empty()) {
        auto [node, expanded] = stack.back();
        stack.pop_back();
        const CotreeNode& nd = t.nodes[node];
        if (nd.label < 0) {
            result[node] = {{nd.vertex}};
            continue;
        }
        if (!expanded) {
            stack.push_back({node, true});
            stack.push_back({nd.right, false});
            stack.push_back({nd.left, false});
            continue;
        }
        Paths a = std::move(result[nd.left]);
        Paths b = std::move(result[nd.right]);
        if (nd.label == 0) {
            for (auto& path : b) a.push_back(std::move(path));
            result[node] = std::move(a);
        } else {
            JoinResult j = join(std::move(a), std::move(b));
            result[node] = std::move(j.paths);
            if (node == t.root) root_join.leftover = j.leftover;
        }
    }

    CotreePathCover out;
    const CotreeNode& root = t.nodes[t.root];
    if (root.label >= 0) {
        // Leftover paths belong on the right; swap the roles if needed.
        bool swap = root_join.leftover == 0;
        out.left = t.leaves_of(swap ? root.right : root.left);
        out.right = t.leaves_of(swap ? root.left : root.right);
    } else {
        out.left = {root.vertex};
    }
    out.cover = PathCover::build(g, std::move(result[t.root]));
    return out;
}

CographResult solve_cograph_detailed(const Graph& g, const Cotree& t) {
    CographResult r;
    r.cover = cotree_path_cover(g, t);
    const auto& paths = r.cover.cover.paths();
    std::vector<Edge> edges = r.cover.cover.edges();

    if (paths.size() > 1) {
        std::vector<char> in_left(g.n(), 0);
        for (Vertex v : r.cover.left) in_left[v] = 1;
        std::vector<Vertex> p1 = paths[0];
        auto find_hub = [&]() -> Vertex {
            for (std::size_t i = 1; i + 1 < p1.size(); ++i)
                if (in_left[p1[i]]) return p1[i];
            return -1;
        };
        r.hub = find_hub();
        if (r.hub < 0 && p1.size() >= 3) {
            // Every left vertex of P1 is an endpoint. Move one inward using
            // the cross edge to the vertex two steps along.
            if (in_left[p1.front()] && !in_left[p1[2]]) std::swap(p1[0], p1[1]);
            else if (in_left[p1.back()] && !in_left[p1[p1.size() - 3]])
                std::swap(p1[p1.size() - 1], p1[p1.size() - 2]);
            r.hub = find_hub();
            if (r.hub >= 0) {
                edges.clear();
                for (std::size_t i = 1; i < p1.size(); ++i) edges.emplace_back(p1[i - 1], p1[i]);
                for (std::size_t k = 1; k < paths.size(); ++k)
                    for (std::size_t i = 1; i < paths[k].size(); ++i)
                        edges.emplace_back(paths[k][i - 1], paths[k][i]);
            }
        }
        if (r.hub < 0) throw InvariantViolation("crossing path has no internal left-side vertex");
        for (std::size_t k = 1; k < paths.size(); ++k) {
            Vertex v = std::min(paths[k].front(), paths[k].back());
            if (in_left[v]) throw InvariantViolation("non-crossing path meets the left side");
            r.attachments.emplace_back(r.hub, v);
            edges.emplace_back(r.hub, v);
        }
    }
    r.tree = SpanningTree::build(g, std::move(edges));
    int expected = std::max(0, r.cover.cover.edge_count() - 1);
    if (r.tree.internal_count() != expected)
        throw InvariantViolation("cograph tree has " + std::to_string(r.tree.internal_count()) +
                                 " internal vertices, expected " + std::to_string(expected));
    return r;
}

SpanningTree solve_cograph(const Graph& g, const Cotree& t) {
    return solve_cograph_detailed(g, t).tree;
}

}  // namespace mist
