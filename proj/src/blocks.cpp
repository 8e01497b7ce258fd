#include <algorithm>

#include "mist/recognition.hpp"

namespace mist {

std::string_view to_string(BlockKind kind) {
    switch (kind) {
        case BlockKind::edge: return "edge";
        case BlockKind::clique: return "clique";
        case BlockKind::cycle: return "cycle";
        case BlockKind::other: return "other-2-connected";
    }
    return "?";
}

namespace {

BlockKind classify_block(std::size_t k, std::size_t e) {
    if (k == 2) return BlockKind::edge;
    if (e == k * (k - 1) / 2) return BlockKind::clique;
    // A 2-connected graph with as many edges as vertices is a cycle.
    if (e == k) return BlockKind::cycle;
    return BlockKind::other;
}

}  // namespace

BlockDecomposition block_decompose(const Graph& g) {
    const int n = g.n();
    BlockDecomposition bd;
    bd.is_cut.assign(n, 0);
    if (n == 1) {
        bd.blocks.push_back({0});
        bd.block_edges.push_back({});
        bd.kind.push_back(BlockKind::clique);
        bd.cycle_order.push_back({});
        return bd;
    }
    bd.blocks.reserve(n, 2 * static_cast<std::size_t>(n));
    bd.block_edges.reserve(n, g.m());

    std::vector<int> disc(n, -1), low(n, 0), parent(n, -1), next(n, 0);
    std::vector<Vertex> frames;
    std::vector<Edge> edge_stack;
    std::vector<Edge> edges;
    std::vector<Vertex> verts;
    int clock = 0;

    auto emit_block = [&](Vertex p, Vertex v) {
        edges.clear();
        verts.clear();
        while (true) {
            Edge e = edge_stack.back();
            edge_stack.pop_back();
            edges.push_back(e);
            verts.push_back(e.u);
            verts.push_back(e.v);
            if (e == Edge(p, v)) break;
        }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        std::sort(edges.begin(), edges.end());
        bd.kind.push_back(classify_block(verts.size(), edges.size()));
        bd.blocks.push_back(verts);
        bd.block_edges.push_back(edges);
    };

    disc[0] = low[0] = clock++;
    frames.push_back(0);
    while (!frames.empty()) {
        Vertex v = frames.back();
        auto nbrs = g.neighbors(v);
        if (next[v] < static_cast<int>(nbrs.size())) {
            Vertex w = nbrs[next[v]++];
            if (disc[w] < 0) {
                parent[w] = v;
                disc[w] = low[w] = clock++;
                edge_stack.emplace_back(v, w);
                frames.push_back(w);
            } else if (w != parent[v] && disc[w] < disc[v]) {
                edge_stack.emplace_back(v, w);
                low[v] = std::min(low[v], disc[w]);
            }
            continue;
        }
        frames.pop_back();
        Vertex p = parent[v];
        if (p < 0) continue;
        low[p] = std::min(low[p], low[v]);
        if (low[v] >= disc[p]) emit_block(p, v);
    }

    std::vector<int> membership(n, 0);
    for (std::size_t b = 0; b < bd.blocks.size(); ++b)
        for (Vertex v : bd.blocks[b]) ++membership[v];
    for (Vertex v = 0; v < n; ++v)
        if (membership[v] >= 2) {
            bd.is_cut[v] = 1;
            bd.cut_vertices.push_back(v);
        }

    // Cycle orders, using two scratch slots per vertex.
    std::vector<Vertex> nb1(n, -1), nb2(n, -1);
    std::vector<Vertex> order;
    for (std::size_t b = 0; b < bd.blocks.size(); ++b) {
        order.clear();
        if (bd.kind[b] == BlockKind::cycle) {
            for (const Edge& e : bd.block_edges[b]) {
                (nb1[e.u] < 0 ? nb1[e.u] : nb2[e.u]) = e.v;
                (nb1[e.v] < 0 ? nb1[e.v] : nb2[e.v]) = e.u;
            }
            auto block = bd.blocks[b];
            Vertex start = block.front();
            Vertex prev = start;
            Vertex cur = std::min(nb1[start], nb2[start]);
            order.push_back(start);
            while (cur != start) {
                order.push_back(cur);
                Vertex nxt = nb1[cur] == prev ? nb2[cur] : nb1[cur];
                prev = cur;
                cur = nxt;
            }
            for (Vertex v : block) nb1[v] = nb2[v] = -1;
        }
        bd.cycle_order.push_back(order);
    }
    return bd;
}

}  // namespace mist
