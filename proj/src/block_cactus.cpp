#include "mist/block_cactus.hpp"

#include <algorithm>

namespace mist {

namespace {

bool is_triangle(const BlockDecomposition& bd, int b) {
    return bd.kind[b] == BlockKind::clique && bd.blocks[b].size() == 3;
}

void check_kind(const BlockDecomposition& bd, int b, std::optional<GraphClass> as) {
    BlockKind k = bd.kind[b];
    auto where = [&] { return "block containing vertex " + std::to_string(bd.blocks[b].front() + 1); };
    if (k == BlockKind::other)
        throw NotBlockOrCactus(where() + " is neither a clique nor a cycle");
    if (as == GraphClass::block && k == BlockKind::cycle)
        throw NotBlockOrCactus(where() + " is a cycle, not a clique");
    if (as == GraphClass::cactus && k == BlockKind::clique && !is_triangle(bd, b) &&
        bd.blocks[b].size() > 1)
        throw NotBlockOrCactus(where() + " is a clique on more than three vertices");
    if (as && as != GraphClass::block && as != GraphClass::cactus)
        throw NotBlockOrCactus("block/cactus solver cannot run as " + std::string(to_string(*as)));
}

}  // namespace

BlockLabeling label_blocks(const Graph& g, const BlockDecomposition& bd,
                           std::optional<GraphClass> as) {
    (void)g;
    BlockLabeling out;
    out.good.assign(bd.blocks.size(), 0);
    out.ends.assign(bd.blocks.size(), {-1, -1});
    for (int b = 0; b < bd.size(); ++b) {
        check_kind(bd, b, as);
        if (bd.kind[b] == BlockKind::cycle) {
            auto cyc = bd.cycle_order[b];
            std::pair<Vertex, Vertex> best{-1, -1};
            for (std::size_t i = 0; i < cyc.size(); ++i) {
                Vertex a = cyc[i], c = cyc[(i + 1) % cyc.size()];
                if (!bd.is_cut[a] || !bd.is_cut[c]) continue;
                std::pair<Vertex, Vertex> p{std::min(a, c), std::max(a, c)};
                if (best.first < 0 || p < best) best = p;
            }
            if (best.first >= 0) {
                out.good[b] = 1;
                out.ends[b] = best;
            }
        } else {
            // Cut vertices come out in ascending order because blocks are sorted.
            std::vector<Vertex> cuts;
            for (Vertex v : bd.blocks[b])
                if (bd.is_cut[v] && cuts.size() < 2) cuts.push_back(v);
            if (cuts.size() == 2) {
                out.good[b] = 1;
                out.ends[b] = {cuts[0], cuts[1]};
            }
        }
        if (!out.good[b]) ++out.bad_count;
    }
    return out;
}

namespace {

// Appends the spanning path of block b to `path` (which it clears first).
void block_path(const BlockDecomposition& bd, int b, Vertex start, std::optional<Vertex> end,
                std::vector<Vertex>& path) {
    auto verts = bd.blocks[b];
    auto contains = [&](Vertex v) { return std::binary_search(verts.begin(), verts.end(), v); };
    if (!contains(start)) throw GraphError("path start is not in the block");
    if (end && (!contains(*end) || *end == start))
        throw GraphError("path end is not a different vertex of the block");

    path.clear();
    switch (bd.kind[b]) {
        case BlockKind::edge:
        case BlockKind::clique:
            path.push_back(start);
            for (Vertex v : verts)
                if (v != start && (!end || v != *end)) path.push_back(v);
            if (end) path.push_back(*end);
            return;
        case BlockKind::cycle: {
            auto cyc = bd.cycle_order[b];
            const int k = static_cast<int>(cyc.size());
            int at = static_cast<int>(std::find(cyc.begin(), cyc.end(), start) - cyc.begin());
            Vertex fwd = cyc[(at + 1) % k], back = cyc[(at + k - 1) % k];
            int step;
            if (end) {
                if (*end == fwd) step = -1;
                else if (*end == back) step = 1;
                else throw GraphError("cycle block has no spanning path between non-adjacent vertices");
            } else {
                step = fwd < back ? 1 : -1;
            }
            for (int i = 0; i < k; ++i) path.push_back(cyc[((at + step * i) % k + k) % k]);
            return;
        }
        case BlockKind::other: break;
    }
    throw NotBlockOrCactus("block is neither a clique nor a cycle");
}

}  // namespace

std::vector<Vertex> spanning_path_in_block(const BlockDecomposition& bd, int b, Vertex start,
                                           std::optional<Vertex> end) {
    std::vector<Vertex> path;
    block_path(bd, b, start, end, path);
    return path;
}

BlockCactusResult solve_block_cactus_detailed(const Graph& g, std::optional<GraphClass> as) {
    BlockCactusResult r;
    r.blocks = block_decompose(g);
    r.labels = label_blocks(g, r.blocks, as);
    const auto& bd = r.blocks;

    std::vector<Edge> edges;
    edges.reserve(g.n() - 1);
    std::vector<Vertex> path;
    auto add_path = [&](Vertex start, std::optional<Vertex> end, int b) {
        block_path(bd, b, start, end, path);
        for (std::size_t i = 1; i < path.size(); ++i) edges.emplace_back(path[i - 1], path[i]);
    };

    if (bd.size() == 1) {
        add_path(bd.blocks[0].front(), std::nullopt, 0);
        r.tree = SpanningTree::build(g, std::move(edges));
        return r;
    }

    for (int b = 0; b < bd.size(); ++b) {
        if (r.labels.good[b]) {
            add_path(r.labels.ends[b].first, r.labels.ends[b].second, b);
            continue;
        }
        auto block = bd.blocks[b];
        auto cut = std::find_if(block.begin(), block.end(), [&](Vertex v) { return bd.is_cut[v] != 0; });
        if (cut == block.end())
            throw InvariantViolation("block without a cut vertex in a graph with several blocks");
        add_path(*cut, std::nullopt, b);
    }
    r.tree = SpanningTree::build(g, std::move(edges));
    if (r.tree.internal_count() != g.n() - r.labels.bad_count)
        throw InvariantViolation("block/cactus tree has " + std::to_string(r.tree.internal_count()) +
                                 " internal vertices, expected n - bad = " +
                                 std::to_string(g.n() - r.labels.bad_count));
    return r;
}

SpanningTree solve_block_cactus(const Graph& g, std::optional<GraphClass> as) {
    return solve_block_cactus_detailed(g, as).tree;
}

}  // namespace mist
