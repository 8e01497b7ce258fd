#include <set>

#include "doctest.h"
#include "mist/block_cactus.hpp"
#include "mist/oracle.hpp"
#include "support.hpp"

using namespace mist;
using namespace testing;

namespace {

bool connected_without(const Graph& g, Vertex x, Vertex a, Vertex b) {
    std::vector<Edge> keep;
    for (const Edge& e : g.edges())
        if (e.u != x && e.v != x) keep.push_back(e);
    std::vector<int> root(g.n());
    std::iota(root.begin(), root.end(), 0);
    auto find = [&](int v) {
        while (root[v] != v) v = root[v] = root[root[v]];
        return v;
    };
    for (const Edge& e : keep) root[find(e.u)] = find(e.v);
    return find(a) == find(b);
}

// Two edges share a block iff no single vertex separates their endpoints.
bool same_block(const Graph& g, Edge e, Edge f) {
    for (Vertex x = 0; x < g.n(); ++x) {
        std::vector<Vertex> ends;
        for (Vertex v : {e.u, e.v, f.u, f.v})
            if (v != x) ends.push_back(v);
        for (std::size_t i = 1; i < ends.size(); ++i)
            if (!connected_without(g, x, ends[0], ends[i])) return false;
    }
    return true;
}

bool is_cut_vertex(const Graph& g, Vertex x) {
    if (g.n() <= 2) return false;
    Vertex a = x == 0 ? 1 : 0;
    for (Vertex b = 0; b < g.n(); ++b)
        if (b != x && !connected_without(g, x, a, b)) return true;
    return false;
}

void check_against_brute_force(const Graph& g) {
    BlockDecomposition bd = block_decompose(g);
    std::vector<int> owner(g.m(), -1);
    for (int b = 0; b < bd.size(); ++b)
        for (const Edge& e : bd.block_edges[b]) {
            auto it = std::lower_bound(g.edges().begin(), g.edges().end(), e);
            REQUIRE(it != g.edges().end());
            const auto idx = it - g.edges().begin();
            CHECK(owner[idx] == -1);
            owner[idx] = b;
        }
    for (int i = 0; i < g.m(); ++i) {
        REQUIRE(owner[i] >= 0);
        for (int j = i + 1; j < g.m(); ++j)
            CHECK((owner[i] == owner[j]) == same_block(g, g.edges()[i], g.edges()[j]));
    }
    for (Vertex v = 0; v < g.n(); ++v) CHECK(static_cast<bool>(bd.is_cut[v]) == is_cut_vertex(g, v));
}

// Good means a spanning path inside the block between two distinct cut vertices.
bool good_by_definition(const Graph& g, const BlockDecomposition& bd, int b) {
    std::vector<Vertex> verts(bd.blocks[b].begin(), bd.blocks[b].end());
    for (Vertex s : verts)
        for (Vertex t : verts)
            if (s != t && bd.is_cut[s] && bd.is_cut[t] && has_spanning_path(g, verts, s, t)) return true;
    return false;
}

}  // namespace

TEST_CASE("star and bowtie decompositions") {
    BlockDecomposition s = block_decompose(star(3));
    CHECK(s.size() == 3);
    CHECK(s.cut_vertices == std::vector<Vertex>{0});
    for (int b = 0; b < 3; ++b) CHECK(s.kind[b] == BlockKind::edge);

    BlockDecomposition bt = block_decompose(bowtie());
    CHECK(bt.size() == 2);
    CHECK(bt.cut_vertices == std::vector<Vertex>{2});
    for (int b = 0; b < 2; ++b) CHECK(bt.kind[b] == BlockKind::clique);

    BlockDecomposition c = block_decompose(cycle_graph(5));
    CHECK(c.size() == 1);
    CHECK(c.kind[0] == BlockKind::cycle);
    CHECK(c.cycle_order[0].size() == 5);
    CHECK(c.cycle_order[0][0] == 0);
    CHECK(c.cycle_order[0][1] == 1);

    BlockDecomposition one = block_decompose(path_graph(1));
    CHECK(one.size() == 1);
    CHECK(one.cut_vertices.empty());
}

TEST_CASE("family graph with twenty vertices") {
    Graph g = family_block_cactus(4);
    CHECK(g.n() == 20);
    CHECK(g.m() == 27);
    BlockDecomposition bd = block_decompose(g);
    int triangles = 0, bridges = 0;
    for (int b = 0; b < bd.size(); ++b) {
        if (bd.kind[b] == BlockKind::clique && bd.blocks[b].size() == 3) ++triangles;
        if (bd.kind[b] == BlockKind::edge) {
            ++bridges;
            const Edge e = bd.block_edges[b][0];
            CHECK(g.label(e.u).substr(0, 2) == "x3");
            CHECK(g.label(e.v).substr(0, 2) == "x3");
        }
    }
    CHECK(triangles == 8);
    CHECK(bridges == 3);
    REQUIRE(bd.cut_vertices.size() == 4);
    for (Vertex v : bd.cut_vertices) CHECK(g.label(v).substr(0, 2) == "x3");
    check_against_brute_force(g);

    BlockLabeling lab = label_blocks(g, bd);
    CHECK(lab.bad_count == 8);
    SpanningTree t = solve_block_cactus(g);
    CHECK(t.internal_count() == 12);
}

TEST_CASE("decomposition matches brute force on random graphs") {
    Rng rng(21);
    for (int trial = 0; trial < 40; ++trial) check_against_brute_force(random_connected(2 + trial % 9, 0.2, rng));
    for (int trial = 0; trial < 40; ++trial) {
        GenSpec spec{trial % 2 ? GraphClass::block : GraphClass::cactus, 3 + trial % 9, rng.next(), 0.5};
        check_against_brute_force(gen_class(spec));
    }
}

TEST_CASE("labels follow the good block definition") {
    Rng rng(4);
    for (int trial = 0; trial < 80; ++trial) {
        GenSpec spec{trial % 2 ? GraphClass::block : GraphClass::cactus, 4 + trial % 8, rng.next(),
                     0.3 + 0.005 * trial};
        Graph g = gen_class(spec);
        BlockDecomposition bd = block_decompose(g);
        if (bd.size() < 2) continue;
        BlockLabeling lab = label_blocks(g, bd, spec.cls);
        int bad = 0;
        for (int b = 0; b < bd.size(); ++b) {
            CHECK(static_cast<bool>(lab.good[b]) == good_by_definition(g, bd, b));
            bad += !lab.good[b];
            int cuts = 0;
            for (Vertex v : bd.blocks[b]) cuts += bd.is_cut[v];
            CHECK(cuts >= 1);
        }
        CHECK(lab.bad_count == bad);
    }
}

TEST_CASE("small labelings") {
    Graph k13 = star(3);
    CHECK(label_blocks(k13, block_decompose(k13)).bad_count == 3);
    Graph bt = bowtie();
    CHECK(label_blocks(bt, block_decompose(bt)).bad_count == 2);
    for (int k = 1; k <= 5; ++k) {
        Graph g = family_block_cactus(k);
        CHECK(label_blocks(g, block_decompose(g)).bad_count == 2 * k);
    }
}

TEST_CASE("spanning paths inside one block") {
    SUBCASE("triangle from a start") {
        Graph g = complete_graph(3);
        BlockDecomposition bd = block_decompose(g);
        auto p = spanning_path_in_block(bd, 0, 2);
        CHECK(p.size() == 3);
        CHECK(p.front() == 2);
    }
    SUBCASE("four cycle between adjacent vertices") {
        Graph g = cycle_graph(4);
        BlockDecomposition bd = block_decompose(g);
        CHECK(spanning_path_in_block(bd, 0, 0, 1) == std::vector<Vertex>{0, 3, 2, 1});
        CHECK_THROWS_AS(spanning_path_in_block(bd, 0, 0, 2), GraphError);
    }
    SUBCASE("clique between any two vertices") {
        Graph g = complete_graph(4);
        BlockDecomposition bd = block_decompose(g);
        auto p = spanning_path_in_block(bd, 0, 1, 3);
        CHECK(p.size() == 4);
        CHECK(p.front() == 1);
        CHECK(p.back() == 3);
        for (std::size_t i = 1; i < p.size(); ++i) CHECK(g.adjacent(p[i - 1], p[i]));
        CHECK(std::set<Vertex>(p.begin(), p.end()).size() == 4);
    }
}

TEST_CASE("solver values") {
    CHECK(solve_block_cactus(star(3)).internal_count() == 1);
    SpanningTree bt = solve_block_cactus(bowtie());
    CHECK(bt.internal_count() == 3);
    CHECK(oracle_mist(bowtie()).count == 3);
    CHECK(solve_block_cactus(complete_graph(5)).internal_count() == 3);
    CHECK(solve_block_cactus(cycle_graph(6)).internal_count() == 4);
    CHECK(solve_block_cactus(path_graph(1)).internal_count() == 0);
    CHECK(solve_block_cactus(path_graph(2)).internal_count() == 0);
}

TEST_CASE("solver matches the oracle on random block and cactus graphs") {
    Rng rng(99);
    for (int trial = 0; trial < 60; ++trial) {
        GenSpec spec{trial % 2 ? GraphClass::block : GraphClass::cactus, 3 + trial % 9, rng.next(),
                     rng.real()};
        Graph g = gen_class(spec);
        BlockCactusResult r = solve_block_cactus_detailed(g, spec.cls);
        r.tree.check_spans(g);
        CHECK(r.tree.internal_count() == oracle_mist(g).count);
        if (r.blocks.size() >= 2) CHECK(r.tree.internal_count() == g.n() - r.labels.bad_count);
    }
}

TEST_CASE("rejections") {
    Graph theta = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
    CHECK_THROWS_AS(solve_block_cactus(theta), NotBlockOrCactus);
    CHECK_THROWS_AS(solve_block_cactus(cycle_graph(4), GraphClass::block), NotBlockOrCactus);
    CHECK_THROWS_AS(solve_block_cactus(complete_graph(4), GraphClass::cactus), NotBlockOrCactus);
    CHECK_THROWS_AS(solve_block_cactus(complete_graph(4), GraphClass::cograph), NotBlockOrCactus);
    CHECK_NOTHROW(solve_block_cactus(complete_graph(3), GraphClass::cactus));
}
