#include <set>

#include "doctest.h"
#include "mist/bipartite_permutation.hpp"
#include "mist/oracle.hpp"
#include "support.hpp"

using namespace mist;
using namespace testing;

namespace {

std::vector<BipartiteOrdering> variants(const Graph& g, const BipartiteOrdering& o) {
    BipartiteOrdering s = swapped_sides(g, o);
    return {o, reversed(g, o), s, reversed(g, s)};
}

void check_trace(const Graph& g, const SpanningTree& t, const BpTrace& tr) {
    std::set<Vertex> seen;
    int terminals = 0;
    for (const auto& e : tr.encounters) {
        CHECK(seen.insert(e.vertex).second);
        if (e.phase == 2) CHECK(tr.switched);
        if (e.terminal) {
            ++terminals;
            continue;
        }
        CHECK(t.degree(e.vertex) == 1);
        CHECK(g.adjacent(e.vertex, e.support));
        CHECK(t.degree(e.support) >= 3);
    }
    CHECK(terminals <= 1);
    if (!tr.encounters.empty()) CHECK(std::is_partitioned(tr.encounters.begin(), tr.encounters.end(),
                                                          [](const auto& e) { return e.phase == 1; }));
}

}  // namespace

TEST_CASE("vertex types") {
    Graph e = path_graph(2);
    BipartiteOrdering o = BipartiteOrdering::make(e, {0}, {1});
    VertexType x1 = vertex_type(o, 0), y1 = vertex_type(o, 1);
    CHECK(x1.type1);
    CHECK_FALSE(x1.type2);
    CHECK_FALSE(y1.type1);
    CHECK(y1.type2);

    GeneratedGraph g1 = chain_from_degrees({1, 2, 2, 4, 5}, 5);
    VertexType gx1 = vertex_type(*g1.ordering, g1.ordering->x[0]);
    CHECK(gx1.type1);
    CHECK_FALSE(gx1.type2);

    Graph p3 = path_graph(3);
    BipartiteOrdering q = BipartiteOrdering::make(p3, {0, 2}, {1});
    CHECK(vertex_type(q, 1).type1);
    CHECK(vertex_type(q, 1).type2);
}

TEST_CASE("type 2 implies type 1 on X, and the reverse on Y") {
    Rng rng(40);
    for (int trial = 0; trial < 40; ++trial) {
        GeneratedGraph inst = generate(GenSpec{GraphClass::bipartite_permutation, 2 + trial % 15, rng.next(), 0.5});
        const auto& o = *inst.ordering;
        for (Vertex v : o.x)
            if (vertex_type(o, v).type2) CHECK(vertex_type(o, v).type1);
        for (Vertex v : o.y)
            if (vertex_type(o, v).type1) CHECK(vertex_type(o, v).type2);
    }
}

TEST_CASE("named instances") {
    Graph c4 = cycle_graph(4);
    SpanningTree t = solve_bp(c4, compute_strong_ordering(c4));
    CHECK(t.internal_count() == 2);

    GeneratedGraph g1 = chain_from_degrees({1, 2, 2, 4, 5}, 5);
    CHECK(solve_bp(g1.graph, *g1.ordering).internal_count() == 6);
    GeneratedGraph g2 = chain_from_degrees({1, 2, 2, 4, 5, 5}, 5);
    CHECK(solve_bp(g2.graph, *g2.ordering).internal_count() == 8);

    GeneratedGraph fam = family_bp(5);
    CHECK(fam.graph.n() == 25);
    CHECK(solve_bp(fam.graph, *fam.ordering).internal_count() == 15);
    CHECK(solve_bp(fam.graph, compute_strong_ordering(fam.graph)).internal_count() == 15);

    Graph one = path_graph(1);
    CHECK(solve_bp(one, compute_strong_ordering(one)).internal_count() == 0);
    CHECK(solve_bp(path_graph(2), compute_strong_ordering(path_graph(2))).internal_count() == 0);
    CHECK(solve_bp(star(4), compute_strong_ordering(star(4))).internal_count() == 1);
}

TEST_CASE("every ordering variant reaches the optimum") {
    Rng rng(41);
    for (int trial = 0; trial < 150; ++trial) {
        GeneratedGraph inst = generate(GenSpec{GraphClass::bipartite_permutation, 2 + trial % 10, rng.next(), rng.real()});
        const Graph& g = inst.graph;
        const int opt = oracle_mist(g).count;
        for (const BipartiteOrdering& o : variants(g, *inst.ordering)) {
            REQUIRE(verify_strong_ordering(g, o).ok);
            BpTrace tr;
            SpanningTree t = solve_bp(g, o, &tr);
            t.check_spans(g);
            CHECK(t.internal_count() == opt);
            check_trace(g, t, tr);
        }
    }
}

TEST_CASE("both scan phases are exercised") {
    Rng rng(42);
    int switched = 0, encounters = 0;
    for (int trial = 0; trial < 300; ++trial) {
        GeneratedGraph inst = generate(GenSpec{GraphClass::bipartite_permutation, 3 + trial % 9, rng.next(), rng.real()});
        for (const BipartiteOrdering& o : variants(inst.graph, *inst.ordering)) {
            BpTrace tr;
            solve_bp(inst.graph, o, &tr);
            switched += tr.switched;
            for (const auto& e : tr.encounters) encounters += !e.terminal;
        }
    }
    CHECK(switched > 0);
    CHECK(encounters > 0);
}

TEST_CASE("large instances keep the trace contracts") {
    for (int n : {200, 1000}) {
        GeneratedGraph inst = generate(GenSpec{GraphClass::bipartite_permutation, n, 5, 0.4});
        BpTrace tr;
        SpanningTree t = solve_bp(inst.graph, *inst.ordering, &tr);
        check_trace(inst.graph, t, tr);
        CHECK(t.internal_count() <= n - 2);
    }
}

TEST_CASE("orderings that are not strong are refused") {
    GeneratedGraph g1 = chain_from_degrees({1, 2, 2, 4, 5}, 5);
    auto x = g1.ordering->x;
    std::reverse(x.begin(), x.end());
    BipartiteOrdering bad = BipartiteOrdering::make(g1.graph, x, g1.ordering->y);
    CHECK_THROWS_AS(solve_bp(g1.graph, bad), GraphError);
}
