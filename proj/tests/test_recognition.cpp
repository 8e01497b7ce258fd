#include "doctest.h"
#include "mist/recognition.hpp"
#include "support.hpp"

using namespace mist;
using namespace testing;

namespace {

bool adj_pos(const Graph& g, const BipartiteOrdering& o, int xi, int yj) { return g.adjacent(o.x[xi], o.y[yj]); }

// Strong condition, consecutive neighbourhoods and monotone first/last,
// checked straight from the definitions.
bool strong_by_definition(const Graph& g, const BipartiteOrdering& o) {
    const int nx = static_cast<int>(o.x.size()), ny = static_cast<int>(o.y.size());
    for (int a = 0; a < nx; ++a)
        for (int a2 = a + 1; a2 < nx; ++a2)
            for (int b2 = 0; b2 < ny; ++b2)
                for (int b = b2 + 1; b < ny; ++b)
                    if (adj_pos(g, o, a, b) && adj_pos(g, o, a2, b2) &&
                        !(adj_pos(g, o, a, b2) && adj_pos(g, o, a2, b)))
                        return false;
    auto consecutive_and_monotone = [&](int s) {
        const auto& mine = o.order(s);
        const auto& other = o.order(1 - s);
        int prev_f = -1, prev_l = -1;
        for (Vertex v : mine) {
            int f = -1, l = -1, count = 0;
            for (int j = 0; j < static_cast<int>(other.size()); ++j)
                if (g.adjacent(v, other[j])) {
                    if (f < 0) f = j;
                    l = j;
                    ++count;
                }
            if (count != l - f + 1 || f < prev_f || l < prev_l) return false;
            prev_f = f;
            prev_l = l;
        }
        return true;
    };
    return consecutive_and_monotone(0) && consecutive_and_monotone(1);
}

bool some_strong_ordering(const Graph& g) {
    auto side = bipartition(g);
    std::vector<Vertex> x, y;
    for (Vertex v = 0; v < g.n(); ++v) ((*side)[v] == 0 ? x : y).push_back(v);
    do {
        std::vector<Vertex> yy = y;
        do {
            if (strong_by_definition(g, BipartiteOrdering::make(g, x, yy))) return true;
        } while (std::next_permutation(yy.begin(), yy.end()));
    } while (std::next_permutation(x.begin(), x.end()));
    return false;
}

}  // namespace

TEST_CASE("strong ordering examples") {
    Graph e = path_graph(2);
    StrongOrdering o = compute_strong_ordering(e);
    CHECK(o.x.size() == 1);
    CHECK(o.y.size() == 1);
    CHECK(verify_strong_ordering(e, o).ok);

    GeneratedGraph g1 = chain_from_degrees({1, 2, 2, 4, 5}, 5);
    CHECK(verify_strong_ordering(g1.graph, *g1.ordering).ok);
    CHECK(verify_strong_ordering(g1.graph, compute_strong_ordering(g1.graph)).ok);
}

TEST_CASE("six cycle has no strong ordering") {
    Graph c6 = cycle_graph(6);
    CHECK_FALSE(some_strong_ordering(c6));
    CHECK_THROWS_AS(compute_strong_ordering(c6), NotBipartitePermutation);
    BipartiteOrdering o = BipartiteOrdering::make(c6, {0, 2, 4}, {1, 3, 5});
    OrderingCheck c = verify_strong_ordering(c6, o);
    CHECK_FALSE(c.ok);
    CHECK_FALSE(c.violation.empty());
    CHECK_FALSE(c.witness.empty());
    CHECK_THROWS_AS(compute_strong_ordering(cycle_graph(5)), NotBipartitePermutation);
}

TEST_CASE("verifier matches the definitions on every ordering of small graphs") {
    Rng rng(12);
    int strong = 0, weak = 0;
    for (int trial = 0; trial < 25; ++trial) {
        GenSpec spec{GraphClass::bipartite_permutation, 3 + trial % 5, rng.next(), rng.real()};
        Graph g = gen_class(spec);
        auto side = bipartition(g);
        std::vector<Vertex> x, y;
        for (Vertex v = 0; v < g.n(); ++v) ((*side)[v] == 0 ? x : y).push_back(v);
        do {
            std::vector<Vertex> yy = y;
            do {
                BipartiteOrdering o = BipartiteOrdering::make(g, x, yy);
                const bool expect = strong_by_definition(g, o);
                CHECK(verify_strong_ordering(g, o).ok == expect);
                (expect ? strong : weak)++;
            } while (std::next_permutation(yy.begin(), yy.end()));
        } while (std::next_permutation(x.begin(), x.end()));
    }
    CHECK(strong > 0);
    CHECK(weak > 0);
}

TEST_CASE("computed orderings verify and survive reversal and side swap") {
    Rng rng(13);
    for (int trial = 0; trial < 80; ++trial) {
        GenSpec spec{GraphClass::bipartite_permutation, 2 + trial % 30, rng.next(), rng.real()};
        Graph g = gen_class(spec);
        StrongOrdering o = compute_strong_ordering(g);
        CHECK(verify_strong_ordering(g, o).ok);
        CHECK(verify_strong_ordering(g, reversed(g, o)).ok);
        CHECK(verify_strong_ordering(g, swapped_sides(g, o)).ok);
        if (g.n() <= 7) CHECK(strong_by_definition(g, o));
    }
}

TEST_CASE("small bipartite graphs: recognition is complete") {
    Rng rng(14);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = random_connected(3 + trial % 5, 0.3, rng);
        if (!bipartition(g)) continue;
        const bool expect = some_strong_ordering(g);
        bool got = true;
        try {
            compute_strong_ordering(g);
        } catch (const NotBipartitePermutation&) {
            got = false;
        }
        CHECK(got == expect);
    }
}

TEST_CASE("chain orderings") {
    Graph k13 = star(3);
    std::vector<int> leaves_first{1, 0, 0, 0};
    ChainOrdering o = compute_chain_ordering(k13, leaves_first);
    CHECK(o.x == std::vector<Vertex>{1, 2, 3});
    CHECK(verify_chain_ordering(k13, o).ok);

    GeneratedGraph g2 = chain_from_degrees({1, 2, 2, 4, 5, 5}, 5);
    CHECK(verify_chain_ordering(g2.graph, *g2.ordering).ok);
    CHECK(verify_chain_ordering(g2.graph, compute_chain_ordering(g2.graph)).ok);

    CHECK_THROWS_AS(compute_chain_ordering(cycle_graph(6)), NotChain);
    try {
        compute_chain_ordering(cycle_graph(6));
    } catch (const NotChain& e) {
        CHECK(e.witness[0] >= 0);
        CHECK(e.witness[1] >= 0);
    }
    CHECK_THROWS_AS(compute_chain_ordering(cycle_graph(5)), NotChain);
}

TEST_CASE("chain ordering ties break by vertex id") {
    Graph c4 = cycle_graph(4);
    ChainOrdering o = compute_chain_ordering(c4);
    CHECK(o.x == std::vector<Vertex>{0, 2});
    CHECK(o.y == std::vector<Vertex>{1, 3});
}

TEST_CASE("classification") {
    CHECK(classify_graph(complete_graph(3)).str() == ClassSet{0b00111}.str());
    ClassSet t = classify_graph(complete_graph(3));
    CHECK(t.has(GraphClass::block));
    CHECK(t.has(GraphClass::cactus));
    CHECK(t.has(GraphClass::cograph));
    CHECK_FALSE(t.has(GraphClass::chain));

    ClassSet g1 = classify_graph(chain_from_degrees({1, 2, 2, 4, 5}, 5).graph);
    CHECK(g1.has(GraphClass::bipartite_permutation));
    CHECK(g1.has(GraphClass::chain));
    CHECK_FALSE(g1.has(GraphClass::block));
    CHECK_FALSE(g1.has(GraphClass::cograph));

    ClassSet p4 = classify_graph(path_graph(4));
    CHECK(p4.has(GraphClass::block));
    CHECK(p4.has(GraphClass::cactus));
    CHECK(p4.has(GraphClass::bipartite_permutation));
    CHECK_FALSE(p4.has(GraphClass::cograph));

    CHECK(classify_graph(cycle_graph(6)).list() == std::vector<GraphClass>{GraphClass::cactus});
    Graph house = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {1, 4}});
    CHECK(classify_graph(house).empty());
}

TEST_CASE("chain instances are always bipartite permutation") {
    Rng rng(15);
    for (int trial = 0; trial < 60; ++trial) {
        GenSpec spec{GraphClass::chain, 2 + trial % 20, rng.next(), rng.real()};
        ClassSet c = classify_graph(gen_class(spec));
        CHECK(c.has(GraphClass::chain));
        CHECK(c.has(GraphClass::bipartite_permutation));
    }
}

TEST_CASE("class names") {
    CHECK(parse_graph_class("bp") == GraphClass::bipartite_permutation);
    CHECK(parse_graph_class("bipartite-permutation") == GraphClass::bipartite_permutation);
    CHECK(parse_graph_class("chain") == GraphClass::chain);
    CHECK_FALSE(parse_graph_class("tree").has_value());
    for (GraphClass c : {GraphClass::block, GraphClass::cactus, GraphClass::cograph,
                         GraphClass::bipartite_permutation, GraphClass::chain})
        CHECK(parse_graph_class(to_string(c)) == c);
}
