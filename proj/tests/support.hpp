#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "mist/generators.hpp"
#include "mist/graph.hpp"

namespace testing {

using mist::Edge;
using mist::Graph;
using mist::Vertex;

inline Graph path_graph(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edges(n, e);
}

inline Graph cycle_graph(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, e);
}

inline Graph complete_graph(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph::from_edges(n, e);
}

// Sides 0..a-1 and a..a+b-1.
inline Graph complete_bipartite(int a, int b) {
    std::vector<Edge> e;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
    return Graph::from_edges(a + b, e);
}

inline Graph star(int leaves) { return complete_bipartite(1, leaves); }

// Two triangles 0-1-2 and 2-3-4 sharing vertex 2.
inline Graph bowtie() { return Graph::from_edges(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}}); }

// Connected random graph: a random tree plus extra edges with probability p.
inline Graph random_connected(int n, double p, mist::Rng& rng) {
    std::vector<Edge> e;
    std::vector<char> used(static_cast<std::size_t>(n) * n, 0);
    for (int v = 1; v < n; ++v) {
        int u = static_cast<int>(rng.below(v));
        e.emplace_back(u, v);
        used[u * n + v] = 1;
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!used[u * n + v] && rng.coin(p)) e.emplace_back(u, v);
    return Graph::from_edges(n, e);
}

// Brute force: does g restricted to `verts` have a Hamiltonian path from s to t?
inline bool has_spanning_path(const Graph& g, std::vector<Vertex> verts, Vertex s, Vertex t) {
    std::sort(verts.begin(), verts.end());
    do {
        if (verts.front() != s || verts.back() != t) continue;
        bool ok = true;
        for (std::size_t i = 1; i < verts.size() && ok; ++i) ok = g.adjacent(verts[i - 1], verts[i]);
        if (ok) return true;
    } while (std::next_permutation(verts.begin(), verts.end()));
    return false;
}

}  // namespace testing
