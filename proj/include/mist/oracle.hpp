#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>

#include "mist/graph.hpp"

namespace mist {

struct OracleBudget {
    int max_n = 11;
    std::uint64_t max_spanning_trees = 10'000'000;
    std::chrono::milliseconds time_cap{120'000};
};

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Calls `visit` once per spanning tree (n-1 edges). Returns the tree count.
// Throws BudgetExceeded before the first tree when n is too large, or as soon
// as the tree count or time cap is passed.
std::uint64_t enumerate_spanning_trees(const Graph& g,
                                       const std::function<void(std::span<const Edge>)>& visit,
                                       const OracleBudget& budget = {});

// Kirchhoff count via fraction-free elimination of a Laplacian minor.
std::uint64_t matrix_tree_count(const Graph& g);

struct OracleMist {
    int count = 0;
    SpanningTree witness;
};

// Exact Opt(G) by dynamic programming over (root, vertex subset) pairs,
// O(n 3^n). Refuses graphs above budget.max_n (hard ceiling 16).
OracleMist oracle_mist(const Graph& g, const OracleBudget& budget = {});

// Opt(G) as the maximum over enumerate_spanning_trees; slower, used to
// cross-check oracle_mist.
int oracle_mist_by_enumeration(const Graph& g, const OracleBudget& budget = {});

// |E(P*)| = n - (minimum number of paths covering V). n <= max_n <= 22.
int oracle_max_pathcover_edges(const Graph& g, int max_n = 20);

}  // namespace mist
