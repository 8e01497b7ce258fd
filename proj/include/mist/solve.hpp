#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "mist/graph.hpp"
#include "mist/recognition.hpp"

namespace mist {

struct BoundCheck {
    std::string name;
    bool ok = true;
    std::string detail;
};

struct SolveReport {
    GraphClass cls = GraphClass::block;
    SpanningTree tree;
    std::optional<PathCover> path_cover;  // cotree or chain cover, when the class has one
    std::optional<int> bad_count;         // block and cactus graphs with several blocks
    std::vector<BoundCheck> checks;
};

// Most specific class in `classes`: chain, bipartite permutation, block,
// cactus, cograph. nullopt when empty.
std::optional<GraphClass> pick_class(const ClassSet& classes);

// Runs the solver for `cls`. Recognizer failures surface as the recognizer's
// exception (NotCograph, NotBipartitePermutation, NotChain, NotBlockOrCactus).
// A given ordering is used instead of computing one.
SolveReport solve_graph(const Graph& g, GraphClass cls,
                        const std::optional<BipartiteOrdering>& ordering = std::nullopt);

// Every graph edge; tree edges solid, others dashed when `all_edges`.
// Leaves are filled differently from internal vertices.
void write_dot(std::ostream& out, const Graph& g, const SpanningTree& t, bool all_edges = true);

}  // namespace mist
