#pragma once

#include <vector>

#include "mist/graph.hpp"
#include "mist/recognition.hpp"

namespace mist {

// Paths in the order they were produced; each is a maximal contiguous zig-zag.
struct ContiguousPathCover {
    PathCover cover;
    std::vector<int> side;  // side of every vertex under the ordering used

    bool starts_in_x(int path) const { return side[cover.paths()[path].front()] == 0; }
    bool ends_in_x(int path) const { return side[cover.paths()[path].back()] == 0; }
};

ContiguousPathCover chain_path_cover(const Graph& g, const ChainOrdering& o);

struct StitchResult {
    SpanningTree tree;
    int case1 = 0;
    int case41 = 0;
    int case42 = 0;
    std::vector<Edge> combining;    // between consecutive nontrivial paths
    std::vector<Edge> attachments;  // single-vertex components
};

// Joins consecutive nontrivial paths with one combining edge each and hangs
// single-vertex paths off internal vertices. At least |E(P)| - 2 internal.
StitchResult stitch_path_cover(const Graph& g, const ContiguousPathCover& pc,
                               const ChainOrdering& o);

struct ChainBounds {
    int opt = 0;
    int pathcover_edges = 0;
    int gap = 0;
};

ChainBounds chain_bounds_report(const Graph& g);

}  // namespace mist
