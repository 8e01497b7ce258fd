#pragma once

#include <vector>

#include "mist/graph.hpp"
#include "mist/recognition.hpp"

namespace mist {

struct CotreePathCover {
    // With more than one path, paths()[0] is the only path meeting both
    // sides of the root; every other path lies inside `right`.
    PathCover cover;
    std::vector<Vertex> left;
    std::vector<Vertex> right;
};

// Minimum path cover of a cograph computed bottom-up on its cotree.
CotreePathCover cotree_path_cover(const Graph& g, const Cotree& t);

struct CographResult {
    SpanningTree tree;
    CotreePathCover cover;
    Vertex hub = -1;                 // u, when the cover has several paths
    std::vector<Edge> attachments;   // hub -> one endpoint of each other path
};

CographResult solve_cograph_detailed(const Graph& g, const Cotree& t);
SpanningTree solve_cograph(const Graph& g, const Cotree& t);

}  // namespace mist
