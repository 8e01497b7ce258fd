#pragma once

#include <vector>

#include "mist/graph.hpp"
#include "mist/recognition.hpp"

namespace mist {

// x_i with l(x_i) = y_j: type 1 iff j >= i, type 2 iff j >= i+1.
// y_i with l(y_i) = x_j: type 1 iff j >= i+1, type 2 iff j >= i.
struct VertexType {
    bool type1 = false;
    bool type2 = false;
};

// Classification under the full ordering `o` (no deletions).
VertexType vertex_type(const StrongOrdering& o, Vertex v);

// Record of one run of the scan, for tests and reports.
struct BpTrace {
    struct Encounter {
        Vertex vertex = -1;
        Vertex support = -1;  // -1 for the encounter that ends the scan
        int phase = 1;        // 1: looking for non-type-1 in x1,y1,x2,...; 2: non-type-2 in y1,x1,...
        bool terminal = false;
    };
    std::vector<Encounter> encounters;
    bool switched = false;
    // Residual side orders right after the switch to phase 2.
    std::vector<Vertex> switch_x, switch_y;
};

// Maximum internal spanning tree of a connected bipartite permutation graph.
// `o` must pass verify_strong_ordering; otherwise GraphError.
SpanningTree solve_bp(const Graph& g, const StrongOrdering& o, BpTrace* trace = nullptr);

}  // namespace mist
