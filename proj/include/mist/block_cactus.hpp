#pragma once

#include <optional>
#include <vector>

#include "mist/graph.hpp"
#include "mist/recognition.hpp"

namespace mist {

class NotBlockOrCactus : public GraphError {
public:
    using GraphError::GraphError;
};

struct BlockLabeling {
    std::vector<char> good;  // per block
    int bad_count = 0;
    // Chosen path endpoints for good blocks, (-1, -1) for bad ones.
    std::vector<std::pair<Vertex, Vertex>> ends;
};

// `as` restricts the accepted block kinds: block graphs need cliques and
// edges, cactus graphs need cycles, triangles and edges. Without it both
// kinds may be mixed. Blocks that are neither always throw.
BlockLabeling label_blocks(const Graph& g, const BlockDecomposition& bd,
                           std::optional<GraphClass> as = std::nullopt);

// Path through every vertex of block `b` starting at `start`, ending at
// `end` when given.
std::vector<Vertex> spanning_path_in_block(const BlockDecomposition& bd, int b, Vertex start,
                                           std::optional<Vertex> end = std::nullopt);

struct BlockCactusResult {
    SpanningTree tree;
    BlockDecomposition blocks;
    BlockLabeling labels;
};

BlockCactusResult solve_block_cactus_detailed(const Graph& g,
                                              std::optional<GraphClass> as = std::nullopt);
SpanningTree solve_block_cactus(const Graph& g, std::optional<GraphClass> as = std::nullopt);

}  // namespace mist
