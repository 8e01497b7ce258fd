#pragma once

#include <array>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mist/graph.hpp"

namespace mist {

// ---------------------------------------------------------------------------
// Blocks

enum class BlockKind { edge, clique, cycle, other };

std::string_view to_string(BlockKind kind);

// Variable-length lists stored back to back.
template <class T>
class FlatLists {
public:
    std::span<const T> operator[](std::size_t i) const {
        return {items_.data() + start_[i], items_.data() + start_[i + 1]};
    }
    std::size_t size() const { return start_.size() - 1; }

    void push_back(std::span<const T> list) {
        items_.insert(items_.end(), list.begin(), list.end());
        start_.push_back(items_.size());
    }
    void push_back(std::initializer_list<T> list) { push_back(std::span<const T>(list.begin(), list.size())); }
    void reserve(std::size_t lists, std::size_t items) {
        start_.reserve(lists + 1);
        items_.reserve(items);
    }

private:
    std::vector<T> items_;
    std::vector<std::size_t> start_{0};
};

struct BlockDecomposition {
    // Vertex sets in ascending id order. A graph with one vertex has a single
    // one-vertex block of kind clique.
    FlatLists<Vertex> blocks;
    FlatLists<Edge> block_edges;
    std::vector<BlockKind> kind;
    // Cyclic vertex order of each cycle block, starting at its smallest id
    // and continuing towards the smaller of that vertex's two neighbours.
    // Empty for other kinds.
    FlatLists<Vertex> cycle_order;
    std::vector<char> is_cut;
    std::vector<Vertex> cut_vertices;

    int size() const { return static_cast<int>(blocks.size()); }
};

BlockDecomposition block_decompose(const Graph& g);

// ---------------------------------------------------------------------------
// Cotrees

struct CotreeNode {
    int label = -1;  // 0 = union, 1 = join, -1 = leaf
    int left = -1;
    int right = -1;
    int parent = -1;
    Vertex vertex = -1;  // leaves only
    int leaves = 1;
    // Created while binarizing a node with more than two children; such
    // nodes share their label with the node above them.
    bool synthetic = false;
};

struct Cotree {
    std::vector<CotreeNode> nodes;
    int root = -1;
    int n = 0;

    bool is_leaf(int node) const { return nodes[node].label < 0; }
    std::vector<Vertex> leaves_of(int node) const;
};

class NotCograph : public GraphError {
public:
    explicit NotCograph(std::array<Vertex, 4> p4)
        : GraphError("graph contains an induced P4 " + std::to_string(p4[0] + 1) + "-" +
                     std::to_string(p4[1] + 1) + "-" + std::to_string(p4[2] + 1) + "-" +
                     std::to_string(p4[3] + 1)),
          witness(p4) {}

    std::array<Vertex, 4> witness;
};

Cotree build_cotree(const Graph& g);

// ---------------------------------------------------------------------------
// Orderings of bipartite graphs

struct BipartiteOrdering {
    std::vector<Vertex> x;
    std::vector<Vertex> y;
    std::vector<int> side;   // 0 for X, 1 for Y
    std::vector<int> pos;    // index inside its own side
    std::vector<int> first;  // position of first neighbour on the other side
    std::vector<int> last;   // position of last neighbour on the other side

    // Fills side/pos/first/last. Throws GraphError unless x and y partition
    // the vertices and every edge crosses.
    static BipartiteOrdering make(const Graph& g, std::vector<Vertex> x, std::vector<Vertex> y);

    const std::vector<Vertex>& order(int s) const { return s == 0 ? x : y; }
};

using StrongOrdering = BipartiteOrdering;
using ChainOrdering = BipartiteOrdering;

// Reverse both side orders; a strong ordering stays strong.
BipartiteOrdering reversed(const Graph& g, const BipartiteOrdering& o);
// Exchange the roles of X and Y.
BipartiteOrdering swapped_sides(const Graph& g, const BipartiteOrdering& o);

struct OrderingCheck {
    bool ok = true;
    std::string violation;
    // A violating quadruple (a, b, a', b') with a < a', b' < b, ab and a'b'
    // edges, or a single offending vertex when no quadruple search was run.
    std::vector<Vertex> witness;

    explicit operator bool() const { return ok; }
};

OrderingCheck verify_strong_ordering(const Graph& g, const BipartiteOrdering& o);
OrderingCheck verify_chain_ordering(const Graph& g, const BipartiteOrdering& o);

class NotBipartitePermutation : public GraphError {
public:
    NotBipartitePermutation(const std::string& what, std::vector<Vertex> w)
        : GraphError("not a bipartite permutation graph: " + what), witness(std::move(w)) {}

    std::vector<Vertex> witness;
};

class NotChain : public GraphError {
public:
    NotChain(const std::string& what, Vertex a, Vertex b)
        : GraphError("not a chain graph: " + what), witness{a, b} {}

    std::array<Vertex, 2> witness;
};

StrongOrdering compute_strong_ordering(const Graph& g);

// X is the side of vertex 0 unless a side vector is given.
ChainOrdering compute_chain_ordering(const Graph& g);
ChainOrdering compute_chain_ordering(const Graph& g, const std::vector<int>& side);

// ---------------------------------------------------------------------------
// Classification

enum class GraphClass { block, cactus, cograph, bipartite_permutation, chain };

std::string_view to_string(GraphClass c);
// Accepts the names above plus "bp".
std::optional<GraphClass> parse_graph_class(std::string_view name);

struct ClassSet {
    unsigned bits = 0;

    bool has(GraphClass c) const { return bits & (1u << static_cast<unsigned>(c)); }
    void add(GraphClass c) { bits |= 1u << static_cast<unsigned>(c); }
    bool empty() const { return bits == 0; }
    std::vector<GraphClass> list() const;
    std::string str() const;
};

ClassSet classify_graph(const Graph& g);

}  // namespace mist
