#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mist {

// Vertices are 0-based internally; files use 1-based ids.
using Vertex = std::int32_t;

struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Malformed input, or a structure that is not what the caller promised.
class GraphError : public std::runtime_error {
public:
    explicit GraphError(const std::string& what, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

// A construction produced something its own post-check rejects. Always a bug.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Simple, undirected, connected graph in CSR form. Immutable once built.
class Graph {
public:
    Graph() = default;

    // Validates simplicity, id range and connectivity. Throws GraphError.
    static Graph from_edges(int n, std::span<const Edge> edges,
                            std::vector<std::string> labels = {});
    static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges);

    int n() const { return n_; }
    int m() const { return static_cast<int>(edges_.size()); }

    std::span<const Vertex> neighbors(Vertex v) const {
        return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
    }
    int degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
    bool adjacent(Vertex u, Vertex v) const;

    // Sorted by (u, v) with u < v.
    const std::vector<Edge>& edges() const { return edges_; }

    const std::vector<std::string>& labels() const { return labels_; }
    std::string label(Vertex v) const;

    // Induced subgraph on `keep` (sorted ids), renumbered in that order.
    // The result must be connected.
    Graph induced(std::span<const Vertex> keep) const;

private:
    int n_ = 0;
    std::vector<int> offsets_{0};
    std::vector<Vertex> targets_;
    std::vector<Edge> edges_;
    std::vector<std::string> labels_;
};

// Edge-list text format: '#' comments, "n m", then m lines "u v" (1-based).
Graph parse_graph(std::istream& in);
Graph parse_graph_string(const std::string& text);
void write_graph(std::ostream& out, const Graph& g);

// Connected component count of an arbitrary edge set over n vertices.
int component_count(int n, std::span<const Edge> edges);

class SpanningTree {
public:
    SpanningTree() = default;

    // Checks n-1 edges, acyclic, all edges in `host`.
    static SpanningTree build(const Graph& host, std::vector<Edge> edges);
    // Structural check only (n-1 edges, acyclic); host membership not checked.
    static SpanningTree from_edges(int n, std::vector<Edge> edges);

    int n() const { return static_cast<int>(degree_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    int degree(Vertex v) const { return degree_[v]; }
    bool is_internal(Vertex v) const { return degree_[v] >= 2; }
    int internal_count() const { return internal_; }
    std::vector<Vertex> leaves() const;

    // Throws GraphError if some edge is not an edge of `host`.
    void check_spans(const Graph& host) const;

private:
    SpanningTree(int n, std::vector<Edge> edges);

    std::vector<Edge> edges_;
    std::vector<int> degree_;
    int internal_ = 0;
};

inline int internal_count(const SpanningTree& t) { return t.internal_count(); }

// Tree file: "internal k" then n-1 lines "u v" (1-based).
void write_tree(std::ostream& out, const SpanningTree& t);
SpanningTree parse_tree(std::istream& in, const Graph& host);

class PathCover {
public:
    PathCover() = default;

    // Checks that `paths` partition the vertices and follow host edges.
    static PathCover build(const Graph& host, std::vector<std::vector<Vertex>> paths);

    const std::vector<std::vector<Vertex>>& paths() const { return paths_; }
    int component_count() const { return static_cast<int>(paths_.size()); }
    int edge_count() const { return edge_count_; }
    int n() const { return n_; }
    std::vector<Edge> edges() const;

private:
    std::vector<std::vector<Vertex>> paths_;
    int edge_count_ = 0;
    int n_ = 0;
};

// Support vertex -> pendant neighbours removed from it (original ids).
struct PendantLedger {
    std::map<Vertex, std::vector<Vertex>> removed;
    // reduced id -> original id
    std::vector<Vertex> original_id;
    int original_n = 0;

    bool empty() const { return removed.empty(); }
    int removed_count() const;
};

struct PendantReduction {
    Graph reduced;
    PendantLedger ledger;
};

// Leaves at most one pendant per support (two when the support would
// otherwise become a pendant itself, as in a star). Preserves Opt.
PendantReduction reduce_pendants(const Graph& g);
// Maps a spanning tree of the reduced graph back to the original graph.
SpanningTree restore_pendants(const SpanningTree& t, const PendantLedger& ledger);

// Every spanning tree of g has at least max(0, |A|-|B|+1) leaves inside A,
// provided A is independent and N(A) = B. Throws GraphError otherwise.
int pendant_lower_bound(const Graph& g, std::span<const Vertex> a, std::span<const Vertex> b);

// side[v] in {0,1}; vertex 0 is on side 0. nullopt if g has an odd cycle.
std::optional<std::vector<int>> bipartition(const Graph& g);

}  // namespace mist
