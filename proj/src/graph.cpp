#include "mist/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <queue>
#include <sstream>

#include "dsu.hpp"

namespace mist {

namespace {

bool is_connected(int n, const std::vector<int>& offsets, const std::vector<Vertex>& targets) {
    if (n == 0) return true;
    std::vector<char> seen(n, 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (int i = offsets[v]; i < offsets[v + 1]; ++i) {
            Vertex w = targets[i];
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == n;
}

// Splits a line into whitespace-separated integer tokens. Returns false on
// anything that is not a plain integer.
bool parse_ints(const std::string& line, std::vector<long long>& out) {
    out.clear();
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i == line.size()) break;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        long long value = 0;
        auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + j, value);
        if (ec != std::errc{} || ptr != line.data() + j) return false;
        out.push_back(value);
        i = j;
    }
    return true;
}

bool is_blank_or_comment(const std::string& line) {
    auto it = std::find_if_not(line.begin(), line.end(),
                               [](unsigned char c) { return std::isspace(c); });
    return it == line.end() || *it == '#';
}

// Two stable counting passes: by v, then by u. Linear in n + |edges|.
void sort_edges(std::vector<Edge>& edges, int n) {
    std::vector<Edge> tmp(edges.size());
    std::vector<int> count(n + 1);
    auto pass = [&](auto key, std::vector<Edge>& from, std::vector<Edge>& to) {
        std::fill(count.begin(), count.end(), 0);
        for (const Edge& e : from) ++count[key(e) + 1];
        for (int i = 0; i < n; ++i) count[i + 1] += count[i];
        for (const Edge& e : from) to[count[key(e)]++] = e;
    };
    pass([](const Edge& e) { return e.v; }, edges, tmp);
    pass([](const Edge& e) { return e.u; }, tmp, edges);
}

}  // namespace

Graph Graph::from_edges(int n, std::span<const Edge> edges, std::vector<std::string> labels) {
    if (n <= 0) throw GraphError("graph must have at least one vertex");
    if (!labels.empty() && static_cast<int>(labels.size()) != n)
        throw GraphError("label count does not match vertex count");

    Graph g;
    g.n_ = n;
    g.labels_ = std::move(labels);
    g.edges_.reserve(edges.size());
    for (const Edge& e : edges) {
        if (e.u < 0 || e.v >= n) throw GraphError("vertex id out of range");
        if (e.u == e.v) throw GraphError("self-loop at vertex " + std::to_string(e.u + 1));
        g.edges_.push_back(e);
    }
    sort_edges(g.edges_, n);
    auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
    if (dup != g.edges_.end())
        throw GraphError("duplicate edge " + std::to_string(dup->u + 1) + " " +
                         std::to_string(dup->v + 1));

    g.offsets_.assign(n + 1, 0);
    for (const Edge& e : g.edges_) {
        ++g.offsets_[e.u + 1];
        ++g.offsets_[e.v + 1];
    }
    for (int i = 0; i < n; ++i) g.offsets_[i + 1] += g.offsets_[i];
    g.targets_.resize(g.offsets_[n]);
    std::vector<int> fill(g.offsets_.begin(), g.offsets_.end() - 1);
    // With edges sorted by (u, v), every row comes out ascending: a row's
    // smaller neighbours arrive before its larger ones.
    for (const Edge& e : g.edges_) {
        g.targets_[fill[e.u]++] = e.v;
        g.targets_[fill[e.v]++] = e.u;
    }

    if (!is_connected(n, g.offsets_, g.targets_)) throw GraphError("graph is disconnected");
    return g;
}

Graph Graph::from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
    std::vector<Edge> list;
    list.reserve(edges.size());
    for (auto [a, b] : edges) list.emplace_back(a, b);
    return from_edges(n, list);
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    if (degree(u) > degree(v)) std::swap(u, v);
    auto row = neighbors(u);
    return std::binary_search(row.begin(), row.end(), v);
}

std::string Graph::label(Vertex v) const {
    return labels_.empty() ? std::to_string(v + 1) : labels_[v];
}

Graph Graph::induced(std::span<const Vertex> keep) const {
    std::vector<Vertex> index(n_, -1);
    for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = static_cast<Vertex>(i);
    std::vector<Edge> sub;
    for (const Edge& e : edges_)
        if (index[e.u] >= 0 && index[e.v] >= 0) sub.emplace_back(index[e.u], index[e.v]);
    std::vector<std::string> sub_labels;
    if (!labels_.empty())
        for (Vertex v : keep) sub_labels.push_back(labels_[v]);
    return from_edges(static_cast<int>(keep.size()), sub, std::move(sub_labels));
}

Graph parse_graph(std::istream& in) {
    std::string line;
    int line_no = 0;
    int header_line = 0;
    long long n = -1, m = -1;
    std::vector<long long> tokens;
    std::vector<Edge> edges;
    std::vector<int> edge_line;

    while (std::getline(in, line)) {
        ++line_no;
        if (is_blank_or_comment(line)) continue;
        if (!parse_ints(line, tokens) || tokens.size() != 2)
            throw GraphError(n < 0 ? "malformed header, expected \"n m\""
                                   : "malformed edge line, expected \"u v\"",
                             line_no);
        if (n < 0) {
            n = tokens[0];
            m = tokens[1];
            header_line = line_no;
            if (n <= 0 || m < 0 || n > (1LL << 30) || m > (1LL << 31) - 1)
                throw GraphError("header values out of range", line_no);
            edges.reserve(static_cast<std::size_t>(std::min<long long>(m, 1 << 24)));
            continue;
        }
        if (static_cast<long long>(edges.size()) == m)
            throw GraphError("more edge lines than the header declares", line_no);
        long long a = tokens[0], b = tokens[1];
        if (a < 1 || a > n || b < 1 || b > n)
            throw GraphError("vertex id out of range 1.." + std::to_string(n), line_no);
        if (a == b) throw GraphError("self-loop at vertex " + std::to_string(a), line_no);
        edges.emplace_back(static_cast<Vertex>(a - 1), static_cast<Vertex>(b - 1));
        edge_line.push_back(line_no);
    }
    if (n < 0) throw GraphError("missing header line", line_no == 0 ? 1 : line_no);
    if (static_cast<long long>(edges.size()) != m)
        throw GraphError("expected " + std::to_string(m) + " edges, found " +
                             std::to_string(edges.size()),
                         line_no);

    // Report duplicates with the line of the later occurrence.
    {
        std::vector<std::pair<Edge, int>> order;
        order.reserve(edges.size());
        for (std::size_t i = 0; i < edges.size(); ++i) order.emplace_back(edges[i], edge_line[i]);
        std::sort(order.begin(), order.end());
        for (std::size_t i = 1; i < order.size(); ++i)
            if (order[i].first == order[i - 1].first)
                throw GraphError("duplicate edge " + std::to_string(order[i].first.u + 1) + " " +
                                     std::to_string(order[i].first.v + 1),
                                 order[i].second);
    }
    try {
        return Graph::from_edges(static_cast<int>(n), edges);
    } catch (const GraphError& e) {
        throw GraphError(e.what(), header_line);
    }
}

Graph parse_graph_string(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
    out << g.n() << ' ' << g.m() << '\n';
    for (const Edge& e : g.edges()) out << e.u + 1 << ' ' << e.v + 1 << '\n';
}

int component_count(int n, std::span<const Edge> edges) {
    detail::DisjointSets sets(n);
    int components = n;
    for (const Edge& e : edges)
        if (sets.unite(e.u, e.v)) --components;
    return components;
}

// ---------------------------------------------------------------------------

SpanningTree::SpanningTree(int n, std::vector<Edge> edges) : edges_(std::move(edges)), degree_(n, 0) {
    for (const Edge& e : edges_) {
        ++degree_[e.u];
        ++degree_[e.v];
    }
    internal_ = static_cast<int>(std::count_if(degree_.begin(), degree_.end(),
                                               [](int d) { return d >= 2; }));
}

SpanningTree SpanningTree::from_edges(int n, std::vector<Edge> edges) {
    if (n <= 0) throw GraphError("spanning tree needs at least one vertex");
    if (static_cast<int>(edges.size()) != n - 1)
        throw GraphError("spanning tree on " + std::to_string(n) + " vertices needs " +
                         std::to_string(n - 1) + " edges, got " + std::to_string(edges.size()));
    detail::DisjointSets sets(n);
    for (const Edge& e : edges) {
        if (e.u < 0 || e.v >= n || e.u == e.v) throw GraphError("tree edge out of range");
        if (!sets.unite(e.u, e.v))
            throw GraphError("tree edges contain a cycle through " + std::to_string(e.u + 1) +
                             " " + std::to_string(e.v + 1));
    }
    sort_edges(edges, n);
    return SpanningTree(n, std::move(edges));
}

SpanningTree SpanningTree::build(const Graph& host, std::vector<Edge> edges) {
    SpanningTree t = from_edges(host.n(), std::move(edges));
    t.check_spans(host);
    return t;
}

void SpanningTree::check_spans(const Graph& host) const {
    if (host.n() != n()) throw GraphError("tree and graph vertex counts differ");
    for (const Edge& e : edges_)
        if (!host.adjacent(e.u, e.v))
            throw GraphError("tree edge " + std::to_string(e.u + 1) + " " +
                             std::to_string(e.v + 1) + " is not a graph edge");
}

std::vector<Vertex> SpanningTree::leaves() const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < n(); ++v)
        if (degree_[v] == 1) out.push_back(v);
    return out;
}

void write_tree(std::ostream& out, const SpanningTree& t) {
    out << "internal " << t.internal_count() << '\n';
    for (const Edge& e : t.edges()) out << e.u + 1 << ' ' << e.v + 1 << '\n';
}

SpanningTree parse_tree(std::istream& in, const Graph& host) {
    std::string line;
    int line_no = 0;
    std::optional<long long> declared;
    std::vector<long long> tokens;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++line_no;
        if (is_blank_or_comment(line)) continue;
        if (!declared) {
            std::istringstream head(line);
            std::string word;
            long long k = -1;
            if (!(head >> word >> k) || word != "internal")
                throw GraphError("malformed tree header, expected \"internal k\"", line_no);
            declared = k;
            continue;
        }
        if (!parse_ints(line, tokens) || tokens.size() != 2)
            throw GraphError("malformed tree edge line", line_no);
        if (tokens[0] < 1 || tokens[0] > host.n() || tokens[1] < 1 || tokens[1] > host.n())
            throw GraphError("vertex id out of range", line_no);
        edges.emplace_back(static_cast<Vertex>(tokens[0] - 1), static_cast<Vertex>(tokens[1] - 1));
    }
    if (!declared) throw GraphError("missing tree header");
    SpanningTree t = SpanningTree::build(host, std::move(edges));
    if (t.internal_count() != *declared)
        throw GraphError("declared internal count " + std::to_string(*declared) +
                         " but tree has " + std::to_string(t.internal_count()));
    return t;
}

// ---------------------------------------------------------------------------

PathCover PathCover::build(const Graph& host, std::vector<std::vector<Vertex>> paths) {
    std::vector<char> seen(host.n(), 0);
    int edges = 0;
    for (const auto& path : paths) {
        if (path.empty()) throw GraphError("empty path in path cover");
        for (std::size_t i = 0; i < path.size(); ++i) {
            Vertex v = path[i];
            if (v < 0 || v >= host.n()) throw GraphError("path vertex out of range");
            if (seen[v]) throw GraphError("vertex " + std::to_string(v + 1) + " covered twice");
            seen[v] = 1;
            if (i > 0 && !host.adjacent(path[i - 1], v))
                throw GraphError("path step " + std::to_string(path[i - 1] + 1) + " " +
                                 std::to_string(v + 1) + " is not a graph edge");
        }
        edges += static_cast<int>(path.size()) - 1;
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end())
        throw GraphError("path cover misses a vertex");
    PathCover pc;
    pc.paths_ = std::move(paths);
    pc.edge_count_ = edges;
    pc.n_ = host.n();
    return pc;
}

std::vector<Edge> PathCover::edges() const {
    std::vector<Edge> out;
    for (const auto& path : paths_)
        for (std::size_t i = 1; i < path.size(); ++i) out.emplace_back(path[i - 1], path[i]);
    return out;
}

// ---------------------------------------------------------------------------

int PendantLedger::removed_count() const {
    int total = 0;
    for (const auto& [support, list] : removed) total += static_cast<int>(list.size());
    return total;
}

PendantReduction reduce_pendants(const Graph& g) {
    std::vector<char> drop(g.n(), 0);
    PendantLedger ledger;
    ledger.original_n = g.n();
    for (Vertex u = 0; u < g.n(); ++u) {
        std::vector<Vertex> pendants;
        for (Vertex w : g.neighbors(u))
            if (g.degree(w) == 1) pendants.push_back(w);
        if (pendants.size() < 2) continue;
        // A star centre has no other neighbour: keep two leaves so it stays
        // internal in every spanning tree of the reduced graph.
        std::size_t keep = pendants.size() == static_cast<std::size_t>(g.degree(u)) ? 2 : 1;
        if (pendants.size() <= keep) continue;
        auto& list = ledger.removed[u];
        for (std::size_t i = keep; i < pendants.size(); ++i) {
            drop[pendants[i]] = 1;
            list.push_back(pendants[i]);
        }
    }
    for (Vertex v = 0; v < g.n(); ++v)
        if (!drop[v]) ledger.original_id.push_back(v);
    Graph reduced = ledger.empty() ? g : g.induced(ledger.original_id);
    return {std::move(reduced), std::move(ledger)};
}

SpanningTree restore_pendants(const SpanningTree& t, const PendantLedger& ledger) {
    if (ledger.original_id.empty() && ledger.removed.empty()) return t;
    if (static_cast<int>(ledger.original_id.size()) != t.n())
        throw GraphError("ledger does not match the tree's vertex count");
    std::vector<Vertex> reduced_id(ledger.original_n, -1);
    for (std::size_t i = 0; i < ledger.original_id.size(); ++i)
        reduced_id[ledger.original_id[i]] = static_cast<Vertex>(i);

    std::vector<Edge> edges;
    edges.reserve(ledger.original_n - 1);
    for (const Edge& e : t.edges())
        edges.emplace_back(ledger.original_id[e.u], ledger.original_id[e.v]);
    for (const auto& [support, list] : ledger.removed) {
        if (support < 0 || support >= ledger.original_n || reduced_id[support] < 0)
            throw GraphError("ledger support " + std::to_string(support + 1) + " is absent from the tree");
        if (!t.is_internal(reduced_id[support]))
            throw InvariantViolation("support vertex is a leaf of the reduced tree");
        for (Vertex leaf : list) edges.emplace_back(support, leaf);
    }
    SpanningTree out = SpanningTree::from_edges(ledger.original_n, std::move(edges));
    if (out.internal_count() != t.internal_count())
        throw InvariantViolation("pendant restoration changed the internal count");
    return out;
}

int pendant_lower_bound(const Graph& g, std::span<const Vertex> a, std::span<const Vertex> b) {
    if (a.empty()) throw GraphError("pendant bound needs a non-empty set A");
    std::vector<char> in_a(g.n(), 0), in_b(g.n(), 0), in_na(g.n(), 0);
    for (Vertex v : a) {
        if (v < 0 || v >= g.n() || in_a[v]) throw GraphError("invalid or repeated vertex in A");
        in_a[v] = 1;
    }
    for (Vertex v : b) {
        if (v < 0 || v >= g.n() || in_b[v]) throw GraphError("invalid or repeated vertex in B");
        if (in_a[v]) throw GraphError("A and B overlap");
        in_b[v] = 1;
    }
    for (Vertex v : a)
        for (Vertex w : g.neighbors(v)) {
            if (in_a[w]) throw GraphError("A is not an independent set");
            in_na[w] = 1;
        }
    if (in_na != in_b) throw GraphError("N(A) differs from B");
    return std::max(0, static_cast<int>(a.size()) - static_cast<int>(b.size()) + 1);
}

std::optional<std::vector<int>> bipartition(const Graph& g) {
    std::vector<int> side(g.n(), -1);
    std::queue<Vertex> queue;
    side[0] = 0;
    queue.push(0);
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop();
        for (Vertex w : g.neighbors(v)) {
            if (side[w] < 0) {
                side[w] = 1 - side[v];
                queue.push(w);
            } else if (side[w] == side[v]) {
                return std::nullopt;
            }
        }
    }
    return side;
}

}  // namespace mist
