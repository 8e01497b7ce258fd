#include <algorithm>

#include "mist/recognition.hpp"

namespace mist {

std::vector<Vertex> Cotree::leaves_of(int node) const {
    std::vector<Vertex> out;
    std::vector<int> stack{node};
    while (!stack.empty()) {
        int t = stack.back();
        stack.pop_back();
        if (is_leaf(t)) {
            out.push_back(nodes[t].vertex);
        } else {
            stack.push_back(nodes[t].right);
            stack.push_back(nodes[t].left);
        }
    }
    return out;
}

namespace {

// Scratch marks over the whole graph, reset by bumping a stamp.
struct Marks {
    std::vector<unsigned> stamp;
    unsigned now = 0;

    explicit Marks(int n) : stamp(n, 0) {}
    void next() { ++now; }
    void set(Vertex v) { stamp[v] = now; }
    bool has(Vertex v) const { return stamp[v] == now; }
};

class Decomposer {
public:
    explicit Decomposer(const Graph& g) : g_(g), in_set_(g.n()), mark_(g.n()), seen_(g.n()) {}

    // Components of G[S] (label 0) or of its complement (label 1). A single
    // group in both means S induces a P4, which is thrown.
    int split(const std::vector<Vertex>& s, std::vector<std::vector<Vertex>>& groups) {
        in_set_.next();
        for (Vertex v : s) in_set_.set(v);

        components(s, groups);
        if (groups.size() > 1) return 0;
        co_components(s, groups);
        if (groups.size() > 1) return 1;
        throw NotCograph(find_p4(s));
    }

private:
    void components(const std::vector<Vertex>& s, std::vector<std::vector<Vertex>>& groups) {
        groups.clear();
        seen_.next();
        for (Vertex root : s) {
            if (seen_.has(root)) continue;
            groups.emplace_back();
            auto& comp = groups.back();
            seen_.set(root);
            comp.push_back(root);
            for (std::size_t i = 0; i < comp.size(); ++i)
                for (Vertex w : g_.neighbors(comp[i]))
                    if (in_set_.has(w) && !seen_.has(w)) {
                        seen_.set(w);
                        comp.push_back(w);
                    }
        }
    }

    void co_components(const std::vector<Vertex>& s, std::vector<std::vector<Vertex>>& groups) {
        groups.clear();
        std::vector<Vertex> unvisited(s.begin(), s.end());
        std::vector<Vertex> keep;
        while (!unvisited.empty()) {
            groups.emplace_back();
            auto& comp = groups.back();
            comp.push_back(unvisited.back());
            unvisited.pop_back();
            for (std::size_t i = 0; i < comp.size() && !unvisited.empty(); ++i) {
                mark_.next();
                for (Vertex w : g_.neighbors(comp[i]))
                    if (in_set_.has(w)) mark_.set(w);
                keep.clear();
                for (Vertex u : unvisited) (mark_.has(u) ? keep.push_back(u) : comp.push_back(u));
                unvisited.swap(keep);
            }
        }
    }

    std::array<Vertex, 4> find_p4(const std::vector<Vertex>& s) {
        std::vector<Vertex> sorted(s);
        std::sort(sorted.begin(), sorted.end());
        std::vector<unsigned> nb(g_.n(), 0), nc(g_.n(), 0);
        unsigned stamp = 0;
        std::vector<Vertex> a_set, d_set;
        for (Vertex b : sorted)
            for (Vertex c : g_.neighbors(b)) {
                if (c < b || !in_set_.has(c)) continue;
                ++stamp;
                for (Vertex w : g_.neighbors(b)) nb[w] = stamp;
                for (Vertex w : g_.neighbors(c)) nc[w] = stamp;
                a_set.clear();
                d_set.clear();
                for (Vertex w : g_.neighbors(b))
                    if (in_set_.has(w) && w != c && nc[w] != stamp) a_set.push_back(w);
                if (a_set.empty()) continue;
                for (Vertex w : g_.neighbors(c))
                    if (in_set_.has(w) && w != b && nb[w] != stamp) d_set.push_back(w);
                if (d_set.empty()) continue;
                mark_.next();
                for (Vertex d : d_set) mark_.set(d);
                for (Vertex a : a_set) {
                    std::size_t hits = 0;
                    for (Vertex w : g_.neighbors(a))
                        if (mark_.has(w)) ++hits;
                    if (hits == d_set.size()) continue;
                    for (Vertex d : d_set)
                        if (!g_.adjacent(a, d)) return {a, b, c, d};
                }
            }
        throw InvariantViolation("connected and co-connected vertex set without an induced P4");
    }

    const Graph& g_;
    Marks in_set_;
    Marks mark_;
    Marks seen_;
};

}  // namespace

Cotree build_cotree(const Graph& g) {
    Cotree t;
    t.n = g.n();
    t.nodes.reserve(2 * g.n());
    t.nodes.emplace_back();
    t.root = 0;

    Decomposer dec(g);
    struct Work {
        std::vector<Vertex> set;
        int node;
    };
    std::vector<Work> work;
    std::vector<Vertex> all(g.n());
    for (Vertex v = 0; v < g.n(); ++v) all[v] = v;
    work.push_back({std::move(all), 0});

    std::vector<std::vector<Vertex>> groups;
    while (!work.empty()) {
        Work item = std::move(work.back());
        work.pop_back();
        const int self = item.node;
        t.nodes[self].leaves = static_cast<int>(item.set.size());
        if (item.set.size() == 1) {
            t.nodes[self].label = -1;
            t.nodes[self].vertex = item.set[0];
            continue;
        }
        const int label = dec.split(item.set, groups);

        std::vector<int> child(groups.size());
        for (std::size_t i = 0; i < groups.size(); ++i) {
            child[i] = static_cast<int>(t.nodes.size());
            t.nodes.emplace_back();
        }
        auto link = [&](int parent, int left, int right) {
            t.nodes[parent].label = label;
            t.nodes[parent].left = left;
            t.nodes[parent].right = right;
            t.nodes[left].parent = parent;
            t.nodes[right].parent = parent;
        };
        // Left-deep: ((g1 g2) g3) ... gk
        int prev = child[0];
        int prev_leaves = static_cast<int>(groups[0].size());
        for (std::size_t i = 1; i + 1 < groups.size(); ++i) {
            int node = static_cast<int>(t.nodes.size());
            t.nodes.emplace_back();
            t.nodes[node].synthetic = true;
            link(node, prev, child[i]);
            prev_leaves += static_cast<int>(groups[i].size());
            t.nodes[node].leaves = prev_leaves;
            prev = node;
        }
        link(self, prev, child.back());

        for (std::size_t i = 0; i < groups.size(); ++i)
            work.push_back({std::move(groups[i]), child[i]});
        groups.clear();
    }
    return t;
}

}  // namespace mist
