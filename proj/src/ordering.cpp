#include <algorithm>
#include <numeric>

#include "mist/recognition.hpp"

namespace mist {

BipartiteOrdering BipartiteOrdering::make(const Graph& g, std::vector<Vertex> x,
                                          std::vector<Vertex> y) {
    BipartiteOrdering o;
    const int n = g.n();
    if (static_cast<int>(x.size() + y.size()) != n)
        throw GraphError("ordering does not cover every vertex exactly once");
    o.side.assign(n, -1);
    o.pos.assign(n, -1);
    for (int s = 0; s < 2; ++s) {
        const auto& list = s == 0 ? x : y;
        for (std::size_t i = 0; i < list.size(); ++i) {
            Vertex v = list[i];
            if (v < 0 || v >= n || o.side[v] >= 0)
                throw GraphError("ordering does not cover every vertex exactly once");
            o.side[v] = s;
            o.pos[v] = static_cast<int>(i);
        }
    }
    o.first.assign(n, -1);
    o.last.assign(n, -1);
    for (Vertex v = 0; v < n; ++v)
        for (Vertex w : g.neighbors(v)) {
            if (o.side[w] == o.side[v])
                throw GraphError("edge " + std::to_string(v + 1) + " " + std::to_string(w + 1) +
                                 " lies inside one side of the ordering");
            int p = o.pos[w];
            if (o.first[v] < 0 || p < o.first[v]) o.first[v] = p;
            if (p > o.last[v]) o.last[v] = p;
        }
    o.x = std::move(x);
    o.y = std::move(y);
    return o;
}

BipartiteOrdering reversed(const Graph& g, const BipartiteOrdering& o) {
    return BipartiteOrdering::make(g, {o.x.rbegin(), o.x.rend()}, {o.y.rbegin(), o.y.rend()});
}

BipartiteOrdering swapped_sides(const Graph& g, const BipartiteOrdering& o) {
    return BipartiteOrdering::make(g, o.y, o.x);
}

namespace {

// Brute-force search for a quadruple violating the strong condition.
std::vector<Vertex> find_bad_quadruple(const Graph& g, const BipartiteOrdering& o) {
    std::vector<std::pair<Vertex, Vertex>> xy;  // (x, y)
    for (const Edge& e : g.edges())
        xy.emplace_back(o.side[e.u] == 0 ? e.u : e.v, o.side[e.u] == 0 ? e.v : e.u);
    for (auto [a, b] : xy)
        for (auto [a2, b2] : xy)
            if (o.pos[a] < o.pos[a2] && o.pos[b2] < o.pos[b] &&
                (!g.adjacent(a, b2) || !g.adjacent(a2, b)))
                return {a, b, a2, b2};
    return {};
}

constexpr std::size_t kQuadrupleSearchLimit = 3000;

OrderingCheck fail(const Graph& g, const BipartiteOrdering& o, std::string why, Vertex v) {
    OrderingCheck c;
    c.ok = false;
    c.violation = std::move(why);
    if (g.edges().size() <= kQuadrupleSearchLimit) c.witness = find_bad_quadruple(g, o);
    if (c.witness.empty()) c.witness = {v};
    return c;
}

bool well_formed(const Graph& g, const BipartiteOrdering& o) {
    const int n = g.n();
    if (static_cast<int>(o.x.size() + o.y.size()) != n) return false;
    if (static_cast<int>(o.side.size()) != n || static_cast<int>(o.pos.size()) != n) return false;
    for (int s = 0; s < 2; ++s) {
        const auto& list = o.order(s);
        for (std::size_t i = 0; i < list.size(); ++i) {
            Vertex v = list[i];
            if (v < 0 || v >= n || o.side[v] != s || o.pos[v] != static_cast<int>(i)) return false;
        }
    }
    for (const Edge& e : g.edges())
        if (o.side[e.u] == o.side[e.v]) return false;
    return true;
}

}  // namespace

OrderingCheck verify_strong_ordering(const Graph& g, const BipartiteOrdering& o) {
    if (!well_formed(g, o)) return {false, "ordering is not a bipartition of the vertices", {}};
    const int n = g.n();
    std::vector<int> f(n, -1), l(n, -1);
    for (Vertex v = 0; v < n; ++v) {
        for (Vertex w : g.neighbors(v)) {
            int p = o.pos[w];
            if (f[v] < 0 || p < f[v]) f[v] = p;
            l[v] = std::max(l[v], p);
        }
        if (g.degree(v) > 0 && l[v] - f[v] + 1 != g.degree(v))
            return fail(g, o, "neighbourhood of " + std::to_string(v + 1) + " is not consecutive", v);
    }
    for (int s = 0; s < 2; ++s) {
        const auto& list = o.order(s);
        for (std::size_t i = 1; i < list.size(); ++i) {
            Vertex a = list[i - 1], b = list[i];
            if (f[a] > f[b] || l[a] > l[b])
                return fail(g, o,
                            "first/last neighbours decrease from " + std::to_string(a + 1) +
                                " to " + std::to_string(b + 1),
                            b);
        }
    }
    return {};
}

OrderingCheck verify_chain_ordering(const Graph& g, const BipartiteOrdering& o) {
    if (!well_formed(g, o)) return {false, "ordering is not a bipartition of the vertices", {}};
    std::vector<char> mark(g.n(), 0);
    for (int s = 0; s < 2; ++s) {
        const auto& list = o.order(s);
        for (std::size_t i = 1; i < list.size(); ++i) {
            // X neighbourhoods grow along the order, Y neighbourhoods shrink.
            Vertex small = s == 0 ? list[i - 1] : list[i];
            Vertex big = s == 0 ? list[i] : list[i - 1];
            for (Vertex w : g.neighbors(big)) mark[w] = 1;
            bool nested = std::all_of(g.neighbors(small).begin(), g.neighbors(small).end(),
                                      [&](Vertex w) { return mark[w] != 0; });
            for (Vertex w : g.neighbors(big)) mark[w] = 0;
            if (!nested)
                return {false,
                        "neighbourhoods of " + std::to_string(small + 1) + " and " +
                            std::to_string(big + 1) + " are not nested",
                        {small, big}};
        }
    }
    return {};
}

namespace {

// BFS from s; each layer is sorted by (first neighbour in the previous layer,
// degree, id). When s is the first vertex of some strong ordering this
// reproduces that ordering up to swapping twins.
BipartiteOrdering layered_ordering(const Graph& g, const std::vector<int>& side, Vertex s) {
    const int n = g.n();
    std::vector<int> dist(n, -1), pos(n, -1);
    std::vector<Vertex> layer{s}, next_layer;
    std::vector<Vertex> order[2];
    std::vector<int> key(n, 0);
    dist[s] = 0;
    pos[s] = 0;
    order[side[s]].push_back(s);
    int d = 0;
    while (!layer.empty()) {
        next_layer.clear();
        for (Vertex v : layer)
            for (Vertex w : g.neighbors(v))
                if (dist[w] < 0) {
                    dist[w] = d + 1;
                    key[w] = pos[v];
                    next_layer.push_back(w);
                } else if (dist[w] == d + 1) {
                    key[w] = std::min(key[w], pos[v]);
                }
        std::sort(next_layer.begin(), next_layer.end(), [&](Vertex a, Vertex b) {
            if (key[a] != key[b]) return key[a] < key[b];
            if (g.degree(a) != g.degree(b)) return g.degree(a) < g.degree(b);
            return a < b;
        });
        for (Vertex w : next_layer) {
            pos[w] = static_cast<int>(order[side[w]].size());
            order[side[w]].push_back(w);
        }
        layer.swap(next_layer);
        ++d;
    }
    return BipartiteOrdering::make(g, std::move(order[0]), std::move(order[1]));
}

std::vector<Vertex> bfs_last_layer(const Graph& g, Vertex s) {
    std::vector<int> dist(g.n(), -1);
    std::vector<Vertex> queue{s};
    dist[s] = 0;
    for (std::size_t i = 0; i < queue.size(); ++i)
        for (Vertex w : g.neighbors(queue[i]))
            if (dist[w] < 0) {
                dist[w] = dist[queue[i]] + 1;
                queue.push_back(w);
            }
    int far = dist[queue.back()];
    std::vector<Vertex> out;
    for (Vertex v : queue)
        if (dist[v] == far) out.push_back(v);
    return out;
}

constexpr int kAllStartsLimit = 512;
constexpr std::size_t kFarCandidates = 32;
constexpr int kBruteForceLimit = 8;

std::vector<Vertex> start_candidates(const Graph& g) {
    std::vector<Vertex> out;
    if (g.n() <= kAllStartsLimit) {
        out.resize(g.n());
        std::iota(out.begin(), out.end(), 0);
        return out;
    }
    auto pick = [&](std::vector<Vertex> layer) {
        std::stable_sort(layer.begin(), layer.end(),
                         [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });
        if (layer.size() > kFarCandidates) layer.resize(kFarCandidates);
        return layer;
    };
    auto first = pick(bfs_last_layer(g, 0));
    auto second = pick(bfs_last_layer(g, first.front()));
    out = first;
    out.insert(out.end(), second.begin(), second.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

StrongOrdering compute_strong_ordering(const Graph& g) {
    auto side = bipartition(g);
    if (!side) throw NotBipartitePermutation("graph has an odd cycle", {});
    if (g.n() == 1) return BipartiteOrdering::make(g, {0}, {});

    OrderingCheck first_failure;
    for (Vertex s : start_candidates(g)) {
        BipartiteOrdering o = layered_ordering(g, *side, s);
        OrderingCheck c = verify_strong_ordering(g, o);
        if (c) return o;
        if (first_failure.ok) first_failure = std::move(c);
    }

    if (g.n() <= kBruteForceLimit) {
        std::vector<Vertex> x, y;
        for (Vertex v = 0; v < g.n(); ++v) ((*side)[v] == 0 ? x : y).push_back(v);
        do {
            std::vector<Vertex> yy = y;
            do {
                BipartiteOrdering o = BipartiteOrdering::make(g, x, yy);
                if (verify_strong_ordering(g, o)) return o;
            } while (std::next_permutation(yy.begin(), yy.end()));
        } while (std::next_permutation(x.begin(), x.end()));
    }
    throw NotBipartitePermutation("no strong ordering found (" + first_failure.violation + ")",
                                  first_failure.witness);
}

ChainOrdering compute_chain_ordering(const Graph& g) {
    auto side = bipartition(g);
    if (!side) throw NotChain("graph has an odd cycle", -1, -1);
    return compute_chain_ordering(g, *side);
}

ChainOrdering compute_chain_ordering(const Graph& g, const std::vector<int>& side) {
    if (static_cast<int>(side.size()) != g.n()) throw GraphError("side vector has wrong length");
    std::vector<Vertex> x, y;
    for (Vertex v = 0; v < g.n(); ++v) (side[v] == 0 ? x : y).push_back(v);
    std::stable_sort(x.begin(), x.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });
    std::stable_sort(y.begin(), y.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    BipartiteOrdering o = BipartiteOrdering::make(g, std::move(x), std::move(y));
    OrderingCheck c = verify_chain_ordering(g, o);
    if (!c) throw NotChain(c.violation, c.witness[0], c.witness[1]);
    return o;
}

}  // namespace mist
