#include "mist/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "mist/block_cactus.hpp"

namespace mist {

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    // Largest multiple of bound representable, to reject the biased tail.
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t r;
    do r = next();
    while (r >= limit);
    return r % bound;
}

namespace {

struct Draft {
    int n = 0;
    std::vector<Edge> edges;
    std::vector<Vertex> x, y;  // only for the bipartite classes
};

GeneratedGraph finish(Draft d, Rng& rng, bool bipartite, bool shuffle) {
    std::vector<Vertex> perm(d.n);
    std::iota(perm.begin(), perm.end(), 0);
    if (shuffle) rng.shuffle(perm);
    for (Edge& e : d.edges) e = Edge(perm[e.u], perm[e.v]);
    GeneratedGraph out{Graph::from_edges(d.n, d.edges), std::nullopt};
    if (bipartite) {
        for (Vertex& v : d.x) v = perm[v];
        for (Vertex& v : d.y) v = perm[v];
        out.ordering = BipartiteOrdering::make(out.graph, std::move(d.x), std::move(d.y));
    }
    return out;
}

Draft block_draft(int n, double density, Rng& rng) {
    Draft d{n, {}, {}, {}};
    int count = 1;
    while (count < n) {
        Vertex anchor = static_cast<Vertex>(rng.below(count));
        int fresh = 1;
        while (fresh < 4 && rng.coin(density)) ++fresh;
        fresh = std::min(fresh, n - count);
        std::vector<Vertex> clique{anchor};
        for (int i = 0; i < fresh; ++i) clique.push_back(count++);
        for (std::size_t a = 0; a < clique.size(); ++a)
            for (std::size_t b = a + 1; b < clique.size(); ++b) d.edges.emplace_back(clique[a], clique[b]);
    }
    return d;
}

Draft cactus_draft(int n, double density, Rng& rng) {
    Draft d{n, {}, {}, {}};
    int count = 1;
    while (count < n) {
        Vertex anchor = static_cast<Vertex>(rng.below(count));
        int len = rng.coin(density) ? rng.range(3, 6) : 2;
        len = std::min(len, n - count + 1);
        Vertex prev = anchor;
        for (int i = 1; i < len; ++i) {
            d.edges.emplace_back(prev, count);
            prev = count++;
        }
        if (len >= 3) d.edges.emplace_back(prev, anchor);
    }
    return d;
}

void cotree_edges(std::vector<Vertex>& verts, int lo, int hi, bool join, double density, Rng& rng,
                  std::vector<Edge>& edges) {
    if (hi - lo < 2) return;
    int mid = lo + rng.range(1, hi - lo - 1);
    if (join)
        for (int a = lo; a < mid; ++a)
            for (int b = mid; b < hi; ++b) edges.emplace_back(verts[a], verts[b]);
    cotree_edges(verts, lo, mid, rng.coin(density), density, rng, edges);
    cotree_edges(verts, mid, hi, rng.coin(density), density, rng, edges);
}

Draft cograph_draft(int n, double density, Rng& rng) {
    Draft d{n, {}, {}, {}};
    std::vector<Vertex> verts(n);
    std::iota(verts.begin(), verts.end(), 0);
    rng.shuffle(verts);
    cotree_edges(verts, 0, n, true, density, rng, d.edges);
    return d;
}

Draft chain_draft(int n, double density, Rng& rng) {
    Draft d{n, {}, {}, {}};
    if (n == 1) {
        d.x = {0};
        return d;
    }
    const int nx = rng.range(1, n - 1);
    const int ny = n - nx;
    const int spread = std::clamp(static_cast<int>(std::ceil(2.0 * density * ny)), 1, ny);
    std::vector<int> deg(nx);
    for (int& v : deg) v = rng.range(1, spread);
    std::sort(deg.begin(), deg.end());
    deg.back() = ny;
    for (int i = 0; i < nx; ++i) {
        d.x.push_back(i);
        for (int j = 0; j < deg[i]; ++j) d.edges.emplace_back(i, nx + j);
    }
    for (int j = 0; j < ny; ++j) d.y.push_back(nx + j);
    return d;
}

// Consecutive small chain graphs, each linked to the next by one edge, then
// random edge additions that keep both interval ends monotone.
Draft bp_draft(int n, double density, Rng& rng) {
    Draft d{n, {}, {}, {}};
    if (n == 1) {
        d.x = {0};
        return d;
    }
    std::vector<int> f, l;  // neighbour interval of x_i in Y ranks
    int ny = 0, rem = n;
    while (rem > 0) {
        if (rem == 1) {
            l.back() = ny++;
            --rem;
            break;
        }
        int a = rng.range(1, 3), b = rng.range(1, 3);
        if (a + b > rem) {
            a = rng.range(1, rem - 1);
            b = rem - a;
        }
        if (!l.empty()) l.back() = ny;
        std::vector<int> deg(a);
        for (int& v : deg) v = rng.range(1, b);
        std::sort(deg.begin(), deg.end());
        deg.back() = b;
        for (int v : deg) {
            f.push_back(ny);
            l.push_back(ny + v - 1);
        }
        ny += b;
        rem -= a + b;
    }
    const int nx = static_cast<int>(f.size());
    const int additions = static_cast<int>(std::lround(density * n));
    for (int t = 0; t < additions; ++t) {
        int i = static_cast<int>(rng.below(nx));
        if (rng.coin(0.5)) {
            if (l[i] + 1 < ny && (i + 1 == nx || l[i] + 1 <= l[i + 1])) ++l[i];
        } else {
            if (f[i] > 0 && (i == 0 || f[i] - 1 >= f[i - 1])) --f[i];
        }
    }
    for (int i = 0; i < nx; ++i) {
        d.x.push_back(i);
        for (int j = f[i]; j <= l[i]; ++j) d.edges.emplace_back(i, nx + j);
    }
    for (int j = 0; j < ny; ++j) d.y.push_back(nx + j);
    return d;
}

void certify(const GenSpec& spec, const GeneratedGraph& out) {
    const Graph& g = out.graph;
    try {
        switch (spec.cls) {
            case GraphClass::block:
            case GraphClass::cactus:
                label_blocks(g, block_decompose(g), spec.cls);
                return;
            case GraphClass::cograph:
                build_cotree(g);
                return;
            case GraphClass::chain: {
                OrderingCheck c = verify_chain_ordering(g, *out.ordering);
                if (!c) throw GraphError(c.violation);
                return;
            }
            case GraphClass::bipartite_permutation: {
                OrderingCheck c = verify_strong_ordering(g, *out.ordering);
                if (!c) throw GraphError(c.violation);
                return;
            }
        }
    } catch (const GraphError& e) {
        throw InvariantViolation("generated " + std::string(to_string(spec.cls)) +
                                 " instance fails its recognizer: " + e.what());
    }
}

}  // namespace

GeneratedGraph generate(const GenSpec& spec) {
    if (spec.n < 1) throw GraphError("generator needs n >= 1");
    Rng rng(spec.seed);
    Draft d;
    bool bipartite = false;
    switch (spec.cls) {
        case GraphClass::block: d = block_draft(spec.n, spec.density, rng); break;
        case GraphClass::cactus: d = cactus_draft(spec.n, spec.density, rng); break;
        case GraphClass::cograph: d = cograph_draft(spec.n, spec.density, rng); break;
        case GraphClass::chain:
            d = chain_draft(spec.n, spec.density, rng);
            bipartite = true;
            break;
        case GraphClass::bipartite_permutation:
            d = bp_draft(spec.n, spec.density, rng);
            bipartite = true;
            break;
    }
    GeneratedGraph out = finish(std::move(d), rng, bipartite, spec.shuffle_ids);
    certify(spec, out);
    return out;
}

Graph gen_class(const GenSpec& spec) { return generate(spec).graph; }

Graph family_block_cactus(int k) {
    if (k < 1) throw GraphError("family needs k >= 1");
    auto id = [](int i, int j) { return 5 * i + j - 1; };  // x_j of copy i (0-based)
    std::vector<Edge> edges;
    std::vector<std::string> labels(5 * k);
    for (int i = 0; i < k; ++i) {
        for (int j = 1; j <= 5; ++j) labels[id(i, j)] = "x" + std::to_string(j) + "_" + std::to_string(i + 1);
        edges.emplace_back(id(i, 1), id(i, 2));
        edges.emplace_back(id(i, 2), id(i, 3));
        edges.emplace_back(id(i, 3), id(i, 1));
        edges.emplace_back(id(i, 3), id(i, 4));
        edges.emplace_back(id(i, 4), id(i, 5));
        edges.emplace_back(id(i, 5), id(i, 3));
        if (i + 1 < k) edges.emplace_back(id(i, 3), id(i + 1, 3));
    }
    return Graph::from_edges(5 * k, edges, std::move(labels));
}

GeneratedGraph family_bp(int k) {
    if (k < 1) throw GraphError("family needs k >= 1");
    std::vector<Edge> edges;
    std::vector<std::string> labels(5 * k);
    std::vector<Vertex> xs, ys;
    std::vector<std::vector<Vertex>> px(k), py(k);
    for (int i = 0; i < k; ++i) {
        const bool odd = i % 2 == 0;  // copy i + 1 in 1-based numbering
        const int nx = odd ? 3 : 2;
        const int base = 5 * i;
        for (int j = 0; j < 5; ++j) {
            const bool is_x = j < nx;
            const int idx = is_x ? j + 1 : j - nx + 1;
            labels[base + j] = (is_x ? "x" : "y") + std::to_string(idx) + "_" + std::to_string(i + 1);
            (is_x ? px[i] : py[i]).push_back(base + j);
        }
        for (Vertex a : px[i])
            for (Vertex b : py[i]) edges.emplace_back(a, b);
        xs.insert(xs.end(), px[i].begin(), px[i].end());
        ys.insert(ys.end(), py[i].begin(), py[i].end());
    }
    for (int i = 0; i + 1 < k; ++i) {
        if (i % 2 == 0)
            edges.emplace_back(py[i][1], px[i + 1][0]);  // y2 - next x1
        else
            edges.emplace_back(px[i][1], py[i + 1][0]);  // x2 - next y1
    }
    GeneratedGraph out{Graph::from_edges(5 * k, edges, std::move(labels)), std::nullopt};
    out.ordering = BipartiteOrdering::make(out.graph, std::move(xs), std::move(ys));
    OrderingCheck c = verify_strong_ordering(out.graph, *out.ordering);
    if (!c) throw InvariantViolation("bipartite permutation family lost its strong ordering: " + c.violation);
    return out;
}

GeneratedGraph chain_from_degrees(const std::vector<int>& d, int ny) {
    const int nx = static_cast<int>(d.size());
    if (nx < 1 || ny < 1 || !std::is_sorted(d.begin(), d.end()) || d.front() < 1 || d.back() != ny)
        throw GraphError("degree sequence must be nondecreasing, positive, and end at the y count");
    std::vector<Edge> edges;
    std::vector<std::string> labels(nx + ny);
    std::vector<Vertex> xs(nx), ys(ny);
    for (int i = 0; i < nx; ++i) {
        xs[i] = i;
        labels[i] = "x" + std::to_string(i + 1);
        for (int j = 0; j < d[i]; ++j) edges.emplace_back(i, nx + j);
    }
    for (int j = 0; j < ny; ++j) {
        ys[j] = nx + j;
        labels[nx + j] = "y" + std::to_string(j + 1);
    }
    GeneratedGraph out{Graph::from_edges(nx + ny, edges, std::move(labels)), std::nullopt};
    out.ordering = BipartiteOrdering::make(out.graph, std::move(xs), std::move(ys));
    return out;
}

}  // namespace mist
