#include "mist/oracle.hpp"

#include <algorithm>
#include <bit>
#include <vector>

#include "dsu.hpp"

namespace mist {

namespace {

class TreeEnumerator {
public:
    TreeEnumerator(const Graph& g, const std::function<void(std::span<const Edge>)>& visit,
                   const OracleBudget& budget)
        : g_(g), edges_(g.edges()), visit_(visit), budget_(budget), sets_(g.n(), true),
          start_(std::chrono::steady_clock::now()) {}

    std::uint64_t run() {
        if (g_.n() == 1) {
            visit_({});
            return 1;
        }
        chosen_.reserve(g_.n() - 1);
        recurse(0);
        return count_;
    }

private:
    void recurse(std::size_t i) {
        if (static_cast<int>(chosen_.size()) == g_.n() - 1) {
            if (++count_ > budget_.max_spanning_trees)
                throw BudgetExceeded("more than " + std::to_string(budget_.max_spanning_trees) +
                                     " spanning trees");
            visit_(chosen_);
            return;
        }
        if ((++steps_ & 0xfff) == 0 && std::chrono::steady_clock::now() - start_ > budget_.time_cap)
            throw BudgetExceeded("spanning tree enumeration exceeded its time cap");
        if (edges_.size() - i < static_cast<std::size_t>(g_.n() - 1) - chosen_.size()) return;

        const Edge e = edges_[i];
        if (sets_.unite(e.u, e.v)) {
            chosen_.push_back(e);
            recurse(i + 1);
            chosen_.pop_back();
            sets_.undo();
        }
        if (still_connected_without(i)) recurse(i + 1);
    }

    // Can the chosen edges plus edges after i still span the graph?
    bool still_connected_without(std::size_t i) {
        detail::DisjointSets probe(g_.n());
        int parts = g_.n();
        for (const Edge& e : chosen_)
            if (probe.unite(e.u, e.v)) --parts;
        for (std::size_t k = i + 1; k < edges_.size() && parts > 1; ++k)
            if (probe.unite(edges_[k].u, edges_[k].v)) --parts;
        return parts == 1;
    }

    const Graph& g_;
    const std::vector<Edge>& edges_;
    const std::function<void(std::span<const Edge>)>& visit_;
    OracleBudget budget_;
    detail::DisjointSets sets_;
    std::vector<Edge> chosen_;
    std::uint64_t count_ = 0;
    std::uint64_t steps_ = 0;
    std::chrono::steady_clock::time_point start_;
};

}  // namespace

std::uint64_t enumerate_spanning_trees(const Graph& g,
                                       const std::function<void(std::span<const Edge>)>& visit,
                                       const OracleBudget& budget) {
    if (g.n() > budget.max_n)
        throw BudgetExceeded("n = " + std::to_string(g.n()) + " exceeds oracle limit " +
                             std::to_string(budget.max_n));
    return TreeEnumerator(g, visit, budget).run();
}

std::uint64_t matrix_tree_count(const Graph& g) {
    const int k = g.n() - 1;
    if (k == 0) return 1;
    std::vector<std::vector<__int128>> a(k, std::vector<__int128>(k, 0));
    for (Vertex v = 0; v < k; ++v) {
        a[v][v] = g.degree(v);
        for (Vertex w : g.neighbors(v))
            if (w < k) a[v][w] = -1;
    }
    // Bareiss elimination; every division is exact.
    __int128 prev = 1;
    int sign = 1;
    for (int p = 0; p < k - 1; ++p) {
        if (a[p][p] == 0) {
            int swap_row = p + 1;
            while (swap_row < k && a[swap_row][p] == 0) ++swap_row;
            if (swap_row == k) return 0;
            std::swap(a[p], a[swap_row]);
            sign = -sign;
        }
        for (int i = p + 1; i < k; ++i)
            for (int j = p + 1; j < k; ++j) a[i][j] = (a[i][j] * a[p][p] - a[i][p] * a[p][j]) / prev;
        prev = a[p][p];
    }
    __int128 det = a[k - 1][k - 1] * sign;
    if (det < 0) throw InvariantViolation("negative spanning tree count");
    return static_cast<std::uint64_t>(det);
}

namespace {

constexpr int kHardMistLimit = 16;
constexpr std::int16_t kNone = -1000;

// For vertex v outside T, c(v, T) is the best internal count of the
// vertices of T when T is split into subtrees hung below v (v itself not
// counted). child(v, T1) is the best value of one such subtree: its root w
// is a neighbour of v and counts as internal when T1 has more than one
// vertex. Rooting the whole tree at a leaf r gives Opt = max_r child(r, V-r).
class MistDp {
public:
    explicit MistDp(const Graph& g) : g_(g), n_(g.n()), full_((1u << n_) - 1) {
        adj_.assign(n_, 0);
        for (const Edge& e : g.edges()) {
            adj_[e.u] |= 1u << e.v;
            adj_[e.v] |= 1u << e.u;
        }
        const std::size_t cells = static_cast<std::size_t>(full_ + 1) * n_;
        c_.assign(cells, kNone);
        c_pick_.assign(cells, 0);
        child_.assign(cells, kNone);
        child_pick_.assign(cells, -1);
        for (int v = 0; v < n_; ++v) c_[at(0, v)] = 0;
    }

    OracleMist solve() {
        if (n_ == 1) return {0, SpanningTree::build(g_, {})};
        for (unsigned mask = 1; mask < full_; ++mask) fill(mask);
        int best = kNone, root = -1;
        for (int r = 0; r < n_; ++r) {
            int val = child_[at(full_ ^ (1u << r), r)];
            if (val > best) {
                best = val;
                root = r;
            }
        }
        std::vector<Edge> edges;
        unsigned rest = full_ ^ (1u << root);
        Vertex w = child_pick_[at(rest, root)];
        edges.emplace_back(root, w);
        collect(w, rest ^ (1u << w), edges);
        OracleMist out{best, SpanningTree::build(g_, std::move(edges))};
        if (out.witness.internal_count() != best)
            throw InvariantViolation("subset DP witness disagrees with its value");
        return out;
    }

private:
    std::size_t at(unsigned mask, int v) const { return static_cast<std::size_t>(mask) * n_ + v; }

    void fill(unsigned mask) {
        const int big = std::popcount(mask) >= 2 ? 1 : 0;
        for (int v = 0; v < n_; ++v) {
            if (mask >> v & 1) continue;
            std::int16_t best = kNone;
            std::int8_t pick = -1;
            for (unsigned cand = adj_[v] & mask; cand; cand &= cand - 1) {
                int w = std::countr_zero(cand);
                std::int16_t sub = c_[at(mask ^ (1u << w), w)];
                if (sub == kNone) continue;
                if (sub + big > best) {
                    best = static_cast<std::int16_t>(sub + big);
                    pick = static_cast<std::int8_t>(w);
                }
            }
            child_[at(mask, v)] = best;
            child_pick_[at(mask, v)] = pick;
        }
        const unsigned low = mask & (~mask + 1);
        const unsigned rest = mask ^ low;
        for (int v = 0; v < n_; ++v) {
            if (mask >> v & 1) continue;
            std::int16_t best = kNone;
            unsigned pick = 0;
            for (unsigned sub = rest;; sub = (sub - 1) & rest) {
                unsigned part = sub | low;
                std::int16_t a = child_[at(part, v)];
                if (a != kNone) {
                    std::int16_t b = c_[at(mask ^ part, v)];
                    if (b != kNone && a + b > best) {
                        best = static_cast<std::int16_t>(a + b);
                        pick = part;
                    }
                }
                if (sub == 0) break;
            }
            c_[at(mask, v)] = best;
            c_pick_[at(mask, v)] = pick;
        }
    }

    void collect(Vertex v, unsigned below, std::vector<Edge>& edges) const {
        while (below) {
            unsigned part = c_pick_[at(below, v)];
            Vertex w = child_pick_[at(part, v)];
            edges.emplace_back(v, w);
            collect(w, part ^ (1u << w), edges);
            below ^= part;
        }
    }

    const Graph& g_;
    int n_;
    unsigned full_;
    std::vector<unsigned> adj_;
    std::vector<std::int16_t> c_;
    std::vector<unsigned> c_pick_;
    std::vector<std::int16_t> child_;
    std::vector<std::int8_t> child_pick_;
};

}  // namespace

OracleMist oracle_mist(const Graph& g, const OracleBudget& budget) {
    if (g.n() > std::min(budget.max_n, kHardMistLimit))
        throw BudgetExceeded("n = " + std::to_string(g.n()) + " exceeds oracle limit " +
                             std::to_string(std::min(budget.max_n, kHardMistLimit)));
    return MistDp(g).solve();
}

int oracle_mist_by_enumeration(const Graph& g, const OracleBudget& budget) {
    int best = 0;
    std::vector<int> deg(g.n());
    enumerate_spanning_trees(
        g,
        [&](std::span<const Edge> edges) {
            std::fill(deg.begin(), deg.end(), 0);
            for (const Edge& e : edges) {
                ++deg[e.u];
                ++deg[e.v];
            }
            best = std::max(best, static_cast<int>(std::count_if(
                                      deg.begin(), deg.end(), [](int d) { return d >= 2; })));
        },
        budget);
    return best;
}

int oracle_max_pathcover_edges(const Graph& g, int max_n) {
    const int n = g.n();
    if (n > std::min(max_n, 22))
        throw BudgetExceeded("n = " + std::to_string(n) + " exceeds path cover oracle limit");
    const unsigned full = (1u << n) - 1;
    std::vector<unsigned> adj(n, 0);
    for (const Edge& e : g.edges()) {
        adj[e.u] |= 1u << e.v;
        adj[e.v] |= 1u << e.u;
    }
    // dp[mask][v]: fewest paths covering mask with the last path ending at v.
    constexpr std::uint8_t kInf = 0xff;
    std::vector<std::uint8_t> dp(static_cast<std::size_t>(full + 1) * n, kInf);
    auto at = [n](unsigned mask, int v) { return static_cast<std::size_t>(mask) * n + v; };
    for (int v = 0; v < n; ++v) dp[at(1u << v, v)] = 1;
    std::uint8_t answer = kInf;
    for (unsigned mask = 1; mask <= full; ++mask) {
        std::uint8_t best = kInf;
        for (int v = 0; v < n; ++v) best = std::min(best, dp[at(mask, v)]);
        if (mask == full) {
            answer = best;
            break;
        }
        for (int v = 0; v < n; ++v) {
            std::uint8_t cur = dp[at(mask, v)];
            if (cur == kInf) continue;
            for (unsigned cand = adj[v] & ~mask; cand; cand &= cand - 1) {
                int w = std::countr_zero(cand);
                auto& slot = dp[at(mask | 1u << w, w)];
                slot = std::min(slot, cur);
            }
        }
        for (unsigned cand = full & ~mask; cand; cand &= cand - 1) {
            int w = std::countr_zero(cand);
            auto& slot = dp[at(mask | 1u << w, w)];
            slot = std::min<std::uint8_t>(slot, best + 1);
        }
    }
    return n - answer;
}

}  // namespace mist
