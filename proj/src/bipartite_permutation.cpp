#include "mist/bipartite_permutation.hpp"

#include <algorithm>

namespace mist {

VertexType vertex_type(const StrongOrdering& o, Vertex v) {
    const int i = o.pos[v] + 1;
    const int j = o.last[v] + 1;
    if (o.side[v] == 0) return {j >= i, j >= i + 1};
    return {j >= i + 1, j >= i};
}

namespace {

// One side of the residual ordering while scanning. Ranks below `frontier`
// have been passed or deleted; every rank from `frontier` on is still live,
// so live counts need a prefix table only below the frontier.
struct Side {
    std::vector<Vertex> order;
    std::vector<int> lo, hi;  // neighbour interval, in ranks of the other side
    std::vector<char> dead;
    std::vector<int> prefix;  // prefix[r] = live ranks in [0, r], for r < frontier
    std::vector<Vertex> passed;
    int frontier = 0;

    int size() const { return static_cast<int>(order.size()); }
    bool exhausted() const { return frontier == size(); }
    Vertex current() const { return order[frontier]; }

    int live_upto(int r) const {
        if (r < 0) return 0;
        if (r < frontier) return prefix[r];
        return (frontier > 0 ? prefix[frontier - 1] : 0) + (r - frontier + 1);
    }
    int live_in(int a, int b) const { return a > b ? 0 : live_upto(b) - live_upto(a - 1); }
    int live_total() const { return live_upto(size() - 1); }

    void pass() {
        prefix.push_back(live_upto(frontier - 1) + 1);
        passed.push_back(order[frontier]);
        ++frontier;
    }
    void kill() {
        prefix.push_back(live_upto(frontier - 1));
        dead[frontier] = 1;
        ++frontier;
    }
};

class Scan {
public:
    Scan(const Graph& g, BpTrace* trace) : g_(g), trace_(trace), rank_(g.n(), -1), gone_(g.n(), 0) {}

    SpanningTree run(std::vector<Vertex> x, std::vector<Vertex> y) {
        edges_.reserve(g_.n() - 1);
        load(std::move(x), std::move(y));
        if (!phase_one()) {
            restart_for_phase_two();
            phase_two();
        }
        try {
            return SpanningTree::build(g_, std::move(edges_));
        } catch (const GraphError& e) {
            throw InvariantViolation(std::string("scan produced an invalid tree: ") + e.what());
        }
    }

private:
    void load(std::vector<Vertex> x, std::vector<Vertex> y) {
        side_[0] = Side{};
        side_[1] = Side{};
        side_[0].order = std::move(x);
        side_[1].order = std::move(y);
        for (auto& s : side_)
            for (int r = 0; r < s.size(); ++r) rank_[s.order[r]] = r;
        for (auto& s : side_) {
            s.lo.assign(s.size(), -1);
            s.hi.assign(s.size(), -1);
            s.dead.assign(s.size(), 0);
            s.prefix.reserve(s.size());
            s.passed.reserve(s.size());
            for (int r = 0; r < s.size(); ++r) {
                for (Vertex w : g_.neighbors(s.order[r])) {
                    if (gone_[w]) continue;
                    int q = rank_[w];
                    if (s.lo[r] < 0 || q < s.lo[r]) s.lo[r] = q;
                    s.hi[r] = std::max(s.hi[r], q);
                }
                if (s.lo[r] < 0) throw InvariantViolation("residual graph has an isolated vertex");
            }
        }
    }

    // Current index (1-based) of the last live neighbour of side s's
    // current vertex.
    int current_last(int s) const {
        const Side& me = side_[s];
        const Side& other = side_[1 - s];
        int r = me.frontier;
        if (other.live_in(me.lo[r], me.hi[r]) == 0)
            throw InvariantViolation("vertex " + std::to_string(me.current() + 1) +
                                     " has no live neighbour");
        return other.live_upto(me.hi[r]);
    }

    // Non-edges are caught when the tree is built.
    void add_edge(Vertex a, Vertex b) { edges_.emplace_back(a, b); }

    // a1 b1 a2 b2 ...
    void emit_zigzag(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
        if (a.size() != b.size() && a.size() != b.size() + 1)
            throw InvariantViolation("residual sides cannot alternate in one path");
        for (std::size_t i = 0; i < b.size(); ++i) {
            add_edge(a[i], b[i]);
            if (i + 1 < a.size()) add_edge(b[i], a[i + 1]);
        }
    }

    void record(Vertex v, Vertex support, int phase, bool terminal) {
        if (trace_) trace_->encounters.push_back({v, support, phase, terminal});
    }

    // Deletes the current vertex of side s as a leaf hanging from `support`.
    void detach(int s, Vertex support, int phase) {
        Side& me = side_[s];
        Vertex v = me.current();
        int r = me.frontier;
        add_edge(support, v);
        record(v, support, phase, false);
        me.kill();
        gone_[v] = 1;
        check_still_connected(s, r);
    }

    static bool share_neighbour(const Side& a_side, int a, int b, const Side& other) {
        int lo = std::max(a_side.lo[a], a_side.lo[b]);
        int hi = std::min(a_side.hi[a], a_side.hi[b]);
        return other.live_in(lo, hi) > 0;
    }

    // With monotone intervals the residual graph is connected iff every
    // vertex keeps a live neighbour and consecutive live vertices of a side
    // share one. Only pairs around the deleted rank r can have changed.
    void check_still_connected(int s, int r) const {
        const Side& me = side_[s];
        const Side& other = side_[1 - s];
        int prev = -1;
        for (int q = me.lo[r]; q <= me.hi[r]; ++q) {
            if (other.dead[q]) continue;
            if (me.live_in(other.lo[q], other.hi[q]) == 0)
                throw InvariantViolation("deletion isolated vertex " + std::to_string(other.order[q] + 1));
            if (prev >= 0 && !share_neighbour(other, prev, q, me))
                throw InvariantViolation("deletion disconnected the residual graph");
            prev = q;
        }
        if (!me.passed.empty() && r + 1 < me.size() &&
            !share_neighbour(me, rank_[me.passed.back()], r + 1, other))
            throw InvariantViolation("deletion disconnected the residual graph");
    }

    std::vector<Vertex> with(std::vector<Vertex> list, Vertex v) {
        list.push_back(v);
        return list;
    }

    // Scan x1, y1, x2, y2, ... for the first vertex that is not type 1.
    // Returns false when the search must restart in phase two.
    bool phase_one() {
        Side& xs = side_[0];
        Side& ys = side_[1];
        // x_i y_{i+1} in E for every pair passed so far.
        bool shifted = true;
        int turn = 0;
        while (true) {
            Side& me = side_[turn];
            if (me.exhausted()) throw InvariantViolation("scan ran past the end of a side");
            const Vertex v = me.current();
            const int i = static_cast<int>(me.passed.size()) + 1;
            const int j = current_last(turn);

            if (turn == 0) {
                if (j >= i) {
                    me.pass();
                    turn = 1;
                    continue;
                }
                // v = x_{k+1}
                const int k = i - 1;
                if (k < 1 || static_cast<int>(ys.passed.size()) != k)
                    throw InvariantViolation("unexpected scan position at x encounter");
                if (i != xs.live_total()) {
                    detach(0, ys.passed.back(), 1);
                    continue;
                }
                if (ys.live_total() != k) throw InvariantViolation("unvisited y left at final x");
                record(v, -1, 1, true);
                emit_zigzag(with(xs.passed, v), ys.passed);
                return true;
            }

            const bool pair_ok = i == 1 || g_.adjacent(xs.passed[i - 2], v);
            if (j >= i + 1) {
                shifted = shifted && pair_ok;
                me.pass();
                turn = 0;
                continue;
            }
            // v = y_k
            const int k = i;
            if (static_cast<int>(xs.passed.size()) != k)
                throw InvariantViolation("unexpected scan position at y encounter");
            if (shifted && pair_ok) return false;
            if (k != ys.live_total()) {
                detach(1, xs.passed.back(), 1);
                continue;
            }
            if (xs.live_total() != k) throw InvariantViolation("unvisited x left at final y");
            record(v, -1, 1, true);
            emit_zigzag(xs.passed, with(ys.passed, v));
            return true;
        }
    }

    void restart_for_phase_two() {
        std::vector<Vertex> order[2];
        for (int s = 0; s < 2; ++s)
            for (int r = 0; r < side_[s].size(); ++r)
                if (!side_[s].dead[r] || r >= side_[s].frontier) order[s].push_back(side_[s].order[r]);
        if (trace_) {
            trace_->switched = true;
            trace_->switch_x = order[0];
            trace_->switch_y = order[1];
        }
        load(std::move(order[0]), std::move(order[1]));
    }

    // Scan y1, x1, y2, x2, ... for the first vertex that is not type 2.
    void phase_two() {
        Side& xs = side_[0];
        Side& ys = side_[1];
        // y_i x_{i+1} in E for every pair passed so far.
        bool shifted = true;
        int turn = 1;
        while (true) {
            Side& me = side_[turn];
            if (me.exhausted()) throw InvariantViolation("scan ran past the end of a side");
            const Vertex v = me.current();
            const int i = static_cast<int>(me.passed.size()) + 1;
            const int j = current_last(turn);

            if (turn == 1) {
                if (j >= i) {
                    me.pass();
                    turn = 0;
                    continue;
                }
                // v = y_{k+1}
                const int k = i - 1;
                if (k < 1 || static_cast<int>(xs.passed.size()) != k)
                    throw InvariantViolation("unexpected scan position at y encounter");
                if (i != ys.live_total()) {
                    detach(1, xs.passed.back(), 2);
                    continue;
                }
                if (xs.live_total() != k) throw InvariantViolation("unvisited x left at final y");
                record(v, -1, 2, true);
                emit_zigzag(with(ys.passed, v), xs.passed);
                return;
            }

            const bool pair_ok = i == 1 || g_.adjacent(ys.passed[i - 2], v);
            if (j >= i + 1) {
                shifted = shifted && pair_ok;
                me.pass();
                turn = 1;
                continue;
            }
            // v = x_k
            const int k = i;
            if (static_cast<int>(ys.passed.size()) != k)
                throw InvariantViolation("unexpected scan position at x encounter");
            if (k != xs.live_total()) {
                // The first scan already ruled this situation out.
                if (shifted && pair_ok)
                    throw InvariantViolation("second scan met an x with y_i x_{i+1} edges throughout");
                detach(0, ys.passed.back(), 2);
                continue;
            }
            if (ys.live_total() != k) throw InvariantViolation("unvisited y left at final x");
            record(v, -1, 2, true);
            emit_zigzag(ys.passed, with(xs.passed, v));
            return;
        }
    }

    const Graph& g_;
    BpTrace* trace_;
    std::vector<int> rank_;
    std::vector<char> gone_;
    Side side_[2];
    std::vector<Edge> edges_;
};

}  // namespace

SpanningTree solve_bp(const Graph& g, const StrongOrdering& o, BpTrace* trace) {
    OrderingCheck check = verify_strong_ordering(g, o);
    if (!check) throw GraphError("not a strong ordering: " + check.violation);
    if (g.n() == 1) return SpanningTree::build(g, {});
    Scan scan(g, trace);
    return scan.run(o.x, o.y);
}

}  // namespace mist
