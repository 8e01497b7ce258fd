#include "mist/verify.hpp"

#include <algorithm>

#include "mist/block_cactus.hpp"
#include "mist/chain.hpp"
#include "mist/cograph.hpp"
#include "mist/oracle.hpp"
#include "mist/solve.hpp"

namespace mist {

std::string_view to_string(Check c) {
    switch (c) {
        case Check::oracle_equivalence: return "oracle-equivalence";
        case Check::upper_bound: return "upper-bound";
        case Check::bad_block_formula: return "bad-block-formula";
        case Check::leaf_per_bad_block: return "leaf-per-bad-block";
        case Check::cograph_equality: return "cograph-equality";
        case Check::chain_gap: return "chain-gap";
        case Check::pathcover_optimality: return "pathcover-optimality";
        case Check::stitch_bound: return "stitch-bound";
        case Check::solver_ran: return "solver-ran";
    }
    return "?";
}

namespace {

std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

class Recorder {
public:
    explicit Recorder(InstanceReport& r) : r_(r) {}

    void expect(Check c, bool ok, const std::string& detail) {
        ++r_.performed[static_cast<int>(c)];
        if (!ok) r_.failures.emplace_back(c, detail);
    }

private:
    InstanceReport& r_;
};

std::string pair_str(int a, int b) { return std::to_string(a) + " vs " + std::to_string(b); }

void check_leaves_in_bad_blocks(const Graph& g, const BlockCactusResult& res, Recorder& rec) {
    std::vector<std::span<const Vertex>> bad;
    for (int b = 0; b < res.blocks.size(); ++b)
        if (!res.labels.good[b]) bad.push_back(res.blocks.blocks[b]);
    std::vector<int> deg(g.n());
    std::uint64_t trees = 0, misses = 0;
    enumerate_spanning_trees(g, [&](std::span<const Edge> edges) {
        ++trees;
        std::fill(deg.begin(), deg.end(), 0);
        for (const Edge& e : edges) {
            ++deg[e.u];
            ++deg[e.v];
        }
        for (const auto& block : bad)
            if (std::none_of(block.begin(), block.end(), [&](Vertex v) { return deg[v] == 1; })) ++misses;
    });
    rec.expect(Check::leaf_per_bad_block, misses == 0,
               std::to_string(misses) + " of " + std::to_string(trees) + " trees miss a bad block");
}

}  // namespace

GeneratedGraph suite_instance(GraphClass cls, std::uint64_t seed, int index, const VerifyOptions& opt) {
    std::uint64_t s = splitmix(splitmix(seed) ^ (static_cast<std::uint64_t>(cls) << 32) ^
                               static_cast<std::uint64_t>(index));
    Rng rng(s);
    GenSpec spec;
    spec.cls = cls;
    spec.n = rng.range(opt.min_n, opt.max_n);
    spec.density = 0.2 + 0.7 * rng.real();
    spec.seed = rng.next();
    return generate(spec);
}

InstanceReport check_instance(GraphClass cls, const GeneratedGraph& inst, const VerifyOptions& opt) {
    const Graph& g = inst.graph;
    InstanceReport r;
    r.cls = cls;
    r.n = g.n();
    Recorder rec(r);
    try {
        OracleBudget budget;
        budget.max_n = std::max(opt.max_n, 11);
        r.oracle = oracle_mist(g, budget).count;
        r.oracle_pc = oracle_max_pathcover_edges(g);
        if (g.n() >= 2)
            rec.expect(Check::upper_bound, r.oracle <= r.oracle_pc - 1, pair_str(r.oracle, r.oracle_pc));

        switch (cls) {
            case GraphClass::block:
            case GraphClass::cactus: {
                BlockCactusResult res = solve_block_cactus_detailed(g, cls);
                r.solver = res.tree.internal_count();
                if (res.blocks.size() >= 2) {
                    const int bound = g.n() - res.labels.bad_count;
                    rec.expect(Check::bad_block_formula, r.oracle == bound && r.solver == bound,
                               "oracle " + std::to_string(r.oracle) + ", n - bad " + std::to_string(bound));
                    if (g.n() <= opt.leaf_check_max_n) check_leaves_in_bad_blocks(g, res, rec);
                }
                break;
            }
            case GraphClass::cograph: {
                CographResult res = solve_cograph_detailed(g, build_cotree(g));
                r.solver = res.tree.internal_count();
                r.class_pc = res.cover.cover.edge_count();
                rec.expect(Check::pathcover_optimality, r.class_pc == r.oracle_pc, pair_str(r.class_pc, r.oracle_pc));
                if (g.n() >= 2)
                    rec.expect(Check::cograph_equality, r.oracle == r.oracle_pc - 1, pair_str(r.oracle, r.oracle_pc));
                break;
            }
            case GraphClass::bipartite_permutation: {
                r.solver = solve_graph(g, cls, inst.ordering).tree.internal_count();
                break;
            }
            case GraphClass::chain: {
                const ChainOrdering& o = *inst.ordering;
                ContiguousPathCover pc = chain_path_cover(g, o);
                r.class_pc = pc.cover.edge_count();
                r.solver = solve_graph(g, cls, o).tree.internal_count();
                rec.expect(Check::pathcover_optimality, r.class_pc == r.oracle_pc, pair_str(r.class_pc, r.oracle_pc));
                if (g.n() >= 2) {
                    const int gap = r.oracle_pc - r.oracle;
                    rec.expect(Check::chain_gap, gap == 1 || gap == 2, "gap " + std::to_string(gap));
                }
                const int stitched = stitch_path_cover(g, pc, o).tree.internal_count();
                rec.expect(Check::stitch_bound, stitched >= r.class_pc - 2, pair_str(stitched, r.class_pc));
                break;
            }
        }
        if (opt.break_solver) ++r.solver;
        rec.expect(Check::oracle_equivalence, r.solver == r.oracle, pair_str(r.solver, r.oracle));
        rec.expect(Check::solver_ran, true, "");
    } catch (const std::exception& e) {
        rec.expect(Check::solver_ran, false, e.what());
    }
    return r;
}

VerifyReport run_verification(const VerifyOptions& opt,
                              const std::function<void(const InstanceReport&)>& on_instance) {
    VerifyReport out;
    for (GraphClass cls : {GraphClass::block, GraphClass::cactus, GraphClass::cograph,
                           GraphClass::bipartite_permutation, GraphClass::chain}) {
        for (int i = 0; i < opt.trials; ++i) {
            std::optional<GeneratedGraph> inst;
            InstanceReport r;
            try {
                inst = suite_instance(cls, opt.seed, i, opt);
                r = check_instance(cls, *inst, opt);
            } catch (const std::exception& e) {
                r.cls = cls;
                ++r.performed[static_cast<int>(Check::solver_ran)];
                r.failures.emplace_back(Check::solver_ran, std::string("generator: ") + e.what());
            }
            r.index = i;
            ++out.instances;
            for (int c = 0; c < kCheckCount; ++c) out.performed[c] += r.performed[c];
            for (const auto& f : r.failures) ++out.failed[static_cast<int>(f.first)];
            if (!r.ok() && !out.first_failure) {
                out.first_failure = r;
                if (inst) out.first_failure_graph = inst->graph;
            }
            if (on_instance) on_instance(r);
        }
    }
    return out;
}

}  // namespace mist
