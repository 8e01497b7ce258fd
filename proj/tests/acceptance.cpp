// One line per acceptance criterion; exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "mist/bipartite_permutation.hpp"
#include "mist/block_cactus.hpp"
#include "mist/chain.hpp"
#include "mist/generators.hpp"
#include "mist/oracle.hpp"
#include "mist/verify.hpp"

using namespace mist;
using Clock = std::chrono::steady_clock;

namespace {

constexpr double kFamilyBlockBudgetMs = 1000;
constexpr double kFamilyBpBudgetMs = 5000;
constexpr double kTightPairBudgetMs = 1000;
constexpr double kSuiteBudgetMs = 5 * 60 * 1000;
constexpr double kPerfBudgetMs = 2000;
constexpr double kPerfMaxRatio = 3.0;
constexpr int kSuiteTrials = 200;
constexpr int kPerfRepeats = 11;

double ms(Clock::time_point a, Clock::time_point b) {
    return std::chrono::duration<double, std::milli>(b - a).count();
}

int failures = 0;

void report(int id, bool ok, const std::string& what) {
    std::printf("criterion %d: %s  %s\n", id, ok ? "PASS" : "FAIL", what.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

template <class F>
void guarded(int id, F&& body) {
    try {
        body();
    } catch (const std::exception& e) {
        report(id, false, std::string("exception: ") + e.what());
    }
}

void block_cactus_family() {
    auto t0 = Clock::now();
    bool ok = true;
    std::string detail;
    for (int k = 1; k <= 6; ++k) {
        Graph g = family_block_cactus(k);
        BlockCactusResult r = solve_block_cactus_detailed(g);
        const int internal = r.tree.internal_count();
        const int bad = r.labels.bad_count;
        ok = ok && internal == 3 * k && bad == 2 * k;
        detail += " k" + std::to_string(k) + "=" + std::to_string(internal) + "/" + std::to_string(bad);
    }
    double t = ms(t0, Clock::now());
    ok = ok && t < kFamilyBlockBudgetMs;
    report(1, ok, "block/cactus family internal/bad:" + detail + " in " + std::to_string(t) + " ms");
}

void bp_family() {
    auto t0 = Clock::now();
    bool ok = true;
    std::string detail;
    for (int k = 1; k <= 6; ++k) {
        GeneratedGraph inst = family_bp(k);
        const int internal = solve_bp(inst.graph, *inst.ordering).internal_count();
        ok = ok && internal == 3 * k;
        detail += " k" + std::to_string(k) + "=" + std::to_string(internal);
        if (k <= 2) {
            const int oracle = oracle_mist(inst.graph).count;
            ok = ok && oracle == internal;
            detail += "(oracle " + std::to_string(oracle) + ")";
        }
    }
    double t = ms(t0, Clock::now());
    ok = ok && t < kFamilyBpBudgetMs;
    report(2, ok, "bipartite permutation family internal:" + detail + " in " + std::to_string(t) + " ms");
}

void tight_chain_pair() {
    auto t0 = Clock::now();
    struct Case {
        std::vector<int> d;
        int ny, pc, opt;
    };
    const Case cases[] = {{{1, 2, 2, 4, 5}, 5, 8, 6}, {{1, 2, 2, 4, 5, 5}, 5, 9, 8}};
    bool ok = true;
    std::string detail;
    for (const Case& c : cases) {
        GeneratedGraph inst = chain_from_degrees(c.d, c.ny);
        const int pc = chain_path_cover(inst.graph, *inst.ordering).cover.edge_count();
        const int opt = solve_bp(inst.graph, *inst.ordering).internal_count();
        const int oracle = oracle_mist(inst.graph).count;
        ok = ok && pc == c.pc && opt == c.opt && oracle == c.opt;
        detail += " (cover " + std::to_string(pc) + ", solver " + std::to_string(opt) + ", oracle " +
                  std::to_string(oracle) + ")";
    }
    double t = ms(t0, Clock::now());
    ok = ok && t < kTightPairBudgetMs;
    report(3, ok, "chain tightness pair:" + detail + " in " + std::to_string(t) + " ms");
}

void suites() {
    VerifyOptions opt;
    opt.trials = kSuiteTrials;
    opt.seed = 1;
    opt.max_n = 11;
    opt.leaf_check_max_n = 9;

    auto t0 = Clock::now();
    VerifyReport rep = run_verification(opt);
    double t = ms(t0, Clock::now());

    auto count = [&](const std::array<int, kCheckCount>& a, Check c) { return a[static_cast<int>(c)]; };
    auto line = [&](Check c) {
        return std::string(to_string(c)) + " " + std::to_string(count(rep.performed, c) - count(rep.failed, c)) +
               "/" + std::to_string(count(rep.performed, c));
    };

    {
        const bool ok = count(rep.failed, Check::oracle_equivalence) == 0 &&
                        count(rep.failed, Check::solver_ran) == 0 &&
                        count(rep.performed, Check::oracle_equivalence) == 5 * kSuiteTrials && t < kSuiteBudgetMs;
        report(4, ok, "oracle equivalence over " + std::to_string(rep.instances) + " instances: " +
                          line(Check::oracle_equivalence) + " in " + std::to_string(t) + " ms");
    }
    {
        const Check bounds[] = {Check::upper_bound, Check::bad_block_formula, Check::cograph_equality,
                                Check::chain_gap, Check::leaf_per_bad_block};
        bool ok = count(rep.failed, Check::solver_ran) == 0;
        std::string detail;
        for (Check c : bounds) {
            ok = ok && count(rep.failed, c) == 0 && count(rep.performed, c) > 0;
            detail += " " + line(c);
        }
        report(5, ok, "bounds:" + detail);
    }
    {
        const bool ok = count(rep.failed, Check::pathcover_optimality) == 0 &&
                        count(rep.performed, Check::pathcover_optimality) == 2 * kSuiteTrials;
        report(6, ok, "path cover optimality (cograph + chain): " + line(Check::pathcover_optimality));
    }
}

// Both sizes are timed alternately so background load hits them alike;
// the minimum over repeats is kept.
void performance() {
    bool ok = true;
    std::string detail;
    const int sizes[2] = {100000, 200000};
    for (GraphClass cls : {GraphClass::block, GraphClass::bipartite_permutation}) {
        GeneratedGraph inst[2] = {generate(GenSpec{cls, sizes[0], 2024, 0.5}),
                                  generate(GenSpec{cls, sizes[1], 2024, 0.5})};
        double times[2] = {1e300, 1e300};
        for (int rep = 0; rep < kPerfRepeats; ++rep)
            for (int s = 0; s < 2; ++s) {
                auto t0 = Clock::now();
                if (cls == GraphClass::block)
                    solve_block_cactus(inst[s].graph);
                else
                    solve_bp(inst[s].graph, *inst[s].ordering);
                times[s] = std::min(times[s], ms(t0, Clock::now()));
            }
        const double ratio = times[1] / std::max(times[0], 1e-3);
        ok = ok && times[0] < kPerfBudgetMs && times[1] < kPerfBudgetMs && ratio <= kPerfMaxRatio;
        char buf[160];
        std::snprintf(buf, sizeof buf, " %s %.1f ms / %.1f ms (ratio %.2f)",
                      std::string(to_string(cls)).c_str(), times[0], times[1], ratio);
        detail += buf;
    }
    report(7, ok, "linear-time proxy at n = 1e5 / 2e5:" + detail);
}

}  // namespace

int main() {
    guarded(1, block_cactus_family);
    guarded(2, bp_family);
    guarded(3, tight_chain_pair);
    guarded(4, suites);
    guarded(7, performance);
    std::printf("%s\n", failures == 0 ? "all criteria passed" : "some criteria failed");
    return failures == 0 ? 0 : 1;
}
