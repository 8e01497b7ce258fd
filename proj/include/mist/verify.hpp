#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mist/generators.hpp"
#include "mist/graph.hpp"
#include "mist/recognition.hpp"

namespace mist {

enum class Check {
    oracle_equivalence,   // class solver = oracle_mist
    upper_bound,          // Opt <= |E(P*)| - 1
    bad_block_formula,    // Opt = n - |Bad| for block/cactus graphs with >= 2 blocks
    leaf_per_bad_block,   // every spanning tree has a leaf in every bad block
    cograph_equality,     // Opt = |E(P*)| - 1 on cographs
    chain_gap,            // |E(P*)| - Opt in {1, 2} on chain graphs
    pathcover_optimality, // class path cover = oracle path cover
    stitch_bound,         // stitched chain cover keeps >= |E(P)| - 2 internal
    solver_ran,           // solver, recognizer and generator raised nothing
};
inline constexpr int kCheckCount = 9;

std::string_view to_string(Check c);

struct VerifyOptions {
    int trials = 200;  // instances per class
    std::uint64_t seed = 1;
    int min_n = 3;
    int max_n = 11;
    int leaf_check_max_n = 9;  // full enumeration cap for the leaf check
    bool break_solver = false; // report one internal vertex too many (harness self-test)
};

struct InstanceReport {
    GraphClass cls = GraphClass::block;
    int index = 0;
    int n = 0;
    int solver = -1;
    int oracle = -1;
    int oracle_pc = -1;
    int class_pc = -1;
    std::array<int, kCheckCount> performed{};
    std::vector<std::pair<Check, std::string>> failures;

    bool ok() const { return failures.empty(); }
};

// Instance `index` of the suite for `cls`; n and density are drawn from the seed.
GeneratedGraph suite_instance(GraphClass cls, std::uint64_t seed, int index, const VerifyOptions& opt);

InstanceReport check_instance(GraphClass cls, const GeneratedGraph& inst, const VerifyOptions& opt);

struct VerifyReport {
    int instances = 0;
    std::array<int, kCheckCount> performed{};
    std::array<int, kCheckCount> failed{};
    std::optional<InstanceReport> first_failure;
    std::optional<Graph> first_failure_graph;

    bool ok() const { return !first_failure.has_value(); }
};

// All five classes, `trials` instances each, in a fixed order.
VerifyReport run_verification(const VerifyOptions& opt,
                              const std::function<void(const InstanceReport&)>& on_instance = {});

}  // namespace mist
