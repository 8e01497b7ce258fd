#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "mist/graph.hpp"
#include "mist/recognition.hpp"

namespace mist {

// mt19937_64 with hand-written integer and real draws, so a seed gives the
// same stream on every standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }
    // Uniform in [0, bound).
    std::uint64_t below(std::uint64_t bound);
    // Uniform in [lo, hi].
    int range(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1)); }
    double real() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    bool coin(double p) { return real() < p; }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
    }

private:
    std::mt19937_64 eng_;
};

struct GenSpec {
    GraphClass cls = GraphClass::block;
    int n = 10;
    std::uint64_t seed = 1;
    // block: chance of growing a bigger clique; cactus: chance of a cycle over
    // a bridge; cograph: chance of a join below the root; chain: spread of
    // degrees; bipartite permutation: number of edge additions per vertex.
    double density = 0.5;
    // Relabel vertices by a random permutation; off keeps generation order.
    bool shuffle_ids = true;
};

struct GeneratedGraph {
    Graph graph;
    // Strong ordering for bipartite permutation, chain ordering for chain.
    std::optional<BipartiteOrdering> ordering;
};

// Certified by the class recognizer before returning (InvariantViolation if not).
GeneratedGraph generate(const GenSpec& spec);
Graph gen_class(const GenSpec& spec);

// 5k vertices: triangles x1x2x3 and x3x4x5 per index, bridges between
// consecutive x3 vertices. Opt = 3k.
Graph family_block_cactus(int k);

// 5k vertices in k complete bipartite pieces (K_{3,2} for odd index, K_{2,3}
// for even), consecutive pieces linked by one edge. Opt = 3k.
GeneratedGraph family_bp(int k);

// Chain graph with x_i adjacent to y_1..y_{d_i}; ids x_1..x_{|d|} then
// y_1..y_ny. d must be nondecreasing with d.back() == ny.
GeneratedGraph chain_from_degrees(const std::vector<int>& d, int ny);

}  // namespace mist
