#include <array>

#include "mist/recognition.hpp"

namespace mist {

namespace {

constexpr std::array<std::string_view, 5> kClassNames = {
    "block", "cactus", "cograph", "bipartite-permutation", "chain"};

}  // namespace

std::string_view to_string(GraphClass c) { return kClassNames[static_cast<std::size_t>(c)]; }

std::optional<GraphClass> parse_graph_class(std::string_view name) {
    if (name == "bp") return GraphClass::bipartite_permutation;
    for (std::size_t i = 0; i < kClassNames.size(); ++i)
        if (name == kClassNames[i]) return static_cast<GraphClass>(i);
    return std::nullopt;
}

std::vector<GraphClass> ClassSet::list() const {
    std::vector<GraphClass> out;
    for (std::size_t i = 0; i < kClassNames.size(); ++i)
        if (has(static_cast<GraphClass>(i))) out.push_back(static_cast<GraphClass>(i));
    return out;
}

std::string ClassSet::str() const {
    std::string out;
    for (GraphClass c : list()) {
        if (!out.empty()) out += ',';
        out += to_string(c);
    }
    return out;
}

ClassSet classify_graph(const Graph& g) {
    ClassSet set;
    if (g.n() == 1) {
        set.bits = (1u << kClassNames.size()) - 1;
        return set;
    }

    BlockDecomposition bd = block_decompose(g);
    bool block = true, cactus = true;
    for (std::size_t b = 0; b < bd.blocks.size(); ++b) {
        BlockKind k = bd.kind[b];
        bool triangle = k == BlockKind::clique && bd.blocks[b].size() == 3;
        block = block && (k == BlockKind::edge || k == BlockKind::clique);
        cactus = cactus && (k == BlockKind::edge || k == BlockKind::cycle || triangle);
    }
    if (block) set.add(GraphClass::block);
    if (cactus) set.add(GraphClass::cactus);

    try {
        build_cotree(g);
        set.add(GraphClass::cograph);
    } catch (const NotCograph&) {
    }

    if (!bipartition(g)) return set;
    try {
        compute_chain_ordering(g);
        set.add(GraphClass::chain);
        set.add(GraphClass::bipartite_permutation);
        return set;
    } catch (const NotChain&) {
    }
    try {
        compute_strong_ordering(g);
        set.add(GraphClass::bipartite_permutation);
    } catch (const NotBipartitePermutation&) {
    }
    return set;
}

}  // namespace mist
