#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "mist/block_cactus.hpp"
#include "mist/chain.hpp"
#include "mist/cograph.hpp"
#include "mist/generators.hpp"
#include "mist/graph.hpp"
#include "mist/recognition.hpp"
#include "mist/solve.hpp"
#include "mist/verify.hpp"

namespace {

using namespace mist;

constexpr int kOk = 0;
constexpr int kIoError = 1;
constexpr int kClassMismatch = 2;
constexpr int kVerifyFailed = 3;

struct ClassMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Graph read_graph(const std::string& path) {
    if (path == "-") return parse_graph(std::cin);
    std::ifstream in(path);
    if (!in) throw std::ios_base::failure("cannot open " + path);
    return parse_graph(in);
}

void write_to(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::ios_base::failure("cannot write " + path);
    out << text;
}

GraphClass resolve_class(const Graph& g, const std::string& name) {
    if (name == "auto") {
        ClassSet classes = classify_graph(g);
        auto pick = pick_class(classes);
        if (!pick) throw ClassMismatch("graph is not in any supported class");
        return *pick;
    }
    auto cls = parse_graph_class(name);
    if (!cls) throw std::invalid_argument("unknown class " + name);
    return *cls;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

std::string cover_text(const PathCover& pc) {
    std::ostringstream os;
    os << "paths " << pc.component_count() << " edges " << pc.edge_count() << "\n";
    for (const auto& p : pc.paths()) {
        for (std::size_t i = 0; i < p.size(); ++i) os << (i ? " " : "") << p[i] + 1;
        os << "\n";
    }
    return os.str();
}

int cmd_recognize(const std::string& file) {
    Graph g = read_graph(file);
    ClassSet classes = classify_graph(g);
    std::cout << "n: " << g.n() << "\nm: " << g.m() << "\nclasses: " << classes.str() << "\n";
    auto pick = pick_class(classes);
    std::cout << "solver: " << (pick ? std::string(to_string(*pick)) : "none") << "\n";
    return pick ? kOk : kClassMismatch;
}

int cmd_solve(const std::string& file, const std::string& cls_name, const std::string& out,
              const std::string& dot, bool dot_tree_only) {
    Graph g = read_graph(file);
    auto t0 = std::chrono::steady_clock::now();
    GraphClass cls = resolve_class(g, cls_name);
    SolveReport r = solve_graph(g, cls);
    double elapsed = ms_since(t0);

    std::ostringstream tree;
    write_tree(tree, r.tree);
    if (!out.empty()) write_to(out, tree.str());
    if (!dot.empty()) {
        std::ostringstream os;
        write_dot(os, g, r.tree, !dot_tree_only);
        write_to(dot, os.str());
    }
    std::cout << "class: " << to_string(r.cls) << "\n";
    std::cout << "n: " << g.n() << "\n";
    std::cout << "internal_count: " << r.tree.internal_count() << "\n";
    if (r.path_cover) std::cout << "path_cover_edges: " << r.path_cover->edge_count() << "\n";
    if (r.bad_count) std::cout << "bad_blocks: " << *r.bad_count << "\n";
    bool all_ok = true;
    for (const auto& c : r.checks) {
        std::cout << "check: " << c.name << ": " << (c.ok ? "ok" : "FAILED");
        if (!c.detail.empty()) std::cout << " (" << c.detail << ")";
        std::cout << "\n";
        all_ok = all_ok && c.ok;
    }
    std::cout << "time_ms: " << elapsed << "\n";
    if (out.empty()) std::cout << tree.str();
    return all_ok ? kOk : kVerifyFailed;
}

int cmd_path_cover(const std::string& file, const std::string& cls_name, const std::string& out) {
    Graph g = read_graph(file);
    GraphClass cls = resolve_class(g, cls_name);
    PathCover pc;
    if (cls == GraphClass::cograph)
        pc = cotree_path_cover(g, build_cotree(g)).cover;
    else if (cls == GraphClass::chain)
        pc = chain_path_cover(g, compute_chain_ordering(g)).cover;
    else
        throw ClassMismatch("path covers are computed for cographs and chain graphs only");
    std::cout << "class: " << to_string(cls) << "\npath_cover_edges: " << pc.edge_count() << "\n";
    write_to(out, cover_text(pc));
    return kOk;
}

int cmd_validate(const std::string& graph_file, const std::string& tree_file) {
    Graph g = read_graph(graph_file);
    std::ifstream in(tree_file);
    if (!in) throw std::ios_base::failure("cannot open " + tree_file);
    try {
        SpanningTree t = parse_tree(in, g);
        std::cout << "valid spanning tree\ninternal_count: " << t.internal_count() << "\n";
        return kOk;
    } catch (const GraphError& e) {
        std::cerr << "invalid tree: " << e.what() << "\n";
        return kVerifyFailed;
    }
}

int cmd_verify(int trials, std::uint64_t seed, const std::string& counterexample, bool break_solver,
               bool verbose) {
    VerifyOptions opt;
    opt.trials = trials;
    opt.seed = seed;
    opt.break_solver = break_solver;
    auto t0 = std::chrono::steady_clock::now();
    VerifyReport rep = run_verification(opt, [&](const InstanceReport& r) {
        if (verbose || !r.ok())
            std::cerr << to_string(r.cls) << " #" << r.index << " n=" << r.n << " solver=" << r.solver
                      << " oracle=" << r.oracle << (r.ok() ? " ok" : " FAILED") << "\n";
    });
    std::cout << "instances: " << rep.instances << "\n";
    for (int c = 0; c < kCheckCount; ++c)
        if (rep.performed[c] > 0)
            std::cout << "check " << to_string(static_cast<Check>(c)) << ": " << rep.performed[c] << " run, "
                      << rep.failed[c] << " failed\n";
    std::cout << "time_ms: " << ms_since(t0) << "\n";
    if (rep.ok()) return kOk;

    const InstanceReport& f = *rep.first_failure;
    std::ostringstream os;
    os << "# counterexample: class " << to_string(f.cls) << ", instance " << f.index << ", seed " << seed << "\n";
    for (const auto& [check, detail] : f.failures) os << "# " << to_string(check) << ": " << detail << "\n";
    if (rep.first_failure_graph) write_graph(os, *rep.first_failure_graph);
    write_to(counterexample, os.str());
    std::cout << "counterexample: " << counterexample << "\n";
    return kVerifyFailed;
}

int cmd_gen(const std::string& cls_name, int n, std::uint64_t seed, double density,
            const std::string& family, int k, const std::string& out) {
    Graph g;
    if (!family.empty()) {
        if (family == "block-cactus")
            g = family_block_cactus(k);
        else if (family == "bp")
            g = family_bp(k).graph;
        else
            throw std::invalid_argument("unknown family " + family);
    } else {
        auto cls = parse_graph_class(cls_name);
        if (!cls) throw std::invalid_argument("unknown class " + cls_name);
        g = gen_class(GenSpec{*cls, n, seed, density});
    }
    std::ostringstream os;
    write_graph(os, g);
    write_to(out, os.str());
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Maximum internal spanning trees for block, cactus, cograph, bipartite permutation and chain graphs"};
    app.require_subcommand(1);

    std::string file, out, dot, cls = "auto", tree_file, counterexample = "counterexample.txt";
    bool dot_tree_only = false, break_solver = false, verbose = false;

    auto* recognize = app.add_subcommand("recognize", "List the supported classes containing the graph");
    recognize->add_option("file", file, "Edge-list file, - for stdin")->required();

    auto* solve = app.add_subcommand("solve", "Compute a maximum internal spanning tree");
    solve->add_option("file", file, "Edge-list file, - for stdin")->required();
    solve->add_option("--class", cls, "auto|block|cactus|cograph|bp|chain")->capture_default_str();
    solve->add_option("--out", out, "Tree file (default: print after the report)");
    solve->add_option("--dot", dot, "Write a DOT drawing");
    solve->add_flag("--dot-tree-only", dot_tree_only, "Leave non-tree edges out of the DOT drawing");

    auto* path_cover = app.add_subcommand("path-cover", "Optimal path cover of a cograph or chain graph");
    path_cover->add_option("file", file, "Edge-list file, - for stdin")->required();
    path_cover->add_option("--class", cls, "auto|cograph|chain")->capture_default_str();
    path_cover->add_option("--out", out, "Cover file (default: stdout)");

    auto* validate = app.add_subcommand("validate", "Check a tree file against a graph");
    validate->add_option("graph", file)->required();
    validate->add_option("tree", tree_file)->required();

    int trials = 200;
    std::uint64_t seed = 1;
    auto* verify = app.add_subcommand("verify", "Compare every solver with the exhaustive oracles");
    verify->add_option("--trials", trials, "Instances per class")->capture_default_str();
    verify->add_option("--seed", seed)->capture_default_str();
    verify->add_option("--counterexample", counterexample, "Where the first failing instance goes")
        ->capture_default_str();
    verify->add_flag("-v,--verbose", verbose);
    verify->add_flag("--break-solver", break_solver)->group("");

    int n = 10, k = 1;
    double density = 0.5;
    std::string family, gen_class_name = "block";
    auto* gen = app.add_subcommand("gen", "Generate an instance");
    gen->add_option("--class", gen_class_name, "block|cactus|cograph|bp|chain")->capture_default_str();
    gen->add_option("--n", n)->capture_default_str();
    gen->add_option("--seed", seed)->capture_default_str();
    gen->add_option("--density", density)->capture_default_str();
    gen->add_option("--family", family, "block-cactus|bp");
    gen->add_option("--k", k)->capture_default_str();
    gen->add_option("--out", out, "Output file (default: stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*recognize) return cmd_recognize(file);
        if (*solve) return cmd_solve(file, cls, out, dot, dot_tree_only);
        if (*path_cover) return cmd_path_cover(file, cls, out);
        if (*validate) return cmd_validate(file, tree_file);
        if (*verify) return cmd_verify(trials, seed, counterexample, break_solver, verbose);
        if (*gen) return cmd_gen(gen_class_name, n, seed, density, family, k, out);
    } catch (const NotCograph& e) {
        std::cerr << "class mismatch: " << e.what() << "\n";
        return kClassMismatch;
    } catch (const NotBipartitePermutation& e) {
        std::cerr << "class mismatch: " << e.what() << "\n";
        return kClassMismatch;
    } catch (const NotChain& e) {
        std::cerr << "class mismatch: " << e.what() << "\n";
        return kClassMismatch;
    } catch (const NotBlockOrCactus& e) {
        std::cerr << "class mismatch: " << e.what() << "\n";
        return kClassMismatch;
    } catch (const ClassMismatch& e) {
        std::cerr << "class mismatch: " << e.what() << "\n";
        return kClassMismatch;
    } catch (const InvariantViolation& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kVerifyFailed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIoError;
    }
    return kOk;
}
