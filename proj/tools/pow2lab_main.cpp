#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "pow2lab/admissibility.hpp"
#include "pow2lab/emit.hpp"
#include "pow2lab/generate.hpp"
#include "pow2lab/graph6.hpp"
#include "pow2lab/search.hpp"

namespace {

using namespace pow2lab;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitInternal = 3;

int default_workers() {
    if (const char* env = std::getenv("POW2LAB_WORKERS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 1;
}

struct CommonFlags {
    int workers = default_workers();
    int budget = 64;
    bool no_lll = false;
    std::string mfs_cache;
    std::string format = "json";
    std::string in_path;
    std::string out_path;

    GraphSolveOptions solve_opts() const {
        GraphSolveOptions o;
        o.use_lll = !no_lll;
        o.instantiation_budget = budget;
        return o;
    }
    SearchOptions search_opts() const {
        SearchOptions o;
        o.workers = workers;
        o.solve = solve_opts();
        return o;
    }
};

void add_common(CLI::App* cmd, CommonFlags& f, bool with_io = true) {
    cmd->add_option("--workers", f.workers, "parallel worker count")->check(CLI::PositiveNumber);
    cmd->add_option("--budget", f.budget, "witness instantiation attempts per family")
        ->check(CLI::PositiveNumber);
    cmd->add_flag("--no-lll", f.no_lll, "skip LLL reduction of the kernel basis");
    cmd->add_option("--mfs-cache", f.mfs_cache, "graph6 file of known minimal forbidden subgraphs");
    if (with_io) {
        cmd->add_option("--in", f.in_path, "input file (default: stdin)");
        cmd->add_option("--out", f.out_path, "output file (default: stdout)");
        cmd->add_option("--format", f.format, "json | text | dot")
            ->check(CLI::IsMember({"json", "text", "dot"}));
    }
}

std::vector<Graph> load_graphs(const std::string& in_path) {
    if (in_path.empty()) return read_graph6_stream(std::cin);
    std::ifstream in(in_path);
    if (!in) throw Graph6Error("cannot open input file " + in_path);
    return read_graph6_stream(in);
}

std::unique_ptr<std::ostream> open_out(const std::string& out_path, std::ostream*& stream) {
    if (out_path.empty()) {
        stream = &std::cout;
        return nullptr;
    }
    auto file = std::make_unique<std::ofstream>(out_path);
    if (!*file) throw std::runtime_error("cannot open output file " + out_path);
    stream = file.get();
    return file;
}

MfsSet load_mfs(const std::string& path) {
    if (path.empty()) return {};
    return read_mfs_file(path);
}

long elapsed_ms(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                 t0)
        .count();
}

int cmd_check(const CommonFlags& flags) {
    auto graphs = load_graphs(flags.in_path);
    MfsSet mfs = load_mfs(flags.mfs_cache);
    std::ostream* out = nullptr;
    auto holder = open_out(flags.out_path, out);

    long admissible_count = 0;
    for (const Graph& g : graphs) {
        auto t0 = std::chrono::steady_clock::now();
        Verdict v;
        if (!mfs.empty() && mfs.filters(g)) {
            v.admissible = false;
        } else {
            v = graph_solve(g, flags.solve_opts());
        }
        if (v.admissible) ++admissible_count;
        if (flags.format == "text") {
            *out << write_graph6(g) << " " << (v.admissible ? "admissible" : "inadmissible");
            if (v.witness) {
                *out << " labels=[";
                for (size_t i = 0; i < v.witness->size(); ++i)
                    *out << (i ? "," : "") << (*v.witness)[i].get_str();
                *out << "]";
            }
            *out << "\n";
        } else {
            *out << verdict_json(g, v, elapsed_ms(t0)) << "\n";
        }
    }
    std::cerr << graphs.size() << " graphs, " << admissible_count << " admissible, "
              << (graphs.size() - admissible_count) << " inadmissible\n";
    return kExitOk;
}

int cmd_solve(const CommonFlags& flags, const std::string& graph6_arg, bool dump_system) {
    Graph g = graph6_arg.empty() ? load_graphs(flags.in_path).at(0) : parse_graph6(graph6_arg);
    std::ostream* out = nullptr;
    auto holder = open_out(flags.out_path, out);

    if (dump_system) {
        auto system = build_power_system(g, !flags.no_lll);
        *out << "EQ:\n";
        for (const auto& p : system.sys.equations) *out << p.to_string() << "\n";
        *out << "NEQ:\n";
        for (const auto& p : system.sys.inequations) *out << p.to_string() << "\n";
        if (system.contradiction) *out << "CONTRADICTION\n";
    }

    auto t0 = std::chrono::steady_clock::now();
    Verdict v = graph_solve(g, flags.solve_opts());
    if (flags.format == "dot") {
        *out << to_dot(g, v.witness ? &*v.witness : nullptr);
        return kExitOk;
    }
    if (flags.format == "text") {
        *out << (v.admissible ? "admissible" : "inadmissible") << "\n";
        for (const auto& fam : v.families) *out << fam.to_string() << "\n";
        if (v.witness) {
            *out << "labels:";
            for (const auto& l : *v.witness) *out << " " << l.get_str();
            *out << "\n";
        }
        return kExitOk;
    }
    *out << verdict_json(g, v, elapsed_ms(t0)) << "\n";
    return kExitOk;
}

int cmd_mfs(const CommonFlags& flags, int max_order, const std::string& checkpoint) {
    SearchOptions opts = flags.search_opts();
    opts.checkpoint_path = checkpoint;
    opts.progress = [](int order, long edges, long count) {
        std::cerr << "order " << order << " edges " << edges << ": " << count << " candidates\n";
    };
    auto result = find_mfs(max_order, opts);
    for (const auto& [order, count] : result.counts)
        std::cout << "order " << order << ": " << count << "\n";
    if (!flags.out_path.empty())
        write_mfs_files(result.set, flags.out_path, flags.out_path + ".json");
    return kExitOk;
}

int cmd_g(const CommonFlags& flags, int n, const std::vector<std::string>& assumes,
          long lower_hint, const std::string& witness_g6, bool exhaustive) {
    GTable table;
    for (const std::string& a : assumes) {
        auto eq = a.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("--assume expects k=v");
        GRecord rec;
        rec.n = std::stoi(a.substr(0, eq));
        rec.g = std::stol(a.substr(eq + 1));
        rec.status = "proven";
        rec.proof_mode = "assumed";
        table.records[rec.n] = rec;
    }

    ComputeGOptions opts;
    opts.search = flags.search_opts();
    MfsSet mfs = load_mfs(flags.mfs_cache);
    if (!mfs.empty()) opts.mfs = &mfs;
    if (lower_hint >= 0) opts.lower_hint = lower_hint;
    if (!witness_g6.empty()) opts.lower_witness = parse_graph6(witness_g6);

    // paper-scale orders need an explicit opt-in unless bounds close the gap
    if (n >= 12 && !exhaustive && !table.has(n - 1) && !table.has(n))
        throw std::invalid_argument(
            "order " + std::to_string(n) +
            " is a long-running search: pass --exhaustive, or --assume/--lower-hint to close the "
            "bound gap");

    GRecord rec = compute_g(n, table, opts);
    std::cout << gtable_json(rec) << "\n";
    if (!flags.out_path.empty()) {
        std::ofstream out(flags.out_path);
        if (!out) throw std::runtime_error("cannot open output file " + flags.out_path);
        for (const auto& [k, r] : table.records) out << gtable_json(r) << "\n";
    }
    return kExitOk;
}

int cmd_maximal(const CommonFlags& flags, int n, long edges, bool exhaustive) {
    MfsSet mfs = load_mfs(flags.mfs_cache);
    GTable table;
    ComputeGOptions gopts;
    gopts.search = flags.search_opts();
    if (!mfs.empty()) gopts.mfs = &mfs;

    std::optional<long> g_prev;
    if (edges < 0) {
        if (n >= 12 && !exhaustive)
            throw std::invalid_argument("order " + std::to_string(n) +
                                        " needs --edges or --exhaustive");
        GRecord rec = compute_g(n, table, gopts);
        edges = rec.g;
        if (table.has(n - 1)) g_prev = table.at(n - 1).g;
    } else if (n >= 2) {
        // degree pruning only when the previous value is derivable cheaply
        if (table.has(n - 1)) g_prev = table.at(n - 1).g;
    }

    auto found = maximal_admissible(n, edges, mfs, g_prev, flags.search_opts());
    std::ostream* out = nullptr;
    auto holder = open_out(flags.out_path, out);
    for (const auto& [g, labels] : found) {
        Verdict v;
        v.admissible = true;
        v.witness = labels;
        *out << verdict_json(g, v, 0) << "\n";
    }
    std::cerr << found.size() << " maximal admissible graphs of order " << n << " with " << edges
              << " edges\n";
    return kExitOk;
}

int cmd_extend(const CommonFlags& flags, int degree, long target_edges) {
    auto base = load_graphs(flags.in_path);
    MfsSet mfs = load_mfs(flags.mfs_cache);
    auto found = extend_search(base, degree, target_edges, mfs, flags.search_opts());
    std::ostream* out = nullptr;
    auto holder = open_out(flags.out_path, out);
    for (const auto& [g, labels] : found) {
        Verdict v;
        v.admissible = true;
        v.witness = labels;
        *out << verdict_json(g, v, 0) << "\n";
    }
    std::cerr << found.size() << " admissible extensions\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact search tool for power-of-2 sum labelings of graphs"};
    app.require_subcommand(1);

    CommonFlags flags;

    auto* check = app.add_subcommand("check", "decide admissibility for a graph6 stream");
    add_common(check, flags);

    auto* solve = app.add_subcommand("solve", "solve a single graph and emit families/witness");
    std::string solve_g6;
    bool dump_system = false;
    solve->add_option("graph6", solve_g6, "graph6 string (default: first graph from --in)");
    solve->add_flag("--dump-system", dump_system, "print the equation/inequation system");
    add_common(solve, flags);

    auto* mfs = app.add_subcommand("mfs", "enumerate minimal forbidden subgraphs");
    int mfs_order = 7;
    std::string checkpoint;
    mfs->add_option("max_order", mfs_order, "largest order to search")
        ->required()
        ->check(CLI::Range(5, 11));
    mfs->add_option("--checkpoint", checkpoint, "append-only resumable checkpoint file");
    add_common(mfs, flags);

    auto* gcmd = app.add_subcommand("g", "compute the extremal edge count g(n)");
    int g_order = 0;
    std::vector<std::string> assumes;
    long lower_hint = -1;
    std::string witness_g6;
    bool exhaustive = false;
    gcmd->add_option("n", g_order, "order")->required()->check(CLI::PositiveNumber);
    gcmd->add_option("--assume", assumes, "trusted prior value k=v (repeatable)");
    gcmd->add_option("--lower-hint", lower_hint, "trusted lower bound for g(n)");
    gcmd->add_option("--witness-g6", witness_g6, "admissible graph6 witness for the lower bound");
    gcmd->add_flag("--exhaustive", exhaustive, "allow paper-scale searches (n >= 12)");
    add_common(gcmd, flags);

    auto* maximal = app.add_subcommand("maximal", "list maximal admissible graphs of an order");
    int max_n = 0;
    long max_edges = -1;
    bool max_exhaustive = false;
    maximal->add_option("n", max_n, "order")->required()->check(CLI::PositiveNumber);
    maximal->add_option("--edges", max_edges, "edge count (default: g(n))");
    maximal->add_flag("--exhaustive", max_exhaustive, "allow paper-scale searches");
    add_common(maximal, flags);

    auto* extend = app.add_subcommand("extend", "extend base graphs by one vertex and test");
    int ext_degree = 2;
    long ext_edges = 0;
    extend->add_option("--min-degree,--degree", ext_degree, "degree of the added vertex")
        ->required();
    extend->add_option("--edges", ext_edges, "target edge count after extension")->required();
    add_common(extend, flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (check->parsed()) return cmd_check(flags);
        if (solve->parsed()) return cmd_solve(flags, solve_g6, dump_system);
        if (mfs->parsed()) return cmd_mfs(flags, mfs_order, checkpoint);
        if (gcmd->parsed()) return cmd_g(flags, g_order, assumes, lower_hint, witness_g6, exhaustive);
        if (maximal->parsed()) return cmd_maximal(flags, max_n, max_edges, max_exhaustive);
        if (extend->parsed()) return cmd_extend(flags, ext_degree, ext_edges);
    } catch (const Graph6Error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitParse;
    } catch (const CheckpointError& e) {
        std::cerr << "checkpoint error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::logic_error& e) {
        std::cerr << "internal invariant violation: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
