#include "pow2lab/search.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <set>
#include <thread>

#include <json.hpp>

#include "pow2lab/canon.hpp"
#include "pow2lab/generate.hpp"
#include "pow2lab/graph6.hpp"
#include "pow2lab/subgraph.hpp"

namespace pow2lab {

namespace {

using nlohmann::json;

void parallel_for(int workers, size_t count, const std::function<void(size_t)>& body) {
    if (count == 0) return;
    workers = std::max(1, workers);
    if (workers == 1 || count == 1) {
        for (size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    size_t spawn = std::min(static_cast<size_t>(workers), count);
    pool.reserve(spawn);
    for (size_t t = 0; t < spawn; ++t)
        pool.emplace_back([&] {
            for (size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) body(i);
        });
    for (auto& th : pool) th.join();
}

}  // namespace

void MfsSet::insert(const Graph& g) { members_.push_back(g); }

bool MfsSet::filters(const Graph& g) const {
    for (const Graph& h : members_) {
        if (h.order() > g.order() || h.size() > g.size()) continue;
        if (contains_subgraph(g, h)) return true;
    }
    return false;
}

std::map<int, long> MfsSet::counts_by_order() const {
    std::map<int, long> counts;
    for (const Graph& h : members_) ++counts[h.order()];
    return counts;
}

bool audit_mfs(const Graph& g, const GraphSolveOptions& opts, int sample_stride) {
    GraphSolveOptions fast = opts;
    fast.want_witness = false;
    if (graph_solve(g, fast).admissible) return false;
    if (sample_stride < 1) sample_stride = 1;
    const auto& edges = g.edges();
    for (size_t i = 0; i < edges.size(); i += sample_stride) {
        if (!graph_solve(g.without_edge(edges[i].first, edges[i].second), fast).admissible)
            return false;
    }
    for (int v = 0; v < g.order(); v += sample_stride)
        if (!graph_solve(g.without_vertex(v), fast).admissible) return false;
    return true;
}

namespace {

struct CheckpointLog {
    std::string path;
    json header;
    std::vector<json> lines;  // replayed records
    std::ofstream out;

    // loads an existing log, verifying the header matches; creates the file
    // with the header when absent
    void open(const std::string& p, const json& expected_header) {
        path = p;
        if (path.empty()) return;
        bool saw_header = false;
        {
            std::ifstream in(path);
            std::string line;
            long lineno = 0;
            while (in && std::getline(in, line)) {
                ++lineno;
                if (line.empty()) continue;
                json rec;
                try {
                    rec = json::parse(line);
                } catch (const json::exception&) {
                    throw CheckpointError("corrupt checkpoint at line " + std::to_string(lineno) +
                                          ": refusing to resume");
                }
                if (!saw_header) {
                    if (rec != expected_header)
                        throw CheckpointError("checkpoint header mismatch: refusing to resume");
                    saw_header = true;
                    continue;
                }
                lines.push_back(std::move(rec));
            }
        }
        out.open(path, std::ios::app);
        if (!out) throw CheckpointError("cannot open checkpoint file " + path);
        if (!saw_header) out << expected_header.dump() << "\n" << std::flush;
    }

    void append(const json& rec) {
        if (path.empty()) return;
        out << rec.dump() << "\n" << std::flush;
    }
};

constexpr long kCheckpointStride = 10000;

}  // namespace

FindMfsResult find_mfs(int max_order, const SearchOptions& opts, bool include_c4, bool audit) {
    if (max_order < 5) throw std::invalid_argument("find_mfs: max order must be at least 5");

    FindMfsResult result;
    MfsSet working;  // excludes the 4-cycle: candidates are squarefree

    CheckpointLog log;
    log.open(opts.checkpoint_path, json{{"kind", "mfs"}, {"max_order", max_order}});
    // replayed strata: (order, edges) -> graph6 list; partial strata:
    // (order, edges) -> (index, graph6 list)
    std::map<std::pair<int, long>, std::vector<std::string>> done;
    std::map<std::pair<int, long>, std::pair<long, std::vector<std::string>>> partial;
    for (const auto& rec : log.lines) {
        std::pair<int, long> key{rec.at("order").get<int>(), rec.at("edges").get<long>()};
        auto found = rec.at("found").get<std::vector<std::string>>();
        if (rec.value("complete", false))
            done[key] = std::move(found);
        else
            partial[key] = {rec.at("index").get<long>(), std::move(found)};
    }

    for (int n = 5; n <= max_order; ++n) {
        GenConstraints c;
        c.connected = true;
        c.c4_free = true;
        GraphGenerator gen(n, c);

        std::optional<Graph> pending = gen.next();
        while (pending) {
            long e = pending->size();
            std::vector<Graph> stratum;
            while (pending && pending->size() == e) {
                stratum.push_back(std::move(*pending));
                pending = gen.next();
            }
            result.candidates_tested += static_cast<long>(stratum.size());

            auto key = std::make_pair(n, e);
            if (auto it = done.find(key); it != done.end()) {
                for (const auto& s : it->second) working.insert(parse_graph6(s));
                if (opts.progress) opts.progress(n, e, static_cast<long>(stratum.size()));
                continue;
            }

            long start_index = 0;
            std::vector<std::string> found;
            if (auto it = partial.find(key); it != partial.end()) {
                start_index = it->second.first;
                found = it->second.second;
                for (const auto& s : found) working.insert(parse_graph6(s));
            }

            // batches keep the checkpoint prefix-complete under parallelism
            long index = start_index;
            while (index < static_cast<long>(stratum.size())) {
                long batch_end = std::min<long>(index + kCheckpointStride,
                                                static_cast<long>(stratum.size()));
                std::vector<char> inadmissible(batch_end - index, 0);
                // snapshot semantics: same-stratum graphs never contain each
                // other, so filtering against `working` is exact
                parallel_for(opts.workers, static_cast<size_t>(batch_end - index), [&](size_t k) {
                    const Graph& g = stratum[index + k];
                    if (working.filters(g)) return;
                    GraphSolveOptions fast = opts.solve;
                    fast.want_witness = false;
                    if (!graph_solve(g, fast).admissible) inadmissible[k] = 1;
                });
                for (long k = 0; k < batch_end - index; ++k) {
                    if (!inadmissible[k]) continue;
                    const Graph& g = stratum[index + k];
                    if (audit) {
                        int stride = g.order() <= 8 ? 1 : 3;
                        if (!audit_mfs(g, opts.solve, stride))
                            throw std::logic_error("find_mfs: survivor failed the minimality audit");
                    }
                    working.insert(g);
                    found.push_back(write_graph6(g));
                }
                index = batch_end;
                if (index < static_cast<long>(stratum.size()))
                    log.append(json{{"order", n},
                                    {"edges", e},
                                    {"index", index},
                                    {"found", found},
                                    {"complete", false}});
            }
            log.append(
                json{{"order", n}, {"edges", e}, {"index", index}, {"found", found}, {"complete", true}});
            if (opts.progress) opts.progress(n, e, static_cast<long>(stratum.size()));
        }
    }

    if (include_c4) result.set.insert(Graph::cycle(4));
    for (const Graph& g : working.members()) result.set.insert(g);
    result.counts = result.set.counts_by_order();
    return result;
}

long min_degree_bound(long e, long g_prev) { return std::max<long>(0, e - g_prev); }

long g_upper_bound(int n, long g_prev) {
    if (n <= 2) throw std::invalid_argument("g_upper_bound: needs n > 2");
    return (static_cast<long>(n) * g_prev) / (n - 2);
}

namespace {

// labels for a witness extended by one isolated vertex
Labeling with_isolated_label(const Labeling& labels) {
    Labeling out = labels;
    mpz_class top = 0;
    for (const auto& l : labels) top = std::max(top, l);
    out.push_back(top + 1);
    return out;
}

// first admissible candidate (in stream order) among the given graphs
std::optional<std::pair<size_t, Labeling>> first_admissible(const std::vector<Graph>& batch,
                                                            const MfsSet* mfs,
                                                            const SearchOptions& opts) {
    std::vector<std::optional<Labeling>> hits(batch.size());
    parallel_for(opts.workers, batch.size(), [&](size_t k) {
        const Graph& g = batch[k];
        if (mfs && mfs->filters(g)) return;
        auto verdict = graph_solve(g, opts.solve);
        if (verdict.admissible && verdict.witness) hits[k] = std::move(verdict.witness);
    });
    for (size_t k = 0; k < batch.size(); ++k)
        if (hits[k]) return std::make_pair(k, std::move(*hits[k]));
    return std::nullopt;
}

}  // namespace

GRecord compute_g(int n, GTable& table, const ComputeGOptions& opts) {
    if (n < 1) throw std::invalid_argument("compute_g: order must be positive");
    if (table.has(n)) return table.at(n);

    GRecord rec;
    rec.n = n;
    if (n == 1) {
        rec.g = 0;
        rec.status = "proven";
        rec.proof_mode = "base";
        rec.witness_graph = Graph::empty(1);
        rec.witness_labels = Labeling{mpz_class(0)};
        table.records[n] = rec;
        return rec;
    }
    if (n == 2) {
        rec.g = 1;
        rec.status = "proven";
        rec.proof_mode = "base";
        rec.witness_graph = Graph(2, {{0, 1}});
        rec.witness_labels = Labeling{mpz_class(0), mpz_class(1)};
        table.records[n] = rec;
        return rec;
    }

    // hints apply to this order only
    ComputeGOptions sub = opts;
    sub.lower_hint.reset();
    sub.lower_witness.reset();

    GRecord prev = compute_g(n - 1, table, sub);
    long upper = g_upper_bound(n, prev.g);

    // monotone lower bound: previous witness plus an isolated vertex
    long lower = prev.g;
    std::optional<Graph> lower_graph;
    std::optional<Labeling> lower_labels;
    if (prev.witness_graph && prev.witness_labels) {
        auto edges = prev.witness_graph->edges();
        lower_graph = Graph(n, edges);
        lower_labels = with_isolated_label(*prev.witness_labels);
    }
    std::string lower_mode = "monotone";

    if (opts.lower_witness) {
        const Graph& w = *opts.lower_witness;
        if (w.order() != n) throw std::invalid_argument("compute_g: witness order mismatch");
        auto verdict = graph_solve(w, opts.search.solve);
        if (!verdict.admissible || !verdict.witness)
            throw std::invalid_argument("compute_g: supplied witness graph is not admissible");
        if (w.size() > lower) {
            lower = w.size();
            lower_graph = w;
            lower_labels = verdict.witness;
            lower_mode = "bound+witness";
        }
    }
    if (opts.lower_hint && *opts.lower_hint > lower) {
        lower = *opts.lower_hint;
        lower_graph.reset();
        lower_labels.reset();
        lower_mode = "bound+hint";
    }

    if (lower > upper) throw std::invalid_argument("compute_g: lower hint exceeds the upper bound");

    if (lower == upper) {
        rec.g = upper;
        rec.status = "proven";
        rec.proof_mode = lower_mode;
        rec.witness_graph = lower_graph;
        rec.witness_labels = lower_labels;
        table.records[n] = rec;
        return rec;
    }

    rec.g = lower;
    rec.witness_graph = lower_graph;
    rec.witness_labels = lower_labels;
    bool hit_found = false;
    for (long e = upper; e > lower; --e) {
        GenConstraints c;
        c.connected = true;
        c.c4_free = true;
        c.min_edges = e;
        c.max_edges = e;
        c.min_degree = opts.use_pruning ? static_cast<int>(min_degree_bound(e, prev.g)) : 0;
        auto batch = generate_all(n, c);
        rec.candidates_tested += static_cast<long>(batch.size());
        auto hit = first_admissible(batch, opts.use_pruning ? opts.mfs : nullptr, opts.search);
        if (hit) {
            rec.g = e;
            rec.witness_graph = batch[hit->first];
            rec.witness_labels = std::move(hit->second);
            hit_found = true;
            break;
        }
    }
    rec.proof_mode = hit_found ? "search" : lower_mode;
    rec.status = "proven";

    // a disconnected extremal graph would split into two extremal parts
    long split_best = 0;
    int split_at = 0;
    for (int a = 1; a <= n / 2; ++a) {
        GRecord ra = compute_g(a, table, sub);
        GRecord rb = compute_g(n - a, table, sub);
        if (ra.g + rb.g > split_best) {
            split_best = ra.g + rb.g;
            split_at = a;
        }
    }
    if (split_best > rec.g) {
        const GRecord& ra = table.at(split_at);
        const GRecord& rb = table.at(n - split_at);
        rec.g = split_best;
        rec.proof_mode = "split";
        if (ra.witness_graph && rb.witness_graph) {
            auto edges = ra.witness_graph->edges();
            for (const auto& [u, v] : rb.witness_graph->edges())
                edges.emplace_back(u + split_at, v + split_at);
            Graph joint(n, std::move(edges));
            auto verdict = graph_solve(joint, opts.search.solve);
            rec.witness_graph = joint;
            rec.witness_labels = verdict.witness;
        }
    }

    table.records[n] = rec;
    return rec;
}

std::vector<std::pair<Graph, Labeling>> maximal_admissible(int n, long e, const MfsSet& mfs,
                                                           std::optional<long> g_prev,
                                                           const SearchOptions& opts) {
    GenConstraints c;
    c.connected = true;
    c.c4_free = true;
    c.min_edges = e;
    c.max_edges = e;
    if (g_prev) c.min_degree = static_cast<int>(min_degree_bound(e, *g_prev));
    auto batch = generate_all(n, c);

    std::vector<std::optional<Labeling>> hits(batch.size());
    parallel_for(opts.workers, batch.size(), [&](size_t k) {
        const Graph& g = batch[k];
        if (mfs.filters(g)) return;
        auto verdict = graph_solve(g, opts.solve);
        if (verdict.admissible && verdict.witness) hits[k] = std::move(verdict.witness);
    });
    std::vector<std::pair<Graph, Labeling>> out;
    for (size_t k = 0; k < batch.size(); ++k)
        if (hits[k]) out.emplace_back(batch[k], std::move(*hits[k]));
    return out;
}

std::vector<std::pair<Graph, Labeling>> extend_search(const std::vector<Graph>& base, int k,
                                                      long target_e, const MfsSet& mfs,
                                                      const SearchOptions& opts) {
    std::set<std::string> seen;
    std::vector<Graph> candidates;
    for (const Graph& b : base) {
        if (b.size() + k != target_e) continue;
        for (const Graph& ext : extend_with_vertex(b, k, /*require_c4_free=*/true)) {
            if (seen.insert(canonical_graph6(ext)).second) candidates.push_back(ext);
        }
    }
    std::vector<std::optional<Labeling>> hits(candidates.size());
    parallel_for(opts.workers, candidates.size(), [&](size_t i) {
        const Graph& g = candidates[i];
        if (mfs.filters(g)) return;
        auto verdict = graph_solve(g, opts.solve);
        if (verdict.admissible && verdict.witness) hits[i] = std::move(verdict.witness);
    });
    std::vector<std::pair<Graph, Labeling>> out;
    for (size_t i = 0; i < candidates.size(); ++i)
        if (hits[i]) out.emplace_back(candidates[i], std::move(*hits[i]));
    return out;
}

}  // namespace pow2lab
