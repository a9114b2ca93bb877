#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pow2lab/admissibility.hpp"
#include "pow2lab/graph.hpp"

namespace pow2lab {

struct CheckpointError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Minimal forbidden subgraphs in discovery order. Every member is
// inadmissible with all proper subgraphs admissible; members are pairwise
// non-isomorphic.
class MfsSet {
public:
    void insert(const Graph& g);
    const std::vector<Graph>& members() const { return members_; }
    bool empty() const { return members_.empty(); }
    size_t size() const { return members_.size(); }
    // True iff g contains some member as a subgraph.
    bool filters(const Graph& g) const;
    std::map<int, long> counts_by_order() const;

private:
    std::vector<Graph> members_;
};

// Full minimality audit: inadmissible, and every single-edge-deleted and
// single-vertex-deleted proper subgraph admissible. `sample_stride` > 1
// audits every k-th deletion only.
bool audit_mfs(const Graph& g, const GraphSolveOptions& opts = {}, int sample_stride = 1);

struct SearchOptions {
    int workers = 1;
    std::string checkpoint_path;  // empty: no checkpointing
    GraphSolveOptions solve;
    // called after each finished stratum with (order, edges, candidates seen)
    std::function<void(int, long, long)> progress;
};

struct FindMfsResult {
    MfsSet set;  // includes the seeded 4-cycle unless include_c4 is false
    std::map<int, long> counts;
    long candidates_tested = 0;
};

// Iterative minimal-forbidden-subgraph search over connected squarefree
// candidates of order 5..max_order. The 4-cycle is seeded, never
// rediscovered.
FindMfsResult find_mfs(int max_order, const SearchOptions& opts = {}, bool include_c4 = true,
                       bool audit = true);

// max(0, e - g_prev): least degree possible in an admissible graph with e
// edges once g at the previous order is known.
long min_degree_bound(long e, long g_prev);

// floor(n * g_prev / (n - 2)) for n > 2.
long g_upper_bound(int n, long g_prev);

struct GRecord {
    int n = 0;
    long g = 0;
    std::string status;      // "proven" | "lower-bound-only"
    std::string proof_mode;  // "search" | "bound+witness" | "bound+hint" | "monotone" | "split" | "base"
    std::optional<Graph> witness_graph;
    std::optional<Labeling> witness_labels;
    long candidates_tested = 0;
};

struct GTable {
    std::map<int, GRecord> records;

    bool has(int n) const { return records.count(n) > 0; }
    const GRecord& at(int n) const { return records.at(n); }
};

struct ComputeGOptions {
    SearchOptions search;
    const MfsSet* mfs = nullptr;
    bool use_pruning = true;  // degree bound + MFS filter
    std::optional<long> lower_hint;
    std::optional<Graph> lower_witness;  // admissible graph realizing the hint
};

// g(n) with the bound-driven downward search; prerequisites are computed
// recursively into the table.
GRecord compute_g(int n, GTable& table, const ComputeGOptions& opts = {});

// All admissible graphs of order n with exactly e edges, up to isomorphism,
// each with a verified labeling. g_prev enables the degree pruning.
std::vector<std::pair<Graph, Labeling>> maximal_admissible(int n, long e, const MfsSet& mfs,
                                                           std::optional<long> g_prev = std::nullopt,
                                                           const SearchOptions& opts = {});

// Extensions of the base graphs by one vertex of degree k that reach
// target_e edges and are admissible, deduplicated up to isomorphism.
std::vector<std::pair<Graph, Labeling>> extend_search(const std::vector<Graph>& base, int k,
                                                      long target_e, const MfsSet& mfs,
                                                      const SearchOptions& opts = {});

}  // namespace pow2lab
