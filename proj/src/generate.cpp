#include "pow2lab/generate.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "pow2lab/canon.hpp"

namespace pow2lab {

namespace {

// True iff adding edge (u,v) to a C4-free graph keeps it C4-free: no path of
// length 3 from u to v may exist, i.e. no edge between N(u)\{v} and N(v)\{u}
// and no common neighbor adjacent to another common neighbor. Equivalent
// check: some z in N(u)\{v} has a neighbor in N(v)\{u,z}.
bool edge_keeps_c4_free(const std::vector<std::uint64_t>& adj, int u, int v) {
    std::uint64_t nu = adj[u] & ~(std::uint64_t(1) << v);
    std::uint64_t nv = adj[v] & ~(std::uint64_t(1) << u);
    std::uint64_t zs = nu;
    while (zs) {
        int z = std::countr_zero(zs);
        zs &= zs - 1;
        if (adj[z] & nv & ~(std::uint64_t(1) << z)) return false;
    }
    return true;
}

long connect_deficit(const Graph& g) { return component_count(g) - 1; }

long degree_deficit(const Graph& g, int min_degree) {
    if (min_degree <= 0) return 0;
    long deficit = 0;
    for (int d : g.degrees())
        if (d < min_degree) deficit += min_degree - d;
    return (deficit + 1) / 2;
}

}  // namespace

GraphGenerator::GraphGenerator(int n, GenConstraints c) : n_(n), c_(std::move(c)) {
    if (n_ < 0) throw std::invalid_argument("GraphGenerator: negative order");
    c_.validate(n_);
    long all_pairs = static_cast<long>(n_) * (n_ - 1) / 2;
    max_edges_ = (c_.max_edges >= 0) ? std::min(c_.max_edges, all_pairs) : all_pairs;
    if (n_ == 0) {
        exhausted_ = true;
        return;
    }
    // stratum 0: the empty graph
    auto res = canonical_form(Graph::empty(n_));
    stratum_.insert(res.code);
    stratum_edges_ = 0;
    cursor_ = stratum_.begin();
}

bool GraphGenerator::admits_to_window(const Graph& g) const {
    if (g.size() < c_.min_edges) return false;
    if (c_.connected && !is_connected(g)) return false;
    if (c_.min_degree > 0) {
        for (int d : g.degrees())
            if (d < c_.min_degree) return false;
    }
    return true;
}

void GraphGenerator::advance_stratum() {
    std::set<Code> next;
    for (const auto& code : stratum_) {
        Graph parent = graph_from_code(n_, code);
        auto adj = parent.adjacency_masks();
        auto canon = canonical_form(n_, adj);

        std::vector<std::pair<int, int>> nonedges;
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (!((adj[u] >> v) & 1)) nonedges.emplace_back(u, v);
        if (nonedges.empty()) continue;

        // One attempt per orbit of non-edges; the cross-parent duplicates
        // that remain are absorbed by the stratum set.
        auto reps = pair_orbit_reps(n_, canon.automorphisms, nonedges);
        for (int idx : reps) {
            auto [u, v] = nonedges[idx];
            if (c_.c4_free && !edge_keeps_c4_free(adj, u, v)) continue;
            Graph child = parent.with_edge(u, v);
            long e = child.size();
            if (e + connect_deficit(child) > max_edges_ && c_.connected) continue;
            if (e + degree_deficit(child, c_.min_degree) > max_edges_) continue;
            next.insert(canonical_form(child).code);
        }
    }
    stratum_ = std::move(next);
    ++stratum_edges_;
    cursor_ = stratum_.begin();
}

std::optional<Graph> GraphGenerator::next() {
    while (!exhausted_) {
        while (cursor_ != stratum_.end()) {
            Graph g = graph_from_code(n_, *cursor_);
            ++cursor_;
            if (stratum_edges_ >= c_.min_edges && admits_to_window(g)) return g;
        }
        if (stratum_edges_ >= max_edges_ || stratum_.empty()) {
            exhausted_ = true;
            break;
        }
        advance_stratum();
    }
    return std::nullopt;
}

std::vector<Graph> generate_all(int n, const GenConstraints& c) {
    GraphGenerator gen(n, c);
    std::vector<Graph> out;
    while (auto g = gen.next()) out.push_back(std::move(*g));
    return out;
}

std::vector<Graph> extend_with_vertex(const Graph& g, int k, bool require_c4_free) {
    int n = g.order();
    if (k < 1 || k > n) throw std::invalid_argument("extend_with_vertex: degree out of range");
    if (n + 1 > 64) throw std::invalid_argument("extend_with_vertex: order exceeds 64");

    std::set<std::vector<std::uint64_t>> seen;
    // iterate k-subsets of 0..n-1
    std::vector<int> subset(k);
    for (int i = 0; i < k; ++i) subset[i] = i;
    while (true) {
        auto edges = g.edges();
        for (int s : subset) edges.emplace_back(s, n);
        Graph ext(n + 1, std::move(edges));
        if (!require_c4_free || is_c4_free(ext)) seen.insert(canonical_form(ext).code);
        // next subset
        int i = k - 1;
        while (i >= 0 && subset[i] == n - k + i) --i;
        if (i < 0) break;
        ++subset[i];
        for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
    }
    std::vector<Graph> out;
    out.reserve(seen.size());
    for (const auto& code : seen) out.push_back(graph_from_code(n + 1, code));
    return out;
}

}  // namespace pow2lab
