#include "pow2lab/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace pow2lab {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n), edges_(std::move(edges)) {
    if (n < 0) throw std::invalid_argument("Graph: negative order");
    for (auto& [u, v] : edges_) {
        if (u > v) std::swap(u, v);
        if (u == v) throw std::invalid_argument("Graph: loop edge");
        if (u < 0 || v >= n_) throw std::invalid_argument("Graph: edge endpoint out of range");
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw std::invalid_argument("Graph: duplicate edge");
}

Graph Graph::path(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, std::move(e));
}

Graph Graph::cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle: need at least 3 vertices");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    e.emplace_back(0, n - 1);
    return Graph(n, std::move(e));
}

Graph Graph::complete(int n) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph(n, std::move(e));
}

bool Graph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(u, v));
}

int Graph::degree(int v) const {
    int d = 0;
    for (const auto& [a, b] : edges_)
        if (a == v || b == v) ++d;
    return d;
}

std::vector<int> Graph::degrees() const {
    std::vector<int> d(n_, 0);
    for (const auto& [a, b] : edges_) ++d[a], ++d[b];
    return d;
}

std::vector<std::vector<int>> Graph::adjacency_lists() const {
    std::vector<std::vector<int>> adj(n_);
    for (const auto& [a, b] : edges_) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    return adj;
}

std::vector<std::uint64_t> Graph::adjacency_masks() const {
    if (n_ > 64) throw std::invalid_argument("adjacency_masks: order exceeds 64");
    std::vector<std::uint64_t> m(n_, 0);
    for (const auto& [a, b] : edges_) {
        m[a] |= std::uint64_t(1) << b;
        m[b] |= std::uint64_t(1) << a;
    }
    return m;
}

Graph Graph::with_edge(int u, int v) const {
    auto e = edges_;
    e.emplace_back(u, v);
    return Graph(n_, std::move(e));
}

Graph Graph::without_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    std::vector<std::pair<int, int>> e;
    e.reserve(edges_.size());
    bool removed = false;
    for (const auto& p : edges_) {
        if (!removed && p == std::make_pair(u, v)) {
            removed = true;
            continue;
        }
        e.push_back(p);
    }
    if (!removed) throw std::invalid_argument("without_edge: edge not present");
    return Graph(n_, std::move(e));
}

Graph Graph::without_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("without_vertex: out of range");
    std::vector<std::pair<int, int>> e;
    for (const auto& [a, b] : edges_) {
        if (a == v || b == v) continue;
        e.emplace_back(a > v ? a - 1 : a, b > v ? b - 1 : b);
    }
    return Graph(n_ - 1, std::move(e));
}

Graph Graph::relabeled(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != n_) throw std::invalid_argument("relabeled: bad permutation size");
    std::vector<std::pair<int, int>> e;
    e.reserve(edges_.size());
    for (const auto& [a, b] : edges_) e.emplace_back(perm[a], perm[b]);
    return Graph(n_, std::move(e));
}

namespace {

std::vector<int> component_ids(const Graph& g) {
    int n = g.order();
    std::vector<int> comp(n, -1);
    auto adj = g.adjacency_lists();
    int next = 0;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[v])
                if (comp[w] < 0) {
                    comp[w] = next;
                    stack.push_back(w);
                }
        }
        ++next;
    }
    return comp;
}

}  // namespace

bool is_connected(const Graph& g) { return component_count(g) <= 1; }

int component_count(const Graph& g) {
    if (g.order() == 0) return 0;
    auto comp = component_ids(g);
    return 1 + *std::max_element(comp.begin(), comp.end());
}

std::optional<std::vector<int>> bipartition(const Graph& g) {
    int n = g.order();
    std::vector<int> color(n, -1);
    auto adj = g.adjacency_lists();
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[v]) {
                if (color[w] < 0) {
                    color[w] = 1 - color[v];
                    stack.push_back(w);
                } else if (color[w] == color[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

bool is_c4_free(const Graph& g) {
    int n = g.order();
    if (n < 4 || g.size() < 4) return true;
    auto adj = g.adjacency_lists();
    // A C4 exists iff some vertex pair has >= 2 common neighbors.
    std::vector<int> common(n, 0);
    for (int v = 0; v < n; ++v) {
        std::fill(common.begin(), common.end(), 0);
        for (int w : adj[v])
            for (int u : adj[w])
                if (u > v && ++common[u] >= 2) return false;
    }
    return true;
}

void GenConstraints::validate(int n) const {
    if (min_edges < 0) throw std::invalid_argument("GenConstraints: negative edge bound");
    if (max_edges >= 0 && min_edges > max_edges)
        throw std::invalid_argument("GenConstraints: edge range lower bound exceeds upper");
    if (n > 0 && min_degree >= n && min_degree > 0)
        throw std::invalid_argument("GenConstraints: min_degree must be < n");
    if (min_degree < 0) throw std::invalid_argument("GenConstraints: negative min_degree");
}

}  // namespace pow2lab
