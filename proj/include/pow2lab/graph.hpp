#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pow2lab {

// Simple undirected graph. Vertices are 0..n-1; the edge list stores (u,v)
// with u < v, sorted lexicographically, with no loops or duplicates.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<std::pair<int, int>> edges);

    static Graph empty(int n) { return Graph(n, {}); }
    static Graph path(int n);
    static Graph cycle(int n);
    static Graph complete(int n);

    int order() const { return n_; }
    int size() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    bool has_edge(int u, int v) const;
    int degree(int v) const;
    std::vector<int> degrees() const;
    std::vector<std::vector<int>> adjacency_lists() const;
    // One bitmask per vertex; requires order <= 64.
    std::vector<std::uint64_t> adjacency_masks() const;

    Graph with_edge(int u, int v) const;
    Graph without_edge(int u, int v) const;
    Graph without_vertex(int v) const;
    Graph relabeled(const std::vector<int>& perm) const;  // perm[old] = new

    bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
};

bool is_connected(const Graph& g);
// Returns the two-coloring (0/1 per vertex) when bipartite, nullopt otherwise.
std::optional<std::vector<int>> bipartition(const Graph& g);
bool is_bipartite(const Graph& g);
// True iff no 4-cycle exists as a subgraph; equivalently no vertex pair has
// two or more common neighbors.
bool is_c4_free(const Graph& g);
int component_count(const Graph& g);

// Generation constraints mirroring the candidate filters used by the
// admissibility searches.
struct GenConstraints {
    bool connected = false;
    bool c4_free = false;
    int min_degree = 0;
    long min_edges = 0;
    long max_edges = -1;  // -1: no explicit cap

    void validate(int n) const;
};

}  // namespace pow2lab
