#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pow2lab/graph.hpp"

namespace pow2lab {

// Canonical labeling of a graph on <= 64 vertices. The code is the
// lexicographically greatest relabeled adjacency matrix, one word per row
// with column j stored at bit (63 - j); identical codes <=> isomorphic
// graphs. The automorphism list holds the generators discovered during the
// search (enough for orbit pruning; not guaranteed to generate the full
// group).
struct CanonResult {
    std::vector<int> relabel;  // old -> new
    std::vector<std::uint64_t> code;
    std::vector<std::vector<int>> automorphisms;  // old -> old, identity omitted
};

CanonResult canonical_form(int n, const std::vector<std::uint64_t>& adj);
CanonResult canonical_form(const Graph& g);

Graph graph_from_code(int n, const std::vector<std::uint64_t>& code);
Graph canonical_graph(const Graph& g);
// write_graph6 of the canonical relabeling; stable cache/dedup key.
std::string canonical_graph6(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

// Orbit partition of the vertex set under the given permutations: orbit[v]
// is the smallest vertex in v's orbit.
std::vector<int> vertex_orbits(int n, const std::vector<std::vector<int>>& perms);

// Orbit representatives among the given unordered vertex pairs under the
// permutation group generated by perms. Returns indices into `pairs` of one
// representative (the first in list order) per orbit.
std::vector<int> pair_orbit_reps(int n, const std::vector<std::vector<int>>& perms,
                                 const std::vector<std::pair<int, int>>& pairs);

}  // namespace pow2lab
