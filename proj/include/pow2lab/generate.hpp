#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "pow2lab/graph.hpp"

namespace pow2lab {

// Isomorph-free stream of graphs of order n satisfying the constraints.
// Exactly one representative per isomorphism class, in nondecreasing edge
// count; ties within an edge count follow the lexicographic order of the
// canonical codes. Built by breadth-first edge augmentation: stratum e+1 is
// obtained from stratum e by adding one edge in every inequivalent way,
// pruning additions that create a 4-cycle when c4_free is set and additions
// that cannot reach the constraint window.
class GraphGenerator {
public:
    GraphGenerator(int n, GenConstraints c);

    // Next graph in the pinned stream order, or nullopt when exhausted.
    std::optional<Graph> next();

    // Current stratum edge count (the edge count of the last graph yielded).
    long current_edge_count() const { return stratum_edges_; }

private:
    using Code = std::vector<std::uint64_t>;

    void advance_stratum();
    bool admits_to_window(const Graph& g) const;

    int n_;
    GenConstraints c_;
    long stratum_edges_ = -1;
    long max_edges_ = 0;
    std::set<Code> stratum_;
    std::set<Code>::const_iterator cursor_;
    bool exhausted_ = false;
};

// Convenience: materialize the full stream.
std::vector<Graph> generate_all(int n, const GenConstraints& c);

// All graphs obtained from g by joining one new vertex to a k-subset of the
// old vertices, reduced up to isomorphism, in canonical-code order.
std::vector<Graph> extend_with_vertex(const Graph& g, int k, bool require_c4_free = false);

}  // namespace pow2lab
