#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "pow2lab/graph.hpp"
#include "pow2lab/intmat.hpp"
#include "pow2lab/powersolve.hpp"

namespace pow2lab {

// Witness labeling: pairwise distinct integers, one per vertex, with every
// edge sum a power of 2.
using Labeling = std::vector<mpz_class>;

struct GraphSolveOptions {
    bool use_lll = true;
    int instantiation_budget = 64;
    bool want_witness = true;
};

struct Verdict {
    bool admissible = false;
    std::optional<Labeling> witness;
    std::vector<SolutionMap> families;
    SolveStats stats;

    // admissible with no witness constructed within the budget: a distinct
    // outcome that is reported, never silently upgraded
    bool witness_constructed() const { return witness.has_value(); }
};

// Number of 2-element subsets of a (pairwise distinct) set summing to a
// power of 2.
long f_value(const std::vector<mpz_class>& a);

bool is_power_of_two(const mpz_class& v);

// True iff labels are pairwise distinct integers and every edge sum is a
// power of 2 (exact arithmetic).
bool verify_labeling(const Graph& g, const Labeling& labels);

// Adds a linear combination of the kernel columns to v so that all entries
// become pairwise distinct, assuming entries at equal kernel rows are
// already distinct. Throws std::logic_error when that precondition fails.
std::vector<mpz_class> distinctify(const RatVector& v, const IntMatrix& kernel_cols);

// The equation/inequation system of a graph: equations from the left kernel
// of the incidence matrix, inequations from particular-solution differences
// at equal right-kernel rows. `contradiction` marks a forced equal pair
// (the graph is inadmissible outright).
struct GraphSystem {
    PowerSystem sys;
    std::vector<LinPoly> particular;
    IntMatrix right_kernel;
    bool contradiction = false;
};

GraphSystem build_power_system(const Graph& g, bool use_lll = true);

// Full admissibility decision with witness construction.
Verdict graph_solve(const Graph& g, const GraphSolveOptions& opts = {});

class MfsSet;  // search module

// Fast path: subgraph test against cached minimal forbidden subgraphs, then
// the full solve.
bool is_admissible(const Graph& g, const MfsSet& mfs, const GraphSolveOptions& opts = {});

}  // namespace pow2lab
