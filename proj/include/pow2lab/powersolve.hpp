#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "pow2lab/linpoly.hpp"

namespace pow2lab {

// Parametric family of power-of-2 assignments: x_i = 2^{assignment[i]} with
// free variables mapping to themselves.
struct SolutionMap {
    std::vector<ExpExpr> assignment;

    int var_count() const { return static_cast<int>(assignment.size()); }
    bool is_free(int i) const { return assignment[i].root == i && assignment[i].offset == 0; }
    std::vector<int> free_vars() const;

    // Concrete exponents from values assigned to the free variables
    // (free_values indexed by variable; only roots are read).
    std::vector<long> exponents(const std::vector<long>& free_values) const;
    // True iff the concrete exponent tuple matches this family's pattern.
    bool matches(const std::vector<long>& y) const;

    std::string to_string() const;
    bool operator==(const SolutionMap&) const = default;
};

// Equations E and inequations N, both integerized, nonzero, deduplicated.
struct PowerSystem {
    std::vector<LinPoly> equations;
    std::vector<LinPoly> inequations;

    void add_equation(const LinPoly& p);
    void add_inequation(const LinPoly& p);
};

struct SolveStats {
    long branches = 0;         // pair branches explored
    long systems = 0;          // recursive invocations
    long instantiations = 0;   // concrete instantiation attempts
    long families_failed = 0;  // families whose instantiation budget ran out
};

// Equation of minimal support; ties resolved by lexicographic support then
// smallest coefficient magnitudes.
const LinPoly& pick_equation(const std::vector<LinPoly>& equations);

// All parametric families covering the solutions of the system in powers of
// 2, per the recursive pair-substitution search. An empty result means the
// system has no solutions.
std::vector<SolutionMap> solve_in_powers(const PowerSystem& sys, int var_count,
                                         SolveStats* stats = nullptr);

// Concrete nonnegative exponents for the free variables of s making every
// residual inequation evaluate nonzero, by exact evaluation; widening gaps
// are retried up to `budget` times. base_shift raises every exponent
// uniformly (used to clear denominators downstream).
std::optional<std::vector<long>> instantiate_free(const SolutionMap& s,
                                                  const std::vector<LinPoly>& residual,
                                                  int budget, long base_shift = 0,
                                                  SolveStats* stats = nullptr);

// Evaluation helper: x_i = 2^{y_i} as exact integers.
std::vector<mpz_class> powers_of_two(const std::vector<long>& exponents);

}  // namespace pow2lab
