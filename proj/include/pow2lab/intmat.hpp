#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "pow2lab/graph.hpp"
#include "pow2lab/linpoly.hpp"

namespace pow2lab {

// Dense arbitrary-precision integer matrix, row-major. Zero-row and
// zero-column shapes are valid (an n x 0 matrix is n empty rows).
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {}
    IntMatrix(int rows, int cols, std::vector<mpz_class> entries);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const mpz_class& at(int r, int c) const { return e_[static_cast<size_t>(r) * cols_ + c]; }
    mpz_class& at(int r, int c) { return e_[static_cast<size_t>(r) * cols_ + c]; }

    std::vector<mpz_class> row(int r) const;
    IntMatrix transposed() const;
    bool operator==(const IntMatrix& o) const = default;

    static IntMatrix identity(int n);

private:
    int rows_ = 0, cols_ = 0;
    std::vector<mpz_class> e_;
};

using RatVector = std::vector<mpq_class>;

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

// m x n incidence matrix: row e holds 1s at the endpoints of edge e, edge
// order matching the graph's sorted edge list.
IntMatrix incidence_matrix(const Graph& g);

// Row-style Hermite normal form (pivots positive, entries above each pivot
// reduced into [0, pivot), zero rows trimmed). Canonical per lattice row
// span, used for lattice-equality checks.
IntMatrix hnf(const IntMatrix& m);

int rank(const IntMatrix& m);

// Integer lattice basis of { w : w * M = 0 }, one basis vector per row;
// rows() = M.rows() - rank(M).
IntMatrix left_kernel_basis(const IntMatrix& m);

// Integer lattice basis of { v : M * v = 0 }, one basis vector per column.
IntMatrix right_kernel_basis(const IntMatrix& m);

// LLL reduction of the rows of B (delta = 3/4). Requires linearly
// independent rows; spans the same lattice.
IntMatrix lll_reduce(const IntMatrix& b);

// Particular solution of M * L = X with the entries of X symbolic: returns
// one linear polynomial in x_1..x_m per column of M, with free columns
// pinned to zero and deterministic pivoting (leftmost column, smallest row).
std::vector<LinPoly> solve_parametric(const IntMatrix& m);

// Rational solution of M * L = X for concrete X, free variables zero;
// nullopt when inconsistent.
std::optional<RatVector> solve_exact(const IntMatrix& m, const std::vector<mpz_class>& x);

}  // namespace pow2lab
