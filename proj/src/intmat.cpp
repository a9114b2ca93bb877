#include "pow2lab/intmat.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace pow2lab {

IntMatrix::IntMatrix(int rows, int cols, std::vector<mpz_class> entries)
    : rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (e_.size() != static_cast<size_t>(rows) * cols)
        throw std::invalid_argument("IntMatrix: entry count does not match dimensions");
}

std::vector<mpz_class> IntMatrix::row(int r) const {
    return std::vector<mpz_class>(e_.begin() + static_cast<size_t>(r) * cols_,
                                  e_.begin() + static_cast<size_t>(r + 1) * cols_);
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
    IntMatrix r(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            if (a.at(i, k) == 0) continue;
            for (int j = 0; j < b.cols(); ++j) r.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return r;
}

IntMatrix incidence_matrix(const Graph& g) {
    IntMatrix m(g.size(), g.order());
    for (int e = 0; e < g.size(); ++e) {
        m.at(e, g.edges()[e].first) = 1;
        m.at(e, g.edges()[e].second) = 1;
    }
    return m;
}

namespace {

// Integer row echelon via extended Euclid on rows; U tracks the unimodular
// row operations (U * A = H). Pivot choice: leftmost nonzero column, and
// among candidate rows the smallest |entry| with the smallest row index.
struct Echelon {
    IntMatrix h, u;
    int rank = 0;
};

Echelon echelon_with_transform(const IntMatrix& a) {
    Echelon res{a, IntMatrix::identity(a.rows()), 0};
    IntMatrix& h = res.h;
    IntMatrix& u = res.u;
    int m = a.rows(), n = a.cols();
    int top = 0;
    auto swap_rows = [&](IntMatrix& mat, int r1, int r2) {
        for (int c = 0; c < mat.cols(); ++c) std::swap(mat.at(r1, c), mat.at(r2, c));
    };
    auto addmul_row = [&](IntMatrix& mat, int dst, int src, const mpz_class& q) {
        for (int c = 0; c < mat.cols(); ++c) mat.at(dst, c) += q * mat.at(src, c);
    };
    for (int col = 0; col < n && top < m; ++col) {
        while (true) {
            int pivot = -1;
            for (int r = top; r < m; ++r) {
                if (h.at(r, col) == 0) continue;
                if (pivot < 0 || cmp(abs(h.at(r, col)), abs(h.at(pivot, col))) < 0) pivot = r;
            }
            if (pivot < 0) break;  // column clear below top
            if (pivot != top) {
                swap_rows(h, top, pivot);
                swap_rows(u, top, pivot);
            }
            bool reduced_all = true;
            for (int r = top + 1; r < m; ++r) {
                if (h.at(r, col) == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), h.at(r, col).get_mpz_t(), h.at(top, col).get_mpz_t());
                addmul_row(h, r, top, -q);
                addmul_row(u, r, top, -q);
                if (h.at(r, col) != 0) reduced_all = false;
            }
            if (reduced_all) break;
        }
        if (h.at(top, col) != 0) {
            if (h.at(top, col) < 0) {
                for (int c = 0; c < n; ++c) h.at(top, c) = -h.at(top, c);
                for (int c = 0; c < m; ++c) u.at(top, c) = -u.at(top, c);
            }
            ++top;
        }
    }
    res.rank = top;
    return res;
}

}  // namespace

IntMatrix hnf(const IntMatrix& m) {
    Echelon ech = echelon_with_transform(m);
    IntMatrix& h = ech.h;
    // reduce entries above each pivot into [0, pivot)
    std::vector<int> pivot_col(ech.rank);
    for (int r = 0; r < ech.rank; ++r) {
        int c = 0;
        while (h.at(r, c) == 0) ++c;
        pivot_col[r] = c;
    }
    for (int r = ech.rank - 1; r >= 0; --r) {
        for (int above = 0; above < r; ++above) {
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), h.at(above, pivot_col[r]).get_mpz_t(), h.at(r, pivot_col[r]).get_mpz_t());
            if (q == 0) continue;
            for (int c = 0; c < h.cols(); ++c) h.at(above, c) -= q * h.at(r, c);
        }
    }
    IntMatrix out(ech.rank, m.cols());
    for (int r = 0; r < ech.rank; ++r)
        for (int c = 0; c < m.cols(); ++c) out.at(r, c) = h.at(r, c);
    return out;
}

int rank(const IntMatrix& m) { return echelon_with_transform(m).rank; }

IntMatrix left_kernel_basis(const IntMatrix& m) {
    Echelon ech = echelon_with_transform(m);
    int kernel_rows = m.rows() - ech.rank;
    IntMatrix out(kernel_rows, m.rows());
    for (int r = 0; r < kernel_rows; ++r)
        for (int c = 0; c < m.rows(); ++c) out.at(r, c) = ech.u.at(ech.rank + r, c);
    return out;
}

IntMatrix right_kernel_basis(const IntMatrix& m) {
    return left_kernel_basis(m.transposed()).transposed();
}

IntMatrix lll_reduce(const IntMatrix& b) {
    const int n = b.rows();
    if (n <= 1) return b;
    IntMatrix basis = b;
    const int dim = b.cols();

    // rational Gram-Schmidt data
    std::vector<std::vector<mpq_class>> mu(n, std::vector<mpq_class>(n));
    std::vector<mpq_class> norm(n);  // squared lengths of the GS vectors

    auto gram_schmidt = [&]() {
        std::vector<std::vector<mpq_class>> gs(n, std::vector<mpq_class>(dim));
        for (int i = 0; i < n; ++i) {
            for (int c = 0; c < dim; ++c) gs[i][c] = mpq_class(basis.at(i, c));
            for (int j = 0; j < i; ++j) {
                mpq_class proj = 0;
                for (int c = 0; c < dim; ++c) proj += mpq_class(basis.at(i, c)) * gs[j][c];
                if (norm[j] != 0) proj /= norm[j];
                mu[i][j] = proj;
                for (int c = 0; c < dim; ++c) gs[i][c] -= proj * gs[j][c];
            }
            mpq_class len = 0;
            for (int c = 0; c < dim; ++c) len += gs[i][c] * gs[i][c];
            norm[i] = len;
        }
    };

    auto size_reduce = [&](int i, int j) {
        mpq_class r = mu[i][j];
        mpz_class q;
        // nearest integer to r
        mpq_class half(1, 2);
        mpq_class shifted = r + half;
        mpz_fdiv_q(q.get_mpz_t(), shifted.get_num().get_mpz_t(), shifted.get_den().get_mpz_t());
        if (q == 0) return;
        for (int c = 0; c < dim; ++c) basis.at(i, c) -= q * basis.at(j, c);
    };

    gram_schmidt();
    int k = 1;
    const mpq_class delta(3, 4);
    while (k < n) {
        for (int j = k - 1; j >= 0; --j) {
            size_reduce(k, j);
            gram_schmidt();
        }
        if (norm[k] >= (delta - mu[k][k - 1] * mu[k][k - 1]) * norm[k - 1]) {
            ++k;
        } else {
            for (int c = 0; c < dim; ++c) std::swap(basis.at(k, c), basis.at(k - 1, c));
            gram_schmidt();
            k = std::max(k - 1, 1);
        }
    }
    return basis;
}

std::vector<LinPoly> solve_parametric(const IntMatrix& m) {
    const int rows = m.rows(), cols = m.cols();
    // rational Gauss-Jordan on [M | I], tracking row operations applied to a
    // symbolic right-hand side
    std::vector<std::vector<mpq_class>> a(rows, std::vector<mpq_class>(cols));
    std::vector<std::vector<mpq_class>> r(rows, std::vector<mpq_class>(rows));
    for (int i = 0; i < rows; ++i) {
        r[i][i] = 1;
        for (int j = 0; j < cols; ++j) a[i][j] = mpq_class(m.at(i, j));
    }
    std::vector<int> pivot_of_col(cols, -1);
    int top = 0;
    for (int col = 0; col < cols && top < rows; ++col) {
        int pivot = -1;
        for (int i = top; i < rows; ++i)
            if (a[i][col] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[pivot], a[top]);
        std::swap(r[pivot], r[top]);
        mpq_class inv = a[top][col];
        for (auto& v : a[top]) v /= inv;
        for (auto& v : r[top]) v /= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == top || a[i][col] == 0) continue;
            mpq_class f = a[i][col];
            for (int j = 0; j < cols; ++j) a[i][j] -= f * a[top][j];
            for (int j = 0; j < rows; ++j) r[i][j] -= f * r[top][j];
        }
        pivot_of_col[col] = top;
        ++top;
    }
    std::vector<LinPoly> p(cols);
    for (int col = 0; col < cols; ++col) {
        int pr = pivot_of_col[col];
        if (pr < 0) continue;  // free column: zero polynomial
        LinPoly poly;
        for (int j = 0; j < rows; ++j) poly.set_coeff(j + 1, r[pr][j]);
        p[col] = std::move(poly);
    }
    return p;
}

std::optional<RatVector> solve_exact(const IntMatrix& m, const std::vector<mpz_class>& x) {
    if (static_cast<int>(x.size()) != m.rows()) throw std::invalid_argument("solve_exact: rhs size mismatch");
    const int rows = m.rows(), cols = m.cols();
    std::vector<std::vector<mpq_class>> a(rows, std::vector<mpq_class>(cols + 1));
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) a[i][j] = mpq_class(m.at(i, j));
        a[i][cols] = mpq_class(x[i]);
    }
    std::vector<int> pivot_of_col(cols, -1);
    int top = 0;
    for (int col = 0; col < cols && top < rows; ++col) {
        int pivot = -1;
        for (int i = top; i < rows; ++i)
            if (a[i][col] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[pivot], a[top]);
        mpq_class inv = a[top][col];
        for (auto& v : a[top]) v /= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == top || a[i][col] == 0) continue;
            mpq_class f = a[i][col];
            for (int j = 0; j <= cols; ++j) a[i][j] -= f * a[top][j];
        }
        pivot_of_col[col] = top;
        ++top;
    }
    for (int i = top; i < rows; ++i)
        if (a[i][cols] != 0) return std::nullopt;  // inconsistent
    RatVector sol(cols, mpq_class(0));
    for (int col = 0; col < cols; ++col)
        if (pivot_of_col[col] >= 0) sol[col] = a[pivot_of_col[col]][cols];
    return sol;
}

}  // namespace pow2lab
