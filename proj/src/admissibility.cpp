#include "pow2lab/admissibility.hpp"

#include <algorithm>
#include <stdexcept>

#include "pow2lab/search.hpp"
#include "pow2lab/subgraph.hpp"

namespace pow2lab {

bool is_power_of_two(const mpz_class& v) {
    if (v <= 0) return false;
    return mpz_popcount(v.get_mpz_t()) == 1;
}

long f_value(const std::vector<mpz_class>& a) {
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = i + 1; j < a.size(); ++j)
            if (a[i] == a[j]) throw std::invalid_argument("f_value: elements must be distinct");
    long count = 0;
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = i + 1; j < a.size(); ++j)
            if (is_power_of_two(a[i] + a[j])) ++count;
    return count;
}

bool verify_labeling(const Graph& g, const Labeling& labels) {
    if (static_cast<int>(labels.size()) != g.order()) return false;
    for (size_t i = 0; i < labels.size(); ++i)
        for (size_t j = i + 1; j < labels.size(); ++j)
            if (labels[i] == labels[j]) return false;
    for (const auto& [u, v] : g.edges())
        if (!is_power_of_two(labels[u] + labels[v])) return false;
    return true;
}

std::vector<mpz_class> distinctify(const RatVector& v, const IntMatrix& kernel_cols) {
    const int n = static_cast<int>(v.size());
    if (kernel_cols.rows() != n) throw std::invalid_argument("distinctify: row count mismatch");
    for (const auto& q : v)
        if (q.get_den() != 1) throw std::logic_error("distinctify: non-integral input");

    const int s = kernel_cols.cols();
    auto rows_equal = [&](int i, int j) {
        for (int c = 0; c < s; ++c)
            if (kernel_cols.at(i, c) != kernel_cols.at(j, c)) return false;
        return true;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rows_equal(i, j) && v[i] == v[j])
                throw std::logic_error("distinctify: equal kernel rows with equal entries");

    std::vector<mpz_class> out(n);
    for (int i = 0; i < n; ++i) out[i] = v[i].get_num();
    if (n <= 1 || s == 0) return out;

    // collapse the kernel columns to one injective-on-distinct-rows column
    // via base-(d+1) weights, d the spread of the kernel entries
    mpz_class lo = kernel_cols.at(0, 0), hi = kernel_cols.at(0, 0);
    for (int i = 0; i < n; ++i)
        for (int c = 0; c < s; ++c) {
            lo = std::min(lo, kernel_cols.at(i, c));
            hi = std::max(hi, kernel_cols.at(i, c));
        }
    mpz_class base = hi - lo + 1;
    std::vector<mpz_class> collapsed(n, 0);
    mpz_class weight = 1;
    for (int c = 0; c < s; ++c) {
        for (int i = 0; i < n; ++i) collapsed[i] += kernel_cols.at(i, c) * weight;
        weight *= base;
    }

    // scale by the spread of v plus one so kernel differences dominate
    mpz_class vlo = out[0], vhi = out[0];
    for (const auto& x : out) {
        vlo = std::min(vlo, x);
        vhi = std::max(vhi, x);
    }
    mpz_class scale = vhi - vlo + 1;
    for (int i = 0; i < n; ++i) out[i] += collapsed[i] * scale;

    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (out[i] == out[j]) throw std::logic_error("distinctify: construction failed");
    return out;
}

namespace {

bool denominator_is_power_of_two(const LinPoly& p) {
    for (const auto& [v, c] : p.terms()) {
        mpz_class den = c.get_den();
        if (den != 1 && !is_power_of_two(den)) return false;
    }
    return true;
}

long max_denominator_exponent(const std::vector<LinPoly>& polys) {
    long k = 0;
    for (const auto& p : polys)
        for (const auto& [v, c] : p.terms()) {
            mpz_class den = c.get_den();
            if (den == 1) continue;
            auto val = nu2(den);
            k = std::max(k, static_cast<long>(val ? *val : 0));
        }
    return k;
}

}  // namespace

GraphSystem build_power_system(const Graph& g, bool use_lll) {
    GraphSystem out;
    const int n = g.order();
    const int m = g.size();

    IntMatrix incidence = incidence_matrix(g);

    IntMatrix kl = left_kernel_basis(incidence);
    if (use_lll && kl.rows() >= 2) kl = lll_reduce(kl);

    for (int r = 0; r < kl.rows(); ++r) {
        LinPoly row_poly;
        for (int e = 0; e < m; ++e) row_poly.set_coeff(e + 1, mpq_class(kl.at(r, e)));
        if (!row_poly.is_zero()) out.sys.add_equation(row_poly);
    }

    out.particular = solve_parametric(incidence);
    for (const auto& p : out.particular)
        if (!denominator_is_power_of_two(p))
            throw std::logic_error("graph_solve: incidence solution with non-2-power denominator");

    out.right_kernel = right_kernel_basis(incidence);
    const IntMatrix& kr = out.right_kernel;

    // pairs of vertices whose kernel rows coincide must receive distinct
    // labels through the inequations
    auto rows_equal = [&](int i, int j) {
        for (int c = 0; c < kr.cols(); ++c)
            if (kr.at(i, c) != kr.at(j, c)) return false;
        return true;
    };
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (!rows_equal(i, j)) continue;
            LinPoly q = (out.particular[i] - out.particular[j]).integerized();
            if (q.is_zero()) {
                out.contradiction = true;  // l_i == l_j forced
                return out;
            }
            if (q.term_count() >= 2) out.sys.add_inequation(q);
        }
    }
    return out;
}

Verdict graph_solve(const Graph& g, const GraphSolveOptions& opts) {
    Verdict verdict;
    const int m = g.size();

    GraphSystem system = build_power_system(g, opts.use_lll);
    if (system.contradiction) return verdict;
    const PowerSystem& sys = system.sys;
    const std::vector<LinPoly>& particular = system.particular;
    const IntMatrix& kr = system.right_kernel;
    IntMatrix incidence = incidence_matrix(g);

    verdict.families = solve_in_powers(sys, m, &verdict.stats);
    verdict.admissible = !verdict.families.empty();
    if (!verdict.admissible || !opts.want_witness) return verdict;

    const long base_shift = max_denominator_exponent(particular);
    for (const auto& family : verdict.families) {
        auto y = instantiate_free(family, sys.inequations, opts.instantiation_budget, base_shift,
                                  &verdict.stats);
        if (!y) continue;
        auto x = powers_of_two(*y);

        // equations must vanish exactly at the instantiated point
        for (const auto& eq : sys.equations)
            if (eq.evaluate(x) != 0) throw std::logic_error("graph_solve: family violates an equation");

        auto sol = solve_exact(incidence, x);
        if (!sol) throw std::logic_error("graph_solve: inconsistent system from a solved family");
        Labeling labels = distinctify(*sol, kr);
        if (verify_labeling(g, labels)) {
            verdict.witness = std::move(labels);
            break;
        }
    }
    return verdict;
}

bool is_admissible(const Graph& g, const MfsSet& mfs, const GraphSolveOptions& opts) {
    for (const Graph& h : mfs.members()) {
        if (h.order() > g.order() || h.size() > g.size()) continue;
        if (contains_subgraph(g, h)) return false;
    }
    GraphSolveOptions fast = opts;
    fast.want_witness = false;
    return graph_solve(g, fast).admissible;
}

}  // namespace pow2lab
