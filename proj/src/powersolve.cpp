#include "pow2lab/powersolve.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pow2lab {

std::vector<int> SolutionMap::free_vars() const {
    std::vector<int> f;
    for (int i = 0; i < var_count(); ++i)
        if (is_free(i)) f.push_back(i);
    return f;
}

std::vector<long> SolutionMap::exponents(const std::vector<long>& free_values) const {
    std::vector<long> y(assignment.size());
    for (size_t i = 0; i < assignment.size(); ++i)
        y[i] = free_values[assignment[i].root] + assignment[i].offset;
    return y;
}

bool SolutionMap::matches(const std::vector<long>& y) const {
    if (y.size() != assignment.size()) return false;
    for (size_t i = 0; i < assignment.size(); ++i)
        if (y[i] != y[assignment[i].root] + assignment[i].offset) return false;
    return true;
}

std::string SolutionMap::to_string() const {
    std::ostringstream out;
    for (size_t i = 0; i < assignment.size(); ++i) {
        if (i) out << ", ";
        out << "x" << (i + 1) << " = 2^" << render_exponent(assignment[i]);
    }
    return out.str();
}

namespace {

void add_normalized(std::vector<LinPoly>& set, const LinPoly& p) {
    LinPoly q = p.integerized();
    if (q.is_zero()) throw std::invalid_argument("PowerSystem: zero polynomial");
    if (std::find(set.begin(), set.end(), q) == set.end()) set.push_back(q);
}

}  // namespace

void PowerSystem::add_equation(const LinPoly& p) { add_normalized(equations, p); }
void PowerSystem::add_inequation(const LinPoly& p) { add_normalized(inequations, p); }

const LinPoly& pick_equation(const std::vector<LinPoly>& equations) {
    if (equations.empty()) throw std::invalid_argument("pick_equation: empty set");
    const LinPoly* best = &equations.front();
    for (const auto& e : equations) {
        if (e.term_count() != best->term_count()) {
            if (e.term_count() < best->term_count()) best = &e;
            continue;
        }
        if (e.order(*best) == std::strong_ordering::less) best = &e;
    }
    return *best;
}

namespace {

// One level of the pair-substitution recursion. E and N hold integerized,
// deduplicated polynomials; N additionally has no single-term members.
std::vector<SolutionMap> solve_rec(const std::vector<LinPoly>& equations,
                                   const std::vector<LinPoly>& inequations, int var_count,
                                   SolveStats* stats) {
    if (stats) ++stats->systems;
    if (equations.empty()) {
        SolutionMap identity;
        identity.assignment.resize(var_count);
        for (int i = 0; i < var_count; ++i) identity.assignment[i] = ExpExpr{i, 0};
        return {identity};
    }
    const LinPoly picked = pick_equation(equations);
    const auto support = picked.support();
    if (support.size() == 1) return {};  // single term: no solution in powers of 2

    std::vector<SolutionMap> solutions;
    std::vector<LinPoly> working_n = inequations;

    for (size_t a = 0; a < support.size(); ++a) {
        for (size_t b = a + 1; b < support.size(); ++b) {
            if (stats) ++stats->branches;
            int i = support[a], j = support[b];
            // orient so that the eliminated variable x_j picks up a
            // nonnegative exponent shift: need nu2(c_i) >= nu2(c_j)
            auto vi = nu2(mpz_class(picked.coeff(i).get_num()));
            auto vj = nu2(mpz_class(picked.coeff(j).get_num()));
            if (!vi || !vj) throw std::logic_error("solve_in_powers: zero coefficient in support");
            if (*vi < *vj) std::swap(i, j);
            unsigned long d = (i == support[a]) ? *vi - *vj : *vj - *vi;

            // N' first; the branch dies if any inequation collapses to zero
            std::vector<LinPoly> n_prime;
            bool dead = false;
            for (const auto& q : working_n) {
                LinPoly s = q.substitute(j, i, d);
                if (s.is_zero()) {
                    dead = true;
                    break;
                }
                if (s.term_count() == 1) continue;  // always nonzero
                LinPoly norm = s.integerized();
                if (std::find(n_prime.begin(), n_prime.end(), norm) == n_prime.end())
                    n_prime.push_back(std::move(norm));
            }
            if (dead) continue;

            // dedup inequation guards later sibling pairs only
            {
                mpz_class pow;
                mpz_ui_pow_ui(pow.get_mpz_t(), 2, d);
                LinPoly guard = LinPoly::variable(j) - LinPoly::variable(i, mpq_class(pow));
                LinPoly norm = guard.integerized();
                if (std::find(working_n.begin(), working_n.end(), norm) == working_n.end())
                    working_n.push_back(std::move(norm));
            }

            std::vector<LinPoly> e_prime;
            for (const auto& p : equations) {
                LinPoly s = p.substitute(j, i, d);
                if (s.is_zero()) continue;
                LinPoly norm = s.integerized();
                if (std::find(e_prime.begin(), e_prime.end(), norm) == e_prime.end())
                    e_prime.push_back(std::move(norm));
            }

            for (SolutionMap s : solve_rec(e_prime, n_prime, var_count, stats)) {
                // compose: the recursive maps never touch y_j, so attach it
                // to the (possibly further-substituted) kept variable
                s.assignment[j] = ExpExpr{s.assignment[i].root,
                                          s.assignment[i].offset + static_cast<long>(d)};
                solutions.push_back(std::move(s));
            }
        }
    }
    return solutions;
}

}  // namespace

std::vector<SolutionMap> solve_in_powers(const PowerSystem& sys, int var_count, SolveStats* stats) {
    return solve_rec(sys.equations, sys.inequations, var_count, stats);
}

std::vector<mpz_class> powers_of_two(const std::vector<long>& exponents) {
    std::vector<mpz_class> x(exponents.size());
    for (size_t i = 0; i < exponents.size(); ++i) {
        if (exponents[i] < 0) throw std::invalid_argument("powers_of_two: negative exponent");
        mpz_ui_pow_ui(x[i].get_mpz_t(), 2, static_cast<unsigned long>(exponents[i]));
    }
    return x;
}

std::optional<std::vector<long>> instantiate_free(const SolutionMap& s,
                                                  const std::vector<LinPoly>& residual,
                                                  int budget, long base_shift,
                                                  SolveStats* stats) {
    const int m = s.var_count();
    auto free_list = s.free_vars();

    // Residual inequations must not be identically zero under s: group the
    // coefficients by root variable.
    long max_offset = 0;
    for (const auto& e : s.assignment) max_offset = std::max(max_offset, e.offset);
    long max_bits = 1;
    std::vector<LinPoly> checks;
    checks.reserve(residual.size());
    for (const auto& q : residual) checks.push_back(q.integerized());
    for (const auto& q : checks) {
        mpz_class total = 0;
        for (const auto& [v, c] : q.terms()) {
            if (v < 1 || v > m) throw std::invalid_argument("instantiate_free: variable out of range");
            total += abs(c.get_num());
        }
        if (total == 0) continue;
        max_bits = std::max(max_bits, static_cast<long>(mpz_sizeinbase(total.get_mpz_t(), 2)));
    }
    const long gap = max_bits + max_offset + 1;

    for (int attempt = 0; attempt < budget; ++attempt) {
        if (stats) ++stats->instantiations;
        std::vector<long> free_values(m, 0);
        long base = base_shift + attempt;
        for (size_t t = 0; t < free_list.size(); ++t)
            free_values[free_list[t]] = base + static_cast<long>(t) * gap;
        auto y = s.exponents(free_values);
        auto x = powers_of_two(y);
        bool ok = true;
        for (const auto& q : checks)
            if (q.evaluate(x) == 0) {
                ok = false;
                break;
            }
        if (ok) return y;
    }
    if (stats) ++stats->families_failed;
    return std::nullopt;
}

}  // namespace pow2lab
