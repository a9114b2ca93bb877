#pragma once

#include <gmpxx.h>

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pow2lab {

// 2-adic valuation: exponent of 2 in k, ignoring sign. nullopt encodes the
// infinite valuation of 0.
std::optional<unsigned long> nu2(const mpz_class& k);

// Homogeneous linear polynomial over variables x_1..x_m with exact rational
// coefficients. Zero coefficients are never stored; the zero polynomial is
// the empty map.
class LinPoly {
public:
    LinPoly() = default;

    static LinPoly variable(int index, const mpq_class& coeff = 1);

    const std::map<int, mpq_class>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int term_count() const { return static_cast<int>(terms_.size()); }
    std::vector<int> support() const;

    mpq_class coeff(int index) const;
    void set_coeff(int index, const mpq_class& c);

    LinPoly operator+(const LinPoly& o) const;
    LinPoly operator-(const LinPoly& o) const;
    LinPoly operator*(const mpq_class& c) const;
    LinPoly operator-() const;
    bool operator==(const LinPoly& o) const { return terms_ == o.terms_; }

    // Total order used for deterministic set handling: support sets compared
    // lexicographically, then coefficient magnitudes, then signs.
    std::strong_ordering order(const LinPoly& o) const;
    bool operator<(const LinPoly& o) const { return order(o) == std::strong_ordering::less; }

    // Folds x_j into x_i as c_i + 2^d * c_j. Terms that cancel disappear.
    LinPoly substitute(int j, int i, unsigned long d) const;

    // Positive rational rescaling to integer coefficients with gcd 1.
    LinPoly integerized() const;
    bool has_integer_coeffs() const;

    // Evaluates at explicit values (values indexed by variable, 1-based).
    mpq_class evaluate(const std::vector<mpz_class>& values) const;

    std::string to_string() const;

private:
    std::map<int, mpq_class> terms_;
};

// Parses the rendering produced by LinPoly::to_string, e.g. "x1 - 2*x3".
LinPoly parse_linpoly(const std::string& text);

// Exponent of a power-of-2 unknown: a free variable plus a nonnegative
// offset. Variable indices are 0-based internally.
struct ExpExpr {
    int root = 0;
    long offset = 0;

    bool operator==(const ExpExpr&) const = default;
};

std::string render_exponent(const ExpExpr& e);

}  // namespace pow2lab
