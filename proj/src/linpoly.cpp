#include "pow2lab/linpoly.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace pow2lab {

std::optional<unsigned long> nu2(const mpz_class& k) {
    if (k == 0) return std::nullopt;
    return mpz_scan1(k.get_mpz_t(), 0);
}

LinPoly LinPoly::variable(int index, const mpq_class& coeff) {
    LinPoly p;
    if (coeff != 0) p.terms_[index] = coeff;
    return p;
}

std::vector<int> LinPoly::support() const {
    std::vector<int> s;
    s.reserve(terms_.size());
    for (const auto& [v, c] : terms_) s.push_back(v);
    return s;
}

mpq_class LinPoly::coeff(int index) const {
    auto it = terms_.find(index);
    return it == terms_.end() ? mpq_class(0) : it->second;
}

void LinPoly::set_coeff(int index, const mpq_class& c) {
    if (c == 0)
        terms_.erase(index);
    else
        terms_[index] = c;
}

LinPoly LinPoly::operator+(const LinPoly& o) const {
    LinPoly r = *this;
    for (const auto& [v, c] : o.terms_) r.set_coeff(v, r.coeff(v) + c);
    return r;
}

LinPoly LinPoly::operator-(const LinPoly& o) const {
    LinPoly r = *this;
    for (const auto& [v, c] : o.terms_) r.set_coeff(v, r.coeff(v) - c);
    return r;
}

LinPoly LinPoly::operator*(const mpq_class& c) const {
    LinPoly r;
    if (c == 0) return r;
    for (const auto& [v, k] : terms_) r.terms_[v] = k * c;
    return r;
}

LinPoly LinPoly::operator-() const { return *this * mpq_class(-1); }

std::strong_ordering LinPoly::order(const LinPoly& o) const {
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    // Support sets first.
    while (a != terms_.end() && b != o.terms_.end()) {
        if (a->first != b->first) return a->first <=> b->first;
        ++a, ++b;
    }
    if (a != terms_.end()) return std::strong_ordering::greater;
    if (b != o.terms_.end()) return std::strong_ordering::less;
    // Same support: magnitudes, then signs (positive first).
    for (a = terms_.begin(), b = o.terms_.begin(); a != terms_.end(); ++a, ++b) {
        mpq_class ma = abs(a->second), mb = abs(b->second);
        if (int c = cmp(ma, mb); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
        int sa = sgn(a->second), sb = sgn(b->second);
        if (sa != sb) return sb <=> sa;
    }
    return std::strong_ordering::equal;
}

LinPoly LinPoly::substitute(int j, int i, unsigned long d) const {
    if (i == j) throw std::invalid_argument("substitute: i and j must differ");
    auto it = terms_.find(j);
    if (it == terms_.end()) return *this;
    LinPoly r = *this;
    mpz_class pow;
    mpz_ui_pow_ui(pow.get_mpz_t(), 2, d);
    mpq_class folded = r.coeff(i) + mpq_class(pow) * it->second;
    r.terms_.erase(j);
    r.set_coeff(i, folded);
    return r;
}

LinPoly LinPoly::integerized() const {
    if (terms_.empty()) return *this;
    mpz_class den_lcm = 1, num_gcd = 0;
    for (const auto& [v, c] : terms_) {
        mpz_class d = c.get_den();
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    }
    for (const auto& [v, c] : terms_) {
        mpz_class n = c.get_num() * (den_lcm / c.get_den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    }
    mpq_class factor(den_lcm, num_gcd);  // positive: num_gcd > 0
    factor.canonicalize();
    return *this * factor;
}

bool LinPoly::has_integer_coeffs() const {
    for (const auto& [v, c] : terms_)
        if (c.get_den() != 1) return false;
    return true;
}

mpq_class LinPoly::evaluate(const std::vector<mpz_class>& values) const {
    mpq_class sum = 0;
    for (const auto& [v, c] : terms_) {
        if (v < 1 || v > static_cast<int>(values.size()))
            throw std::out_of_range("evaluate: variable index out of range");
        sum += c * mpq_class(values[v - 1]);
    }
    return sum;
}

std::string LinPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [v, c] : terms_) {
        mpq_class a = abs(c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (a != 1) out << a.get_str() << "*";
        out << "x" << v;
    }
    return out.str();
}

namespace {

void skip_ws(const std::string& s, size_t& pos) {
    while (pos < s.size() && s[pos] == ' ') ++pos;
}

}  // namespace

LinPoly parse_linpoly(const std::string& text) {
    LinPoly p;
    size_t pos = 0;
    skip_ws(text, pos);
    if (pos < text.size() && text[pos] == '0') {
        size_t rest = pos + 1;
        skip_ws(text, rest);
        if (rest == text.size()) return p;
    }
    bool expect_term = true;
    int sign = 1;
    while (pos < text.size()) {
        skip_ws(text, pos);
        if (pos >= text.size()) break;
        char ch = text[pos];
        if (ch == '+' || ch == '-') {
            if (expect_term && ch == '-')
                sign = -sign;
            else if (expect_term)
                ;  // leading '+'
            else
                sign = (ch == '-') ? -1 : 1;
            ++pos;
            expect_term = true;
            continue;
        }
        // term: [coeff '*'] 'x' index   or bare rational? polynomials here are
        // homogeneous so every term carries a variable.
        size_t start = pos;
        while (pos < text.size() && (isdigit(text[pos]) || text[pos] == '/')) ++pos;
        mpq_class coeff = 1;
        if (pos > start) {
            coeff = mpq_class(text.substr(start, pos - start));
            coeff.canonicalize();
            skip_ws(text, pos);
            if (pos < text.size() && text[pos] == '*') ++pos;
            skip_ws(text, pos);
        }
        if (pos >= text.size() || text[pos] != 'x')
            throw std::invalid_argument("parse_linpoly: expected variable in '" + text + "'");
        ++pos;
        start = pos;
        while (pos < text.size() && isdigit(text[pos])) ++pos;
        if (pos == start) throw std::invalid_argument("parse_linpoly: missing variable index");
        int var = std::stoi(text.substr(start, pos - start));
        p.set_coeff(var, p.coeff(var) + mpq_class(sign) * coeff);
        sign = 1;
        expect_term = false;
    }
    if (expect_term && !p.is_zero()) throw std::invalid_argument("parse_linpoly: dangling sign");
    return p;
}

std::string render_exponent(const ExpExpr& e) {
    std::ostringstream out;
    if (e.offset == 0)
        out << "y" << (e.root + 1);
    else
        out << "(y" << (e.root + 1) << "+" << e.offset << ")";
    return out.str();
}

}  // namespace pow2lab
