#pragma once

#include "hyperoct/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hyperoct {

/// Polynomial in q+ and q− with rational coefficients. Zero terms are never stored.
class BivarPoly {
public:
    using Exponents = std::pair<unsigned, unsigned>;  // (e_qp, e_qm)
    using Terms = std::map<Exponents, Rational>;

    BivarPoly() = default;
    BivarPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
    BivarPoly(long c) : BivarPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)

    static BivarPoly qp();
    static BivarPoly qm();
    static BivarPoly monomial(unsigned e_qp, unsigned e_qm, const Rational& c = 1);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(unsigned e_qp, unsigned e_qm) const;

    BivarPoly& operator+=(const BivarPoly& o);
    BivarPoly& operator-=(const BivarPoly& o);
    BivarPoly& operator*=(const BivarPoly& o);
    BivarPoly& operator*=(const Rational& c);

    friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
    friend BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a -= b; }
    friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);
    friend BivarPoly operator*(BivarPoly a, const Rational& c) { return a *= c; }
    friend BivarPoly operator*(const Rational& c, BivarPoly a) { return a *= c; }
    friend BivarPoly operator*(BivarPoly a, long c) { return a *= Rational(c); }
    friend BivarPoly operator*(long c, BivarPoly a) { return a *= Rational(c); }
    BivarPoly operator-() const;
    friend bool operator==(const BivarPoly& a, const BivarPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const BivarPoly& a, const BivarPoly& b) { return !(a == b); }

    BivarPoly pow(unsigned e) const;
    Rational eval(const Rational& qp, const Rational& qm) const;
    /// Substitute polynomials for q+ and q−.
    BivarPoly compose(const BivarPoly& qp_sub, const BivarPoly& qm_sub) const;

    /// Smallest monomial (in (e_qp, e_qm) order) where the two polynomials differ.
    static std::optional<Exponents> first_difference(const BivarPoly& a, const BivarPoly& b);

    std::string to_string() const;

private:
    void add_term(const Exponents& e, const Rational& c);
    Terms terms_;
};

/// Univariate polynomial with rational coefficients, coeffs()[k] multiplies t^k.
class UniPoly {
public:
    UniPoly() = default;
    UniPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
    static UniPoly t();
    static UniPoly monomial(unsigned k, const Rational& c = 1);

    const std::vector<Rational>& coeffs() const { return c_; }
    unsigned degree() const { return c_.empty() ? 0 : static_cast<unsigned>(c_.size() - 1); }
    Rational coefficient(unsigned k) const { return k < c_.size() ? c_[k] : Rational(0); }

    UniPoly& operator+=(const UniPoly& o);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }
    UniPoly pow(unsigned e) const;
    Rational eval(const Rational& t) const;
    std::string to_string() const;

private:
    void trim();
    std::vector<Rational> c_;
};

}  // namespace hyperoct
