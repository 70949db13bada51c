#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "polybern/rational.hpp"

namespace polybern {

/// Dense univariate polynomial in the formal variable z over the rationals.
/// coeffs()[i] is the coefficient of z^i; trailing zeros are always trimmed,
/// so the zero polynomial has no coefficients.
class ZPolynomial {
public:
    ZPolynomial() = default;
    ZPolynomial(const Rational& c);  // NOLINT(google-explicit-constructor)
    ZPolynomial(long c) : ZPolynomial(Rational(c)) {}  // NOLINT(google-explicit-constructor)
    ZPolynomial(int c) : ZPolynomial(Rational(c)) {}   // NOLINT(google-explicit-constructor)
    explicit ZPolynomial(std::vector<Rational> coeffs);
    ZPolynomial(std::initializer_list<Rational> coeffs)
        : ZPolynomial(std::vector<Rational>(coeffs)) {}

    static ZPolynomial monomial(std::size_t degree, const Rational& c = Rational(1));
    static ZPolynomial z() { return monomial(1); }

    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }
    bool is_constant() const { return c_.size() <= 1; }

    Rational operator()(const Rational& x) const;
    double evaluate(double x) const;

    /// p(z + c).
    ZPolynomial shift(const Rational& c) const;
    /// p(s * z).
    ZPolynomial scale_argument(const Rational& s) const;
    ZPolynomial derivative() const;

    ZPolynomial& operator+=(const ZPolynomial& o);
    ZPolynomial& operator-=(const ZPolynomial& o);
    ZPolynomial& operator*=(const ZPolynomial& o);
    ZPolynomial& operator*=(const Rational& s);

    friend ZPolynomial operator+(ZPolynomial a, const ZPolynomial& b) { return a += b; }
    friend ZPolynomial operator-(ZPolynomial a, const ZPolynomial& b) { return a -= b; }
    friend ZPolynomial operator*(const ZPolynomial& a, const ZPolynomial& b);
    friend ZPolynomial operator*(ZPolynomial a, const Rational& s) { return a *= s; }
    friend ZPolynomial operator*(const Rational& s, ZPolynomial a) { return a *= s; }
    ZPolynomial operator-() const;

    friend bool operator==(const ZPolynomial& a, const ZPolynomial& b) { return a.c_ == b.c_; }

    /// Human-readable form, highest degree first, e.g. "z^2 - z + 1/6".
    std::string str() const;

private:
    void trim();
    std::vector<Rational> c_;
};

}  // namespace polybern
