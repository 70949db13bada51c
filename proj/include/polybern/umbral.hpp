#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "polybern/polynomial.hpp"
#include "polybern/rational.hpp"

namespace polybern::umbral {

enum class SymbolKind : std::uint8_t { Bernoulli = 0, Uniform = 1, FormalZ = 2 };

/// An independent symbol. Distinct (kind, index) pairs are independent under
/// expect(); the index is ignored for FormalZ.
struct SymbolId {
    SymbolKind kind = SymbolKind::FormalZ;
    std::uint32_t index = 0;

    static constexpr SymbolId B(std::uint32_t i) { return {SymbolKind::Bernoulli, i}; }
    static constexpr SymbolId U(std::uint32_t i) { return {SymbolKind::Uniform, i}; }
    static constexpr SymbolId Z() { return {SymbolKind::FormalZ, 0}; }

    friend constexpr auto operator<=>(const SymbolId&, const SymbolId&) = default;
    std::string str() const;
};

struct Factor {
    SymbolId symbol;
    std::uint32_t exponent = 0;

    friend constexpr auto operator<=>(const Factor&, const Factor&) = default;
};

/// Product of symbol powers, kept sorted by symbol with positive exponents.
class Monomial {
public:
    Monomial() = default;
    static Monomial of(SymbolId s, std::uint32_t exponent = 1);
    /// Builds from arbitrary factors; merges duplicates and drops zero powers.
    static Monomial from_factors(std::vector<Factor> factors);

    const std::vector<Factor>& factors() const { return f_; }
    bool is_one() const { return f_.empty(); }
    std::uint32_t exponent(SymbolId s) const;
    std::uint32_t max_exponent(SymbolKind kind) const;

    /// Copy with the given symbol removed.
    Monomial without(SymbolId s) const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    /// Exact quotient a / b; throws std::domain_error if b does not divide a.
    friend Monomial operator/(const Monomial& a, const Monomial& b);
    bool divides(const Monomial& other) const;

    /// Lexicographic on the (kind, index, exponent) sequence.
    friend auto operator<=>(const Monomial& a, const Monomial& b) { return a.f_ <=> b.f_; }
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.f_ == b.f_; }

    std::size_t hash() const;
    /// "1" or e.g. "B1^2*U1^1*z^3".
    std::string str() const;

private:
    std::vector<Factor> f_;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

class ExpansionLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ExpansionLimits {
    std::size_t max_terms = 5'000'000;
};

/// Sparse polynomial in independent symbols with rational coefficients, held
/// in canonical form: terms sorted by monomial, no zero coefficients.
class Expression {
public:
    using Term = std::pair<Monomial, Rational>;

    Expression() = default;
    Expression(const Rational& c);  // NOLINT(google-explicit-constructor)
    Expression(long c) : Expression(Rational(c)) {}  // NOLINT(google-explicit-constructor)
    Expression(int c) : Expression(Rational(c)) {}   // NOLINT(google-explicit-constructor)
    Expression(const Monomial& m, const Rational& c = Rational(1));
    static Expression symbol(SymbolId s) { return Expression(Monomial::of(s)); }
    static Expression from_terms(std::vector<Term> terms);
    /// Embeds a polynomial in z.
    static Expression from_polynomial(const ZPolynomial& p);

    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    /// Coefficient of the empty monomial.
    Rational constant() const;
    Rational coefficient(const Monomial& m) const;
    bool is_monomial() const { return terms_.size() == 1; }

    /// Unit inverse, defined only for nonzero constants.
    Expression inverse() const;

    Expression& operator+=(const Expression& o);
    Expression& operator-=(const Expression& o);
    Expression& operator*=(const Rational& s);
    friend Expression operator+(Expression a, const Expression& b) { return a += b; }
    friend Expression operator-(Expression a, const Expression& b) { return a -= b; }
    friend Expression operator*(Expression a, const Rational& s) { return a *= s; }
    friend Expression operator*(const Rational& s, Expression a) { return a *= s; }
    friend Expression operator*(const Expression& a, const Expression& b) { return multiply(a, b); }
    Expression operator-() const { return *this * Rational(-1); }

    static Expression multiply(const Expression& a, const Expression& b,
                               const ExpansionLimits& limits = {});

    friend bool operator==(const Expression& a, const Expression& b) { return a.terms_ == b.terms_; }

    /// Canonical text: sorted monomials with explicit exponents.
    std::string str() const;

private:
    std::vector<Term> terms_;
};

/// Linear evaluation functional: B_i^n -> B_n, U_j^n -> 1/(n+1), z^n -> z^n,
/// independently per symbol.
ZPolynomial expect(const Expression& e);

/// Applies the functional to Bernoulli symbols only; U and z are kept.
Expression expect_bernoulli(const Expression& e);

/// Applies the functional to Uniform symbols only (integration over [0,1]).
Expression expect_uniform(const Expression& e);

/// 1 + sum_{l=1}^{k} B_l prod_{j=l}^{k-1} U_j, over B_1..B_k and U_1..U_{k-1}.
Expression poly_symbol(int k);

/// poly_symbol(k) - 1; satisfies C^(k) = B_k + U_{k-1} C^(k-1).
Expression c_symbol(int k);

/// expr^n by successive multiplication. Throws ExpansionLimitError when an
/// intermediate power exceeds limits.max_terms.
Expression expr_power(const Expression& e, unsigned n, const ExpansionLimits& limits = {});

/// Ring substitution symbol -> replacement, exponents expanded.
Expression shift_substitute(const Expression& e, SymbolId symbol, const Expression& replacement,
                            const ExpansionLimits& limits = {});

/// Renames Bernoulli index i -> i + b_offset and Uniform index j -> j + u_offset.
Expression reindex(const Expression& e, std::uint32_t b_offset, std::uint32_t u_offset);

/// f(replacement) for a polynomial f in z: sum_i f_i replacement^i.
Expression compose_polynomial(const ZPolynomial& f, const Expression& replacement,
                              const ExpansionLimits& limits = {});

}  // namespace polybern::umbral
