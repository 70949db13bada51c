#include <doctest.h>

#include "polybern/combinatorics.hpp"
#include "polybern/umbral.hpp"

using namespace polybern;
using namespace polybern::umbral;

namespace {
Rational q(long a, long b = 1) { return Rational(a, b); }
const Expression z = Expression::symbol(SymbolId::Z());
Expression B(std::uint32_t i) { return Expression::symbol(SymbolId::B(i)); }
Expression U(std::uint32_t i) { return Expression::symbol(SymbolId::U(i)); }
}  // namespace

TEST_CASE("expect on single symbols") {
    const auto b = bernoulli_numbers(15);
    for (unsigned n = 0; n <= 15; ++n) {
        CHECK(expect(expr_power(B(1), n)) == ZPolynomial(b[n]));
        CHECK(expect(expr_power(U(1), n)) == ZPolynomial(Rational(1, static_cast<long>(n) + 1)));
    }
    CHECK(expect(z) == ZPolynomial::z());
}

TEST_CASE("expect((z+B)^n) is the Bernoulli polynomial") {
    for (unsigned n = 0; n <= 15; ++n)
        CHECK(expect(expr_power(z + B(1), n)) == bernoulli_polynomial(n));
}

TEST_CASE("independent symbols factorise under expect") {
    // E[B1^2 B2^2] = B_2^2, E[B1^2 U1^3] = B_2 / 4.
    CHECK(expect(expr_power(B(1), 2) * expr_power(B(2), 2)) == ZPolynomial(q(1, 36)));
    CHECK(expect(expr_power(B(1), 2) * expr_power(U(1), 3)) == ZPolynomial(q(1, 24)));
    // B1 * B1 is B1^2, not B_1^2.
    CHECK(expect(B(1) * B(1)) == ZPolynomial(q(1, 6)));
}

TEST_CASE("partial functionals commute and compose to expect") {
    const auto e = expr_power(z + B(1) + U(1) * B(2) + U(2), 5);
    CHECK(expect(expect_bernoulli(e)) == expect(e));
    CHECK(expect(expect_uniform(e)) == expect(e));
    CHECK(expect_uniform(expect_bernoulli(e)) == expect_bernoulli(expect_uniform(e)));
    const auto eb = expect_bernoulli(e);
    for (const auto& [m, c] : eb.terms()) CHECK(m.max_exponent(SymbolKind::Bernoulli) == 0);
}

TEST_CASE("E[B + U] = 0 and E[(B+U)^n] = 0 for n >= 1") {
    const auto x = B(1) + U(1);
    for (unsigned n = 1; n <= 12; ++n) CHECK(expect(expr_power(x, n)).is_zero());
}

TEST_CASE("poly_symbol structure") {
    CHECK(poly_symbol(1) == Expression(1) + B(1));
    CHECK(poly_symbol(2) == Expression(1) + B(2) + B(1) * U(1));
    CHECK(c_symbol(3) == B(3) + B(2) * U(2) + B(1) * U(1) * U(2));
    for (int k = 2; k <= 6; ++k) CHECK(c_symbol(k) == B(k) + U(k - 1) * c_symbol(k - 1));
    CHECK_THROWS_AS(poly_symbol(0), std::invalid_argument);
}

TEST_CASE("Monomial arithmetic") {
    const auto m = Monomial::from_factors({{SymbolId::U(2), 1}, {SymbolId::B(1), 2}, {SymbolId::U(2), 2}});
    CHECK(m.exponent(SymbolId::U(2)) == 3);
    CHECK(m.str() == "B1^2*U2^3");
    CHECK(m / Monomial::of(SymbolId::U(2)) == Monomial::from_factors({{SymbolId::B(1), 2}, {SymbolId::U(2), 2}}));
    CHECK_THROWS_AS(Monomial::of(SymbolId::U(2)) / m, std::domain_error);
    CHECK(Monomial::of(SymbolId::U(2)).divides(m));
}

TEST_CASE("shift_substitute and compose_polynomial") {
    const auto e = expr_power(z, 3) + z;
    const auto s = shift_substitute(e, SymbolId::Z(), z + B(1));
    CHECK(expect(s) == bernoulli_polynomial(3) + bernoulli_polynomial(1));
    CHECK(compose_polynomial(ZPolynomial{q(0), q(1), q(0), q(1)}, z + B(1)) == s);
    CHECK(reindex(B(1) * U(1), 2, 3) == B(3) * U(4));
}

TEST_CASE("expansion limit is enforced") {
    ExpansionLimits lim{50};
    CHECK_THROWS_AS(expr_power(z + B(1) + B(2) + B(3), 8, lim), ExpansionLimitError);
}
