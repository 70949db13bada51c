#include <doctest.h>

#include "polybern/combinatorics.hpp"
#include "polybern/polybernoulli.hpp"

using namespace polybern;

namespace {

Rational q(long a, long b = 1) { return Rational(a, b); }

// Appell expansion sum_j C(n,j) b_j z^{n-j} from the Stirling numbers.
ZPolynomial appell_oracle(long n, int k) {
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    for (long j = 0; j <= n; ++j) c[n - j] = Rational(binomial(n, j)) * poly_bernoulli_stirling(j, k);
    return ZPolynomial(c);
}

}  // namespace

TEST_CASE("small poly-Bernoulli numbers") {
    CHECK(poly_bernoulli_stirling(0, 2) == q(1));
    CHECK(poly_bernoulli_stirling(1, 2) == q(1, 4));
    CHECK(poly_bernoulli_stirling(2, 2) == q(-1, 36));
    const auto t = poly_bernoulli_series(2, 2, Variant::B);
    CHECK(t.number(1) == q(1, 4));
    CHECK(t.number(2) == q(-1, 36));
}

TEST_CASE("k = 1 reduces to Bernoulli polynomials") {
    const auto tb = poly_bernoulli_series(12, 1, Variant::B);
    const auto tc = poly_bernoulli_series(12, 1, Variant::C);
    for (long n = 0; n <= 12; ++n) {
        CHECK(tb.polynomial(n) == bernoulli_polynomial(n).shift(q(1)));
        CHECK(tc.polynomial(n) == bernoulli_polynomial(n));
    }
}

TEST_CASE("series, umbral and Stirling routes agree") {
    for (int k = 1; k <= 4; ++k) {
        const auto ts = poly_bernoulli_series(12, k, Variant::B);
        const auto tu = poly_bernoulli_umbral_table(12, k, Variant::B);
        for (long n = 0; n <= 12; ++n) {
            CHECK(ts.polynomial(n) == appell_oracle(n, k));
            CHECK(tu.polynomial(n) == ts.polynomial(n));
            CHECK(ts.number(n) == poly_bernoulli_stirling(n, k));
        }
        CHECK(poly_bernoulli_umbral(7, k, Variant::C) == poly_bernoulli_series(7, k, Variant::C).polynomial(7));
    }
}

TEST_CASE("B and C conversion round trip") {
    for (int k = 1; k <= 4; ++k) {
        const auto b = poly_bernoulli_series(10, k, Variant::B);
        const auto c = poly_bernoulli_series(10, k, Variant::C);
        const auto b2c = bc_convert(b, Conversion::BToC);
        CHECK(b2c.entries == c.entries);
        CHECK(bc_convert(c, Conversion::CToB).entries == b.entries);
        // C_n^(k)(z) = B_n^(k)(z - 1).
        for (long n = 0; n <= 10; ++n) CHECK(c.polynomial(n) == b.polynomial(n).shift(q(-1)));
    }
    CHECK_THROWS_AS(bc_convert(poly_bernoulli_series(3, 2, Variant::C), Conversion::BToC), std::invalid_argument);
}

TEST_CASE("Bernoulli-Barnes polynomials match their generating function") {
    // a = (1, 2): e^{zt} t/(e^t-1) t/(e^{2t}-1) = e^{zt} (1/2) (t/(e^t-1)) ((2t)/(e^{2t}-1)),
    // so the n-th polynomial is (1/2) sum_j C(n,j) B_j 2^{n-j} B_{n-j}(z).
    BarnesParameters p;
    p.a = {umbral::Expression(1), umbral::Expression(2)};
    p.z = umbral::Expression::symbol(umbral::SymbolId::Z());
    const auto b = bernoulli_numbers(8);
    for (long n = 0; n <= 8; ++n) {
        ZPolynomial expected;
        for (long j = 0; j <= n; ++j)
            expected += bernoulli_polynomial(j) * (Rational(binomial(n, j)) * b[n - j] * Rational(2).pow(n - j));
        expected *= q(1, 2);
        const auto got = bernoulli_barnes(n, p);
        CHECK(got.denominator.is_one());
        CHECK(umbral::expect(got.numerator) * got.denominator_coefficient.inverse() == expected);
    }
}

TEST_CASE("Barnes cube and simplex transforms reproduce B_n^(k)(z)") {
    for (int k = 1; k <= 4; ++k) {
        const auto ts = poly_bernoulli_series(8, k, Variant::B);
        for (long n = 0; n <= 8; ++n) {
            CHECK(barnes_transform_cube(n, k) == ts.polynomial(n));
            if (k >= 2) CHECK(simplex_transform(n, k) == ts.polynomial(n));
        }
    }
    CHECK(barnes_transform_cube(3, 3, q(1, 2)) == poly_bernoulli_series(3, 3, Variant::B).polynomial(3)(q(1, 2)));
    CHECK_THROWS_AS(simplex_transform(3, 1), std::invalid_argument);
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(poly_bernoulli_series(-1, 2, Variant::B), std::invalid_argument);
    CHECK_THROWS_AS(poly_bernoulli_series(3, 0, Variant::B), std::invalid_argument);
    CHECK_THROWS_AS(poly_bernoulli_stirling(3, 0), std::invalid_argument);
    CHECK(parse_route("barnes-cube") == Route::BarnesCube);
    CHECK_THROWS_AS(parse_variant("D"), std::invalid_argument);
}
