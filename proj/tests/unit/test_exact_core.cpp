#include <doctest.h>

#include <functional>
#include <random>
#include <vector>

#include "polybern/combinatorics.hpp"
#include "polybern/polynomial.hpp"
#include "polybern/power_series.hpp"
#include "polybern/rational.hpp"

using namespace polybern;

namespace {

Rational q(long a, long b = 1) { return Rational(a, b); }

// Reciprocal by the textbook recurrence, kept separate from the library.
std::vector<Rational> naive_reciprocal(const std::vector<Rational>& s) {
    std::vector<Rational> r(s.size());
    r[0] = Rational(1) / s[0];
    for (std::size_t n = 1; n < s.size(); ++n) {
        Rational acc;
        for (std::size_t i = 1; i <= n; ++i) acc += s[i] * r[n - i];
        r[n] = -acc / s[0];
    }
    return r;
}

// Bernoulli numbers from 1 / ((e^t - 1)/t), coefficients times n!.
std::vector<Rational> bernoulli_oracle(std::size_t n_max) {
    std::vector<Rational> s(n_max + 1);
    Rational f(1);
    for (std::size_t n = 0; n <= n_max; ++n) {
        f /= Rational(static_cast<long>(n + 1));
        s[n] = f;  // 1/(n+1)!
    }
    auto r = naive_reciprocal(s);
    Rational fact(1);
    for (std::size_t n = 0; n <= n_max; ++n) {
        if (n > 0) fact *= Rational(static_cast<long>(n));
        r[n] *= fact;
    }
    return r;
}

long count_partitions(int n, int blocks) {
    // Restricted growth strings of length n using exactly `blocks` labels.
    long count = 0;
    std::vector<int> a(static_cast<std::size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int i, int used) {
        if (i == n) {
            if (used == blocks) ++count;
            return;
        }
        for (int v = 0; v <= used && v < blocks; ++v) {
            a[i] = v;
            rec(i + 1, std::max(used, v + 1));
        }
    };
    if (n == 0) return blocks == 0 ? 1 : 0;
    rec(0, 0);
    return count;
}

PowerSeries<Rational> random_series(std::mt19937& rng, std::size_t order, bool zero_constant) {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 7);
    PowerSeries<Rational> s(order);
    for (std::size_t i = 0; i <= order; ++i) s[i] = Rational(num(rng), den(rng));
    if (zero_constant) s[0] = Rational(0);
    return s;
}

}  // namespace

TEST_CASE("Rational stays reduced with positive denominator") {
    const Rational r(BigInt(6), BigInt(-4));
    CHECK(r.num_str() == "-3");
    CHECK(r.den_str() == "2");
    CHECK(q(1, 2) + q(1, 3) == q(5, 6));
    CHECK(q(2, 3).pow(3) == q(8, 27));
    CHECK(q(-2, 3).pow(-2) == q(9, 4));
    CHECK(Rational::parse("-691/2730") == q(-691, 2730));
    CHECK(Rational::parse("12") == q(12));
    CHECK_THROWS_AS(Rational::parse("x/2"), std::invalid_argument);
    CHECK_THROWS_AS(q(0).inverse(), std::domain_error);
    CHECK(q(5, 10).str() == "1/2");
}

TEST_CASE("bernoulli_numbers") {
    CHECK(bernoulli_numbers(0) == std::vector<Rational>{q(1)});
    CHECK(bernoulli_numbers(2) == std::vector<Rational>{q(1), q(-1, 2), q(1, 6)});
    CHECK(bernoulli_numbers(12).back() == q(-691, 2730));
    CHECK(bernoulli_numbers(30) == bernoulli_oracle(30));
    const auto b = bernoulli_numbers(29);
    for (long n = 3; n <= 29; n += 2) CHECK(b[n].is_zero());
}

TEST_CASE("bernoulli_polynomial") {
    CHECK(bernoulli_polynomial(0) == ZPolynomial{q(1)});
    CHECK(bernoulli_polynomial(1) == ZPolynomial{q(-1, 2), q(1)});
    CHECK(bernoulli_polynomial(2) == ZPolynomial{q(1, 6), q(-1), q(1)});
    const auto b = bernoulli_numbers(30);
    for (long n = 0; n <= 30; ++n) {
        const auto p = bernoulli_polynomial(n);
        CHECK(p(q(0)) == b[n]);
        CHECK(p(q(1)) == (n % 2 == 0 ? b[n] : -b[n]));
    }
    CHECK(bernoulli_polynomials(10)[7] == bernoulli_polynomial(7));
}

TEST_CASE("stirling2 and binomial") {
    CHECK(stirling2(0, 0) == 1);
    CHECK(stirling2(4, 2) == 7);
    CHECK(stirling2(5, 5) == 1);
    CHECK(stirling2(3, 4) == 0);
    for (int n = 0; n <= 8; ++n)
        for (int m = 0; m <= n; ++m) CHECK(stirling2(n, m) == count_partitions(n, m));

    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(7, 0) == 1);
    CHECK(binomial(10, 5) == 252);
    CHECK(binomial(4, -1) == 0);
    CHECK(binomial(4, 5) == 0);
    std::vector<std::vector<long>> pascal{{1}};
    for (int n = 1; n <= 20; ++n) {
        std::vector<long> row(n + 1, 1);
        for (int m = 1; m < n; ++m) row[m] = pascal[n - 1][m - 1] + pascal[n - 1][m];
        pascal.push_back(row);
    }
    for (int n = 0; n <= 20; ++n)
        for (int m = 0; m <= n; ++m) CHECK(binomial(n, m) == pascal[n][m]);
}

TEST_CASE("ZPolynomial arithmetic") {
    const ZPolynomial p{q(1), q(2), q(3)};  // 3z^2 + 2z + 1
    const ZPolynomial r{q(-1), q(1)};
    CHECK((p * r).degree() == 3);
    CHECK(p.shift(q(1)) == ZPolynomial{q(6), q(8), q(3)});
    CHECK(p.shift(q(1)).shift(q(-1)) == p);
    CHECK(p(q(1, 2)) == q(11, 4));
    CHECK((p - p).is_zero());
    CHECK(p.derivative() == ZPolynomial{q(2), q(6)});
    CHECK(ZPolynomial{q(1, 6), q(-1), q(1)}.str() == "z^2 - z + 1/6");
}

TEST_CASE("series_compose examples") {
    const auto t = series::identity(6);
    auto t2 = PowerSeries<Rational>(6);
    t2[2] = q(1);
    CHECK(compose(t, t2) == t2);

    CHECK(compose(series::expm1(6), series::log1p(6)) == series::identity(6));

    // Li_2(1 - e^{-t}) to order 4: t - t^2/4 + t^3/36 + 0 t^4.
    const auto w = series::expm1(4, q(-1)).scaled(q(-1));
    const auto li = compose(series::polylog(2, 4), w);
    CHECK(li.order() == 4);
    CHECK(li.coeffs() == std::vector<Rational>{q(0), q(1), q(-1, 4), q(1, 36), q(0)});
    // Dividing by w and scaling by n! gives the Stirling closed form for k = 2.
    const auto gf = divide(li, w);
    CHECK(gf.order() == 3);
    Rational fact(1);
    for (std::size_t n = 0; n <= 3; ++n) {
        if (n > 0) fact *= q(static_cast<long>(n));
        Rational expected;
        for (long m = 0; m <= static_cast<long>(n); ++m) {
            Rational term = Rational(factorial(m) * stirling2(static_cast<long>(n), m)) / Rational(m + 1).pow(2);
            expected += m % 2 ? -term : term;
        }
        if (n % 2) expected = -expected;
        CHECK(gf[n] * fact == expected);
    }

    auto bad = series::exp(4);
    CHECK_THROWS_AS(compose(series::identity(4), bad), std::invalid_argument);
}

TEST_CASE("series division respects valuation") {
    const auto w = series::expm1(5);
    CHECK_THROWS_AS(divide(series::exp(5), w), std::domain_error);
    const auto one = divide(w, w);
    CHECK(one.order() == 4);
    CHECK(one[0] == q(1));
    for (std::size_t i = 1; i <= 4; ++i) CHECK(one[i].is_zero());
}

TEST_CASE("property: s * reciprocal(s) == 1") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 25; ++trial) {
        auto s = random_series(rng, 10, false);
        if (s[0].is_zero()) s[0] = q(3);
        const auto p = s * reciprocal(s);
        CHECK(p.order() == 10);
        CHECK(p[0] == q(1));
        for (std::size_t i = 1; i <= 10; ++i) CHECK(p[i].is_zero());
    }
}

TEST_CASE("property: composition is associative") {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 10; ++trial) {
        const auto a = random_series(rng, 8, false);
        const auto b = random_series(rng, 8, true);
        const auto c = random_series(rng, 8, true);
        CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    }
}

TEST_CASE("binary ops keep the smaller order") {
    const auto a = series::exp(7);
    const auto b = series::exp(4);
    CHECK((a + b).order() == 4);
    CHECK((a * b).order() == 4);
    CHECK(compose(series::exp(3), series::identity(9)).order() == 3);
}
