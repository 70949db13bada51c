#include "polybern/combinatorics.hpp"

#include <stdexcept>

namespace polybern {

BigInt binomial(long n, long m) {
    if (n < 0) throw std::invalid_argument("binomial: n < 0");
    if (m < 0 || m > n) return 0;
    if (m > n - m) m = n - m;
    BigInt c = 1;
    for (long j = 1; j <= m; ++j) {
        c *= n - j + 1;
        mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(j));
    }
    return c;
}

BigInt stirling2(long n, long m) {
    if (n < 0 || m < 0) throw std::invalid_argument("stirling2: negative index");
    if (m > n) return 0;
    // Row-by-row S(i, j) = j S(i-1, j) + S(i-1, j-1).
    std::vector<BigInt> row(static_cast<std::size_t>(m) + 1, 0);
    row[0] = 1;
    for (long i = 1; i <= n; ++i) {
        for (long j = std::min(i, m); j >= 1; --j) row[j] = j * row[j] + row[j - 1];
        row[0] = 0;
    }
    return row[m];
}

BigInt factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial: n < 0");
    BigInt f = 1;
    for (long i = 2; i <= n; ++i) f *= i;
    return f;
}

std::vector<Rational> bernoulli_numbers(long n_max) {
    if (n_max < 0) throw std::invalid_argument("bernoulli_numbers: n_max < 0");
    std::vector<Rational> b(static_cast<std::size_t>(n_max) + 1);
    b[0] = Rational(1);
    for (long m = 1; m <= n_max; ++m) {
        if (m >= 3 && m % 2 == 1) continue;  // odd B_m vanish beyond B_1
        Rational acc;
        BigInt c = 1;  // C(m+1, j)
        for (long j = 0; j < m; ++j) {
            acc += Rational(c) * b[j];
            c *= m + 1 - j;
            mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(j + 1));
        }
        b[m] = -acc / Rational(m + 1);
    }
    return b;
}

ZPolynomial bernoulli_polynomial(long n) {
    if (n < 0) throw std::invalid_argument("bernoulli_polynomial: n < 0");
    const auto b = bernoulli_numbers(n);
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    for (long j = 0; j <= n; ++j) c[n - j] = Rational(binomial(n, j)) * b[j];
    return ZPolynomial(std::move(c));
}

std::vector<ZPolynomial> bernoulli_polynomials(long n_max) {
    std::vector<ZPolynomial> out;
    out.reserve(static_cast<std::size_t>(n_max) + 1);
    const auto b = bernoulli_numbers(n_max);
    for (long n = 0; n <= n_max; ++n) {
        std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
        for (long j = 0; j <= n; ++j) c[n - j] = Rational(binomial(n, j)) * b[j];
        out.emplace_back(std::move(c));
    }
    return out;
}

}  // namespace polybern
