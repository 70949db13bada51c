#pragma once

#include <vector>

#include "polybern/polynomial.hpp"
#include "polybern/rational.hpp"

namespace polybern {

/// C(n, m); zero when m < 0 or m > n.
BigInt binomial(long n, long m);

/// Stirling number of the second kind S(n, m); zero when m > n.
BigInt stirling2(long n, long m);

BigInt factorial(long n);

/// B_0 .. B_{n_max} with B_1 = -1/2 (generating function t/(e^t - 1)).
std::vector<Rational> bernoulli_numbers(long n_max);

/// B_n(z), with e^{zt} t/(e^t - 1) = sum B_n(z) t^n / n!.
ZPolynomial bernoulli_polynomial(long n);

/// B_0(z) .. B_{n_max}(z).
std::vector<ZPolynomial> bernoulli_polynomials(long n_max);

}  // namespace polybern
