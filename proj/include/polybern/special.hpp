#pragma once

#include <complex>

namespace polybern::numeric {

using cplx = std::complex<double>;

/// log(1 + x), accurate for small |x|; principal branch.
cplx log1p(cplx x);
/// e^x - 1, accurate for small |x|.
cplx expm1(cplx x);
/// Principal branch of the dilogarithm, cut along [1, inf).
cplx dilog(cplx z);

/// sum_{n>=0} (a+n)^{-s} by direct summation plus an Euler-Maclaurin tail.
double hurwitz_zeta(double s, double a, double tol = 1e-15);

/// zeta(s) for integer s >= 2, tabulated.
double riemann_zeta(int s);

/// psi^{(m)}(x) = (-1)^{m+1} m! zeta(m+1, x).
double polygamma(int m, double x, double tol = 1e-15);

/// Li_k(x) for k >= 1 and 0 <= x < 1.
double polylog(int k, double x, double tol = 1e-16);

/// Li_k(x) given both x and 1 - x, so that x close to 1 keeps full
/// relative accuracy in 1 - x.
double polylog_complement(int k, double x, double one_minus_x, double tol = 1e-16);

}  // namespace polybern::numeric
