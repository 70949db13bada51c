#include "polybern/special.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "polybern/combinatorics.hpp"

namespace polybern::numeric {

namespace {

constexpr double kPi = std::numbers::pi;

// B_n as doubles, n <= 64.
const std::vector<double>& bernoulli_table() {
    static const std::vector<double> table = [] {
        std::vector<double> out;
        for (const auto& b : bernoulli_numbers(64)) out.push_back(b.to_double());
        return out;
    }();
    return table;
}

}  // namespace

cplx log1p(cplx x) {
    const double a = x.real(), b = x.imag();
    if (std::abs(a) < 0.5 && std::abs(b) < 0.5) {
        const double re = 0.5 * std::log1p(a * (2.0 + a) + b * b);
        return {re, std::atan2(b, 1.0 + a)};
    }
    return std::log(1.0 + x);
}

cplx expm1(cplx x) {
    const double a = x.real(), b = x.imag();
    if (std::abs(a) < 0.5 && std::abs(b) < 0.5) {
        const double s = std::sin(0.5 * b);
        const double re = std::expm1(a) * std::cos(b) - 2.0 * s * s;
        return {re, std::exp(a) * std::sin(b)};
    }
    return std::exp(x) - 1.0;
}

namespace {

// sum_{n>=0} B_n u^{n+1}/(n+1)!, the dilogarithm in the variable -log(1-z).
// Callers keep |u| below about 1.6, where 15 even terms reach full precision.
cplx dilog_series(cplx u) {
    static const std::array<double, 16> c = [] {
        std::array<double, 16> out{};
        const auto& b = bernoulli_table();
        double fact = 1.0;  // (2i+1)!
        for (int i = 1; i < 16; ++i) {
            fact *= static_cast<double>(2 * i) * (2 * i + 1);
            out[i] = b[2 * i] / fact;
        }
        return out;
    }();
    const cplx u2 = u * u;
    cplx acc = c[15];
    for (int i = 14; i >= 1; --i) acc = acc * u2 + c[i];
    return u - 0.25 * u2 + u * u2 * acc;
}

}  // namespace

cplx dilog(cplx z) {
    constexpr double z2 = kPi * kPi / 6.0;
    if (z == cplx(0.0)) return 0.0;
    if (z == cplx(1.0)) return z2;
    const double rz = z.real();
    const double nz = std::norm(z);
    if (rz <= 0.5) {
        if (nz > 1.0) {
            const cplx l = std::log(-z);
            return -dilog_series(-log1p(-1.0 / z)) - 0.5 * l * l - z2;
        }
        return dilog_series(-log1p(-z));
    }
    if (nz <= 2.0 * rz) {
        const cplx u = -std::log(z);
        return -dilog_series(u) + u * log1p(-z) + z2;
    }
    const cplx l = std::log(-z);
    return -dilog_series(-log1p(-1.0 / z)) - 0.5 * l * l - z2;
}

double hurwitz_zeta(double s, double a, double tol) {
    if (!(s > 1.0)) throw std::domain_error("hurwitz_zeta: requires s > 1");
    if (!(a > 0.0)) throw std::domain_error("hurwitz_zeta: requires a > 0");
    const int n_direct = std::max(0, static_cast<int>(std::ceil(20.0 - a)));
    long double sum = 0;
    for (int n = n_direct - 1; n >= 0; --n) sum += std::pow(static_cast<long double>(a) + n, -s);
    const long double x = static_cast<long double>(a) + n_direct;
    sum += std::pow(x, 1 - s) / (s - 1) + 0.5L * std::pow(x, -s);
    const auto& b = bernoulli_table();
    // B_{2j}/(2j)! s(s+1)...(s+2j-2) x^{-s-2j+1}
    long double rising = s;
    long double fact = 2;
    long double xp = std::pow(x, -s - 1);
    const long double x2 = x * x;
    for (int j = 1; j <= 30; ++j) {
        const long double term = b[2 * j] / fact * rising * xp;
        sum += term;
        if (std::abs(term) < tol * 1e-2 * std::abs(sum)) break;
        rising *= (s + 2 * j - 1) * (s + 2 * j);
        fact *= static_cast<long double>(2 * j + 1) * (2 * j + 2);
        xp /= x2;
    }
    return static_cast<double>(sum);
}

double riemann_zeta(int s) {
    static const std::array<double, 80> table = [] {
        std::array<double, 80> t{};
        for (int i = 2; i < 80; ++i) t[i] = hurwitz_zeta(i, 1.0, 1e-17);
        return t;
    }();
    if (s < 2) throw std::domain_error("riemann_zeta: requires integer s >= 2");
    if (s >= 80) return 1.0 + std::pow(2.0, -s);
    return table[s];
}

double polygamma(int m, double x, double tol) {
    if (m < 1) throw std::domain_error("polygamma: requires m >= 1");
    if (!(x > 0.0)) throw std::domain_error("polygamma: requires x > 0");
    double f = 1.0;
    for (int i = 2; i <= m; ++i) f *= i;
    const double z = hurwitz_zeta(m + 1.0, x, tol);
    return (m % 2 == 1 ? 1.0 : -1.0) * f * z;
}

namespace {

// zeta(-n) for n >= 0.
double zeta_nonpositive(int n) {
    if (n == 0) return -0.5;
    return -bernoulli_table()[n + 1] / (n + 1);
}

// Li_k(e^mu) for mu < 0 small, expanded around mu = 0.
double polylog_log_series(int k, double mu, double tol) {
    double harmonic = 0.0;
    for (int i = 1; i <= k - 1; ++i) harmonic += 1.0 / i;
    long double sum = 0;
    long double p = 1;  // mu^j / j!
    for (int j = 0; j < 62; ++j) {
        if (j > 0) p *= mu / j;
        long double term;
        if (j < k - 1)
            term = p * riemann_zeta(k - j);
        else if (j == k - 1)
            term = p * (harmonic - std::log(-mu));
        else
            term = p * zeta_nonpositive(j - k);
        sum += term;
        // zeta vanishes at negative even integers, so test every other term.
        if (j > k && (j - k) % 2 == 1 && std::abs(term) < tol * std::abs(sum)) break;
    }
    return static_cast<double>(sum);
}

double polylog_direct(int k, double x, double tol) {
    long double sum = 0;
    long double p = 1;
    for (int n = 1; n < 100000; ++n) {
        p *= x;
        const long double term = p / std::pow(static_cast<long double>(n), k);
        sum += term;
        // Remaining terms are below term * x / (1 - x).
        if (term * x / (1 - x) < tol * std::abs(sum) || p == 0) break;
    }
    return static_cast<double>(sum);
}

}  // namespace

double polylog_complement(int k, double x, double one_minus_x, double tol) {
    if (k < 1) throw std::domain_error("polylog: requires k >= 1");
    if (!(x >= 0.0 && x < 1.0)) throw std::domain_error("polylog: requires 0 <= x < 1");
    if (x == 0.0) return 0.0;
    if (k == 1) return -std::log(one_minus_x);
    if (x <= 0.5) return polylog_direct(k, x, tol);
    if (k == 2) {
        constexpr double z2 = kPi * kPi / 6.0;
        return z2 - std::log(x) * std::log(one_minus_x) - polylog_direct(2, one_minus_x, tol);
    }
    return polylog_log_series(k, std::log1p(-one_minus_x), tol);
}

double polylog(int k, double x, double tol) { return polylog_complement(k, x, 1.0 - x, tol); }

}  // namespace polybern::numeric
