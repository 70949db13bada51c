#pragma once

#include <string>
#include <vector>

#include "polybern/polynomial.hpp"
#include "polybern/rational.hpp"
#include "polybern/umbral.hpp"

namespace polybern {

/// B: Li_k(1-e^{-t})/(1-e^{-t}).  C: Li_k(1-e^{-t})/(e^t-1).
enum class Variant { B, C };

enum class Route { Series, Umbral, Stirling, BarnesCube, BarnesSimplex };

std::string to_string(Variant v);
std::string to_string(Route r);
Variant parse_variant(const std::string& s);
Route parse_route(const std::string& s);

/// Poly-Bernoulli polynomials B_n^(k)(z) or C_n^(k)(z) for n = 0..n_max.
struct PolyBernoulliTable {
    int k = 1;
    Variant variant = Variant::B;
    Route route = Route::Series;
    std::vector<ZPolynomial> entries;

    long n_max() const { return static_cast<long>(entries.size()) - 1; }
    const ZPolynomial& polynomial(long n) const { return entries.at(static_cast<std::size_t>(n)); }
    /// Value at z = 0.
    Rational number(long n) const { return polynomial(n)(Rational(0)); }
};

/// Coefficient extraction from the generating function, times e^{zt}.
PolyBernoulliTable poly_bernoulli_series(long n_max, int k, Variant variant);

/// (z + B^(k))^n or (z + C^(k))^n under expect().
ZPolynomial poly_bernoulli_umbral(long n, int k, Variant variant,
                                  const umbral::ExpansionLimits& limits = {});

/// All n <= n_max through one chain of successive powers.
PolyBernoulliTable poly_bernoulli_umbral_table(long n_max, int k, Variant variant,
                                               const umbral::ExpansionLimits& limits = {});

/// (-1)^n sum_{m=0}^{n} (-1)^m m! S(n,m) / (m+1)^k.
Rational poly_bernoulli_stirling(long n, int k);

enum class Conversion { BToC, CToB };

/// C_n = sum_l C(n,l) (-1)^{n-l} B_l  and  B_n = sum_l C(n,l) C_l.
PolyBernoulliTable bc_convert(const PolyBernoulliTable& table, Conversion direction);

/// Parameters of the Bernoulli-Barnes generating function
/// e^{zt} prod_i t/(e^{a_i t} - 1). Each a_i is a single nonzero term: a
/// rational multiple of a monomial in Uniform symbols, which play the role
/// of formal integration variables. z may involve the FormalZ symbol.
struct BarnesParameters {
    std::vector<umbral::Expression> a;
    umbral::Expression z;
};

/// numerator / (coefficient * monomial), with the Bernoulli symbols already
/// evaluated.
struct BarnesPolynomial {
    umbral::Expression numerator;
    umbral::Monomial denominator;
    Rational denominator_coefficient{1};

    /// numerator * weight / denominator; the weight must absorb the
    /// denominator monomial exactly.
    umbral::Expression times_weight(const umbral::Monomial& weight) const;
};

/// (1/prod a_i) expect_B((z + sum a_i B_i)^n) with independent B_i.
BarnesPolynomial bernoulli_barnes(long n, const BarnesParameters& params,
                                  const umbral::ExpansionLimits& limits = {});

/// Integral over [0,1]^{k-1} of the Bernoulli-Barnes polynomial with
/// parameters (u_{k-1}...u_1, u_{k-1}...u_2, ..., u_{k-1}, 1) at z+1, weighted
/// by u_1 u_2^2 ... u_{k-1}^{k-1}. Equals B_n^(k)(z).
ZPolynomial barnes_transform_cube(long n, int k);
Rational barnes_transform_cube(long n, int k, const Rational& z);

/// Iterated integral over 0 <= v_1 <= ... <= v_{k-1} <= 1 of
/// expect((1 + z + B_k + v_{k-1} B_{k-1} + ... + v_1 B_1)^n) / (v_2...v_{k-1}).
/// Equals B_n^(k)(z). Requires k >= 2.
ZPolynomial simplex_transform(long n, int k);
Rational simplex_transform(long n, int k, const Rational& z);

}  // namespace polybern
