#include "polybern/polybernoulli.hpp"

#include <stdexcept>

#include "polybern/combinatorics.hpp"
#include "polybern/power_series.hpp"

namespace polybern {

using umbral::Expression;
using umbral::Factor;
using umbral::Monomial;
using umbral::SymbolId;
using umbral::SymbolKind;

std::string to_string(Variant v) { return v == Variant::B ? "B" : "C"; }

std::string to_string(Route r) {
    switch (r) {
        case Route::Series: return "series";
        case Route::Umbral: return "umbral";
        case Route::Stirling: return "stirling";
        case Route::BarnesCube: return "barnes-cube";
        case Route::BarnesSimplex: return "barnes-simplex";
    }
    return "?";
}

Variant parse_variant(const std::string& s) {
    if (s == "B" || s == "b") return Variant::B;
    if (s == "C" || s == "c") return Variant::C;
    throw std::invalid_argument("unknown variant '" + s + "' (expected B or C)");
}

Route parse_route(const std::string& s) {
    for (Route r : {Route::Series, Route::Umbral, Route::Stirling, Route::BarnesCube, Route::BarnesSimplex})
        if (to_string(r) == s) return r;
    throw std::invalid_argument("unknown route '" + s + "'");
}

namespace {

void require_k(int k) {
    if (k < 1) throw std::invalid_argument("poly-Bernoulli order k must be >= 1");
}

void require_n(long n) {
    if (n < 0) throw std::invalid_argument("index n must be >= 0");
}

}  // namespace

// ------------------------------------------------------------------ series

PolyBernoulliTable poly_bernoulli_series(long n_max, int k, Variant variant) {
    require_n(n_max);
    require_k(k);
    const auto N = static_cast<std::size_t>(n_max);

    // w(t) = 1 - e^{-t}; one extra order is spent on the division by a
    // valuation-1 denominator.
    const auto w = series::expm1(N + 1, Rational(-1)).scaled(Rational(-1));
    const auto li = compose(series::polylog(k, N + 1), w);
    const auto gf = variant == Variant::B ? divide(li, w) : divide(li, series::expm1(N + 1));

    PowerSeries<ZPolynomial> ezt(N);
    Rational inv_fact(1);
    for (std::size_t n = 0; n <= N; ++n) {
        ezt[n] = ZPolynomial::monomial(n, inv_fact);
        inv_fact /= Rational(static_cast<long>(n + 1));
    }
    const auto full = gf * ezt;

    PolyBernoulliTable t{k, variant, Route::Series, {}};
    t.entries.reserve(N + 1);
    Rational fact(1);
    for (std::size_t n = 0; n <= N; ++n) {
        if (n > 0) fact *= Rational(static_cast<long>(n));
        t.entries.push_back(full[n] * fact);
    }
    return t;
}

// ------------------------------------------------------------------ umbral

namespace {

Expression umbral_base(int k, Variant variant) {
    const auto sym = variant == Variant::B ? umbral::poly_symbol(k) : umbral::c_symbol(k);
    return Expression::symbol(SymbolId::Z()) + sym;
}

}  // namespace

ZPolynomial poly_bernoulli_umbral(long n, int k, Variant variant, const umbral::ExpansionLimits& limits) {
    require_n(n);
    require_k(k);
    return umbral::expect(umbral::expr_power(umbral_base(k, variant), static_cast<unsigned>(n), limits));
}

PolyBernoulliTable poly_bernoulli_umbral_table(long n_max, int k, Variant variant,
                                               const umbral::ExpansionLimits& limits) {
    require_n(n_max);
    require_k(k);
    const auto base = umbral_base(k, variant);
    PolyBernoulliTable t{k, variant, Route::Umbral, {}};
    Expression power(1);
    for (long n = 0; n <= n_max; ++n) {
        if (n > 0) power = Expression::multiply(power, base, limits);
        t.entries.push_back(umbral::expect(power));
    }
    return t;
}

// ---------------------------------------------------------------- stirling

Rational poly_bernoulli_stirling(long n, int k) {
    require_n(n);
    require_k(k);
    Rational acc;
    BigInt mfact = 1;
    for (long m = 0; m <= n; ++m) {
        if (m > 0) mfact *= m;
        Rational term = Rational(mfact * stirling2(n, m)) / Rational(m + 1).pow(k);
        if (m % 2 == 1) term = -term;
        acc += term;
    }
    return n % 2 == 1 ? -acc : acc;
}

// -------------------------------------------------------------- conversion

PolyBernoulliTable bc_convert(const PolyBernoulliTable& table, Conversion direction) {
    const bool to_c = direction == Conversion::BToC;
    if ((to_c && table.variant != Variant::B) || (!to_c && table.variant != Variant::C))
        throw std::invalid_argument("bc_convert: table variant does not match conversion direction");
    PolyBernoulliTable out{table.k, to_c ? Variant::C : Variant::B, table.route, {}};
    for (long n = 0; n <= table.n_max(); ++n) {
        ZPolynomial acc;
        for (long l = 0; l <= n; ++l) {
            Rational c(binomial(n, l));
            if (to_c && (n - l) % 2 == 1) c = -c;
            acc += table.polynomial(l) * c;
        }
        out.entries.push_back(std::move(acc));
    }
    return out;
}

// ------------------------------------------------------------------ barnes

Expression BarnesPolynomial::times_weight(const Monomial& weight) const {
    const Monomial cancel = weight / denominator;
    return Expression::multiply(numerator, Expression(cancel, denominator_coefficient.inverse()));
}

BarnesPolynomial bernoulli_barnes(long n, const BarnesParameters& params, const umbral::ExpansionLimits& limits) {
    require_n(n);
    if (params.a.empty()) throw std::invalid_argument("bernoulli_barnes: empty parameter list");
    BarnesPolynomial out;
    Expression base = params.z;
    std::vector<Factor> den;
    for (std::size_t i = 0; i < params.a.size(); ++i) {
        const auto& ai = params.a[i];
        if (!ai.is_monomial())
            throw std::invalid_argument("bernoulli_barnes: each parameter must be a single nonzero term");
        const auto& [m, c] = ai.terms().front();
        for (const auto& f : m.factors()) {
            if (f.symbol.kind == SymbolKind::Bernoulli)
                throw std::invalid_argument("bernoulli_barnes: parameters may not contain Bernoulli symbols");
            den.push_back(f);
        }
        out.denominator_coefficient *= c;
        base += Expression::multiply(ai, Expression::symbol(SymbolId::B(static_cast<std::uint32_t>(i + 1))));
    }
    out.denominator = Monomial::from_factors(std::move(den));
    out.numerator = umbral::expect_bernoulli(umbral::expr_power(base, static_cast<unsigned>(n), limits));
    return out;
}

namespace {

// prod_{j=i}^{k-1} U_j
Monomial tail_product(int i, int k) {
    std::vector<Factor> f;
    for (int j = i; j <= k - 1; ++j) f.push_back({SymbolId::U(static_cast<std::uint32_t>(j)), 1});
    return Monomial::from_factors(std::move(f));
}

}  // namespace

ZPolynomial barnes_transform_cube(long n, int k) {
    require_n(n);
    require_k(k);
    BarnesParameters p;
    for (int i = 1; i <= k; ++i) p.a.emplace_back(tail_product(i, k));
    p.z = Expression::symbol(SymbolId::Z()) + Expression(1);

    std::vector<Factor> w;
    for (int i = 1; i <= k - 1; ++i)
        w.push_back({SymbolId::U(static_cast<std::uint32_t>(i)), static_cast<std::uint32_t>(i)});
    const auto integrand = bernoulli_barnes(n, p).times_weight(Monomial::from_factors(std::move(w)));
    // Each u-monomial integrates over [0,1] to 1/(exponent+1).
    return umbral::expect(integrand);
}

Rational barnes_transform_cube(long n, int k, const Rational& z) { return barnes_transform_cube(n, k)(z); }

ZPolynomial simplex_transform(long n, int k) {
    require_n(n);
    if (k < 2) throw std::invalid_argument("simplex_transform: k must be >= 2");
    // v_i is carried by the formal symbol U_i.
    Expression base = Expression::symbol(SymbolId::Z()) + Expression(1) +
                      Expression::symbol(SymbolId::B(static_cast<std::uint32_t>(k)));
    for (int i = 1; i <= k - 1; ++i) {
        const auto idx = static_cast<std::uint32_t>(i);
        base += Expression(Monomial::from_factors({{SymbolId::B(idx), 1}, {SymbolId::U(idx), 1}}));
    }
    const auto integrand = umbral::expect_bernoulli(umbral::expr_power(base, static_cast<unsigned>(n)));

    std::vector<Rational> out;
    for (const auto& [m, c] : integrand.terms()) {
        Rational v = c;
        long carry = 0;  // exponent of v_j inherited from the inner integrations
        for (int j = 1; j <= k - 1; ++j) {
            long e = static_cast<long>(m.exponent(SymbolId::U(static_cast<std::uint32_t>(j)))) + carry;
            if (j >= 2) --e;  // density factor 1/v_j
            if (e < 0) throw std::logic_error("simplex_transform: negative exponent after density division");
            v /= Rational(e + 1);
            carry = e + 1;
        }
        const auto zdeg = m.exponent(SymbolId::Z());
        if (out.size() <= zdeg) out.resize(zdeg + 1);
        out[zdeg] += v;
    }
    return ZPolynomial(std::move(out));
}

Rational simplex_transform(long n, int k, const Rational& z) { return simplex_transform(n, k)(z); }

}  // namespace polybern
