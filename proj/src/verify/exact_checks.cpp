#include <algorithm>

#include "polybern/combinatorics.hpp"
#include "polybern/power_series.hpp"
#include "polybern/umbral.hpp"
#include "polybern/verify.hpp"

namespace polybern::verify {

using umbral::Expression;
using umbral::Monomial;
using umbral::SymbolId;

std::string to_string(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Skip: return "skip";
    }
    return "?";
}

std::string to_string(SignReading r) {
    return r == SignReading::ProductOfSigns ? "product-of-signs" : "inner-sign-only";
}

const PolyBernoulliTable& ReferenceTables::get(int k, Variant v) {
    const auto key = std::make_pair(k, static_cast<int>(v));
    auto it = tables_.find(key);
    if (it != tables_.end()) return it->second;
    auto table = poly_bernoulli_series(n_cap_, k, v);
    if (corrupt_ && k == 2 && v == Variant::B && table.entries.size() > 3)
        table.entries[3] += ZPolynomial(Rational(1, 1000));
    return tables_.emplace(key, std::move(table)).first->second;
}

const std::vector<ZPolynomial>& ReferenceTables::bernoulli() {
    if (bernoulli_.empty()) bernoulli_ = bernoulli_polynomials(n_cap_ + 2);
    return bernoulli_;
}

namespace {

Rational binom(long n, long m) { return Rational(binomial(n, m)); }

IdentityCheck make(const std::string& name, const std::string& suite, Json params) {
    IdentityCheck c;
    c.name = name;
    c.suite = suite;
    c.params = std::move(params);
    return c;
}

long first_difference(const ZPolynomial& a, const ZPolynomial& b) {
    const long d = std::max(a.degree(), b.degree());
    for (long i = 0; i <= d; ++i)
        if (a.coeff(i) != b.coeff(i)) return i;
    return -1;
}

Json difference_witness(Json where, const ZPolynomial& lhs, const ZPolynomial& rhs) {
    const long i = first_difference(lhs, rhs);
    where["coefficient"] = i;
    where["lhs_coefficient"] = lhs.coeff(i).str();
    where["rhs_coefficient"] = rhs.coeff(i).str();
    return where;
}

// Records the first mismatch as a failure; returns whether the sides agree.
bool expect_equal(IdentityCheck& c, const ZPolynomial& lhs, const ZPolynomial& rhs, Json where) {
    if (lhs == rhs) return true;
    if (c.status != Status::Fail) {
        c.status = Status::Fail;
        c.witness = difference_witness(std::move(where), lhs, rhs);
        c.lhs = lhs.str();
        c.rhs = rhs.str();
    }
    return false;
}

void skip_if_empty(IdentityCheck& c, bool empty, const std::string& why) {
    if (empty) {
        c.status = Status::Skip;
        c.detail = why;
    }
}

Json grid(int n_max, int k_max, const std::string& variant) {
    return Json{{"n_max", n_max}, {"k_min", 2}, {"k_max", k_max}, {"variant", variant}};
}

const char* vname(Variant v) { return v == Variant::B ? "B" : "C"; }

}  // namespace

IdentityCheck check_recurrence(ReferenceTables& t, int n_max, int k_max, Variant v) {
    auto c = make(std::string("recurrence_") + vname(v), "recurrence", grid(n_max, k_max, vname(v)));
    skip_if_empty(c, k_max < 2 || n_max < 0, "needs k >= 2");
    if (c.status == Status::Skip) return c;
    const auto& bern = t.bernoulli();
    std::vector<ZPolynomial> bz1;
    for (long l = 0; l <= n_max; ++l) bz1.push_back(bern[l].shift(Rational(1)));
    for (int k = 2; k <= k_max; ++k) {
        const auto& cur = t.get(k, v);
        const auto& prev = t.get(k - 1, v);
        for (long n = 0; n <= n_max; ++n) {
            ZPolynomial rhs;
            for (long m = 0; m <= n; ++m) {
                if (v == Variant::B) {
                    ZPolynomial inner;
                    for (long l = 0; l <= m; ++l) {
                        Rational coef = binom(m, l) / Rational(n - l + 1);
                        if ((m - l) % 2) coef = -coef;
                        inner += bz1[l] * coef;
                    }
                    rhs += inner * (binom(n, m) * prev.number(n - m));
                } else {
                    rhs += bern[m] * (binom(n, m) * prev.number(n - m) / Rational(n - m + 1));
                }
            }
            if (!expect_equal(c, cur.polynomial(n), rhs, Json{{"n", n}, {"k", k}})) return c;
        }
    }
    return c;
}

IdentityCheck check_recurrence_variant_falsified(ReferenceTables& t, int n_max, int k_max, SignReading r,
                                                 int case_cap) {
    auto c = make("recurrence_variant_falsified[" + to_string(r) + "]", "recurrence",
                  Json{{"n_max", n_max}, {"k_min", 2}, {"k_max", k_max}, {"reading", to_string(r)},
                       {"case_cap", case_cap}});
    const auto& bern = t.bernoulli();
    int cases = 0;
    for (int k = 2; k <= k_max; ++k) {
        const auto& cur = t.get(k, Variant::B);
        const auto& prev = t.get(k - 1, Variant::B);
        for (long n = 0; n <= n_max; ++n) {
            if (cases == case_cap) break;
            ++cases;
            ZPolynomial rhs;
            for (long m = 0; m <= n; ++m) {
                ZPolynomial inner;
                for (long l = 0; l <= m; ++l) {
                    Rational coef = binom(m, l) / Rational(n - l + 1);
                    const long sign_power = r == SignReading::ProductOfSigns ? m + l : l;
                    if (sign_power % 2) coef = -coef;
                    inner += bern[l] * coef;
                }
                rhs += inner * (binom(n, m) * prev.number(n - m));
            }
            const auto& lhs = cur.polynomial(n);
            if (lhs != rhs) {
                c.status = Status::Pass;
                c.witness = difference_witness(Json{{"n", n}, {"k", k}}, lhs, rhs);
                c.lhs = lhs.str();
                c.rhs = rhs.str();
                c.measured["cases_scanned"] = cases;
                return c;
            }
        }
    }
    c.status = Status::Fail;
    c.measured["cases_scanned"] = cases;
    c.detail = "no counterexample in the scanned grid";
    return c;
}

IdentityCheck check_connection(ReferenceTables& t, int n_max, int k_max, Variant v) {
    auto c = make(std::string("connection_") + vname(v), "recurrence", grid(n_max, k_max, vname(v)));
    skip_if_empty(c, k_max < 2 || n_max < 0, "needs k >= 2");
    if (c.status == Status::Skip) return c;
    const auto& bern = t.bernoulli();
    for (int k = 2; k <= k_max; ++k) {
        const auto& cur = t.get(k, v);
        const auto& prev = t.get(k - 1, v);
        for (long n = 0; n <= n_max; ++n) {
            ZPolynomial rhs;
            for (long l = 0; l <= n; ++l) {
                const Rational coef = binom(n + 1, l + 1) / Rational(n + 1);
                if (v == Variant::B)
                    rhs += bern[n - l].shift(Rational(1)) * (coef * prev.polynomial(l)(Rational(-1)));
                else
                    rhs += bern[n - l] * (coef * prev.number(l));
            }
            if (!expect_equal(c, cur.polynomial(n), rhs, Json{{"n", n}, {"k", k}})) return c;
        }
    }
    return c;
}

IdentityCheck check_connection_fourier_form(ReferenceTables& t, int n_max, int k_max) {
    auto c = make("connection_fourier_form", "recurrence", grid(n_max, k_max, "C"));
    skip_if_empty(c, k_max < 2 || n_max < 0, "needs k >= 2");
    if (c.status == Status::Skip) return c;
    const auto& bern = t.bernoulli();
    for (int k = 2; k <= k_max; ++k) {
        const auto& cur = t.get(k, Variant::C);
        const auto& prev = t.get(k - 1, Variant::C);
        for (long n = 0; n <= n_max; ++n) {
            ZPolynomial rhs;
            for (long p = 1; p <= n + 1; ++p)
                rhs += bern[n - p + 1] * (binom(n + 1, p) * prev.number(p - 1) / Rational(n + 1));
            if (!expect_equal(c, cur.polynomial(n), rhs, Json{{"n", n}, {"k", k}})) return c;
        }
    }
    return c;
}

IdentityCheck check_difference(ReferenceTables& t, int n_max, int k_max, Variant v) {
    auto c = make(std::string("difference_") + vname(v), "recurrence", grid(n_max, k_max, vname(v)));
    skip_if_empty(c, k_max < 2 || n_max < 0, "needs k >= 2");
    if (c.status == Status::Skip) return c;
    for (int k = 2; k <= k_max; ++k) {
        const auto& cur = t.get(k, v);
        const auto& prev = t.get(k - 1, v);
        for (long n = 0; n <= n_max; ++n) {
            const auto& p = cur.polynomial(n);
            const ZPolynomial lhs = v == Variant::B ? p - p.shift(Rational(-1)) : p.shift(Rational(1)) - p;
            ZPolynomial rhs;
            for (long l = 1; l <= n; ++l) {
                const Rational q = v == Variant::B ? prev.polynomial(l - 1)(Rational(-1)) : prev.number(l - 1);
                rhs += ZPolynomial::monomial(n - l, binom(n, l) * q);
            }
            if (!expect_equal(c, lhs, rhs, Json{{"n", n}, {"k", k}})) return c;
        }
    }
    return c;
}

IdentityCheck check_higher_difference(ReferenceTables& t, int n_max, int k_max, int m_max, Variant v) {
    auto params = grid(n_max, k_max, vname(v));
    params["m_max"] = m_max;
    auto c = make(std::string("higher_difference_") + vname(v), "recurrence", params);
    skip_if_empty(c, k_max < 2 || n_max < 0 || m_max < 0, "needs k >= 2");
    if (c.status == Status::Skip) return c;
    const auto& bern = t.bernoulli();
    const Rational off = v == Variant::B ? Rational(1) : Rational(0);
    for (int k = 2; k <= k_max; ++k) {
        const auto& cur = t.get(k, v);
        const auto& prev = t.get(k - 1, v);
        for (long n = 0; n <= n_max; ++n) {
            const auto& p = cur.polynomial(n);
            for (long m = 0; m <= m_max; ++m) {
                const ZPolynomial lhs = p.shift(Rational(m)) - p;
                ZPolynomial rhs;
                for (long l = 1; l <= n; ++l) {
                    const Rational q = v == Variant::B ? prev.polynomial(l - 1)(Rational(-1)) : prev.number(l - 1);
                    const auto& b = bern[n - l + 1];
                    rhs += (b.shift(Rational(m) + off) - b.shift(off)) * (binom(n, l) * q / Rational(n - l + 1));
                }
                if (!expect_equal(c, lhs, rhs, Json{{"n", n}, {"k", k}, {"m", m}})) return c;
            }
        }
    }
    return c;
}

IdentityCheck check_faulhaber(ReferenceTables& t, int d_max, int m_max) {
    auto c = make("faulhaber", "recurrence", Json{{"d_max", d_max}, {"m_max", m_max}});
    const auto& bern = t.bernoulli();
    for (long d = 0; d <= d_max; ++d) {
        for (long m = 0; m <= m_max; ++m) {
            ZPolynomial lhs;
            for (long i = 0; i < m; ++i) {
                ZPolynomial term(1);
                const ZPolynomial base{Rational(1 + i), Rational(1)};
                for (long e = 0; e < d; ++e) term *= base;
                lhs += term;
            }
            const auto& b = bern[d + 1];
            const ZPolynomial rhs = (b.shift(Rational(m + 1)) - b.shift(Rational(1))) * Rational(1, d + 1);
            if (!expect_equal(c, lhs, rhs, Json{{"d", d}, {"m", m}})) return c;
        }
    }
    return c;
}

namespace {

const Expression kZ = Expression::symbol(SymbolId::Z());

// sum_{j=1}^{n} C(n,j) z^{n-j} X^{j-1}, given X^0..X^{n-1}.
Expression divided_difference(long n, const std::vector<Expression>& xpow) {
    Expression q;
    for (long j = 1; j <= n; ++j) {
        const Expression zpow(Monomial::of(SymbolId::Z(), static_cast<std::uint32_t>(n - j)), binom(n, j));
        q += Expression::multiply(zpow, xpow[static_cast<std::size_t>(j - 1)]);
    }
    return q;
}

std::vector<Expression> powers(const Expression& x, long n_max) {
    std::vector<Expression> out{Expression(1)};
    for (long i = 1; i <= n_max; ++i) out.push_back(Expression::multiply(out.back(), x));
    return out;
}

// Forward difference of E[f(z + X)] for f = z^n, n = 0..n_max.
std::vector<ZPolynomial> forward_differences(const Expression& x, long n_max) {
    const auto a = powers(Expression(1) + kZ + x, n_max);
    const auto b = powers(kZ + x, n_max);
    std::vector<ZPolynomial> out;
    for (long n = 0; n <= n_max; ++n) out.push_back(umbral::expect(a[n]) - umbral::expect(b[n]));
    return out;
}

}  // namespace

IdentityCheck check_symbolic_extension(int n_max, int k_max) {
    auto c = make("symbolic_extension", "recurrence", Json{{"n_max", n_max}, {"k_min", 1}, {"k_max", k_max}});
    skip_if_empty(c, k_max < 1 || n_max < 0, "empty grid");
    if (c.status == Status::Skip) return c;
    for (int k = 1; k <= k_max; ++k) {
        const auto lhs = forward_differences(umbral::c_symbol(k), n_max);
        std::vector<Expression> xpow;
        if (k >= 2) xpow = powers(umbral::c_symbol(k - 1), n_max);
        for (long n = 0; n <= n_max; ++n) {
            const ZPolynomial rhs = k == 1 ? ZPolynomial::monomial(n, Rational(1)).derivative()
                                           : umbral::expect(divided_difference(n, xpow));
            if (!expect_equal(c, lhs[n], rhs, Json{{"n", n}, {"k", k}})) return c;
        }
    }
    return c;
}

IdentityCheck check_symbolic_extension_b_form_falsified(int n_max, int k_max) {
    auto c = make("symbolic_extension_b_form_falsified", "recurrence",
                  Json{{"n_max", n_max}, {"k_min", 2}, {"k_max", k_max}});
    for (int k = 2; k <= k_max; ++k) {
        const auto lhs = forward_differences(umbral::poly_symbol(k), n_max);
        const auto xpow = powers(umbral::poly_symbol(k - 1), n_max);
        for (long n = 0; n <= n_max; ++n) {
            const ZPolynomial rhs = umbral::expect(divided_difference(n, xpow));
            if (lhs[n] != rhs) {
                c.status = Status::Pass;
                c.witness = difference_witness(Json{{"n", n}, {"k", k}}, lhs[n], rhs);
                c.lhs = lhs[n].str();
                c.rhs = rhs.str();
                return c;
            }
        }
    }
    c.status = Status::Fail;
    c.detail = "no counterexample in the scanned grid";
    return c;
}

IdentityCheck check_generating_identity(ReferenceTables& t, int k_max, int order) {
    auto c = make("generating_identity", "transforms", Json{{"k_min", 1}, {"k_max", k_max}, {"order", order}});
    skip_if_empty(c, k_max < 1 || order < 0, "empty grid");
    if (c.status == Status::Skip) return c;
    const auto N = static_cast<std::size_t>(order);
    const auto b = bernoulli_numbers(order);
    for (int k = 1; k <= k_max; ++k) {
        PowerSeries<Expression> prod(N);
        prod[0] = Expression(1);
        for (int i = 1; i <= k; ++i) {
            PowerSeries<Expression> f(N);
            Rational inv_fact(1);
            for (std::size_t n = 0; n <= N; ++n) {
                if (n > 0) inv_fact /= Rational(static_cast<long>(n));
                std::vector<umbral::Factor> fs;
                for (int j = i; j <= k - 1; ++j)
                    fs.push_back({SymbolId::U(static_cast<std::uint32_t>(j)), static_cast<std::uint32_t>(n)});
                f[n] = Expression(Monomial::from_factors(std::move(fs)), b[n] * inv_fact);
            }
            prod = prod * f;
        }
        const auto& ref = t.get(k, Variant::C);
        Rational fact(1);
        for (std::size_t n = 0; n <= N; ++n) {
            if (n > 0) fact *= Rational(static_cast<long>(n));
            const Expression integrated = umbral::expect_uniform(prod[n]);
            const ZPolynomial lhs(integrated.constant() * fact);
            const ZPolynomial rhs(ref.number(static_cast<long>(n)));
            const bool constant = integrated.is_zero() || (integrated.is_monomial() && integrated.terms()[0].first.is_one());
            if (!constant) {
                c.status = Status::Fail;
                c.witness = Json{{"n", n}, {"k", k}, {"reason", "non-constant after integration"}};
                return c;
            }
            if (!expect_equal(c, lhs, rhs, Json{{"n", n}, {"k", k}})) return c;
        }
    }
    return c;
}

std::vector<IdentityCheck> check_umbral_axioms(int n_max, int factor_max, int recursion_k_max) {
    std::vector<IdentityCheck> out;
    const Expression B1 = Expression::symbol(SymbolId::B(1));
    const Expression B2 = Expression::symbol(SymbolId::B(2));
    const Expression U1 = Expression::symbol(SymbolId::U(1));
    const auto b = bernoulli_numbers(std::max(n_max, factor_max));

    {
        auto c = make("umbral_cancellation", "umbral", Json{{"n_max", n_max}});
        const auto p = powers(U1 + B1, n_max);
        for (long n = 0; n <= n_max; ++n)
            if (!expect_equal(c, umbral::expect(p[n]), ZPolynomial(Rational(n == 0 ? 1 : 0)), Json{{"n", n}})) break;
        out.push_back(std::move(c));
    }
    {
        auto c = make("umbral_uniform_shift", "umbral", Json{{"n_max", n_max}});
        const auto p = powers(kZ + U1 + B1, n_max);
        for (long n = 0; n <= n_max; ++n)
            if (!expect_equal(c, umbral::expect(p[n]), ZPolynomial::monomial(n, Rational(1)), Json{{"n", n}})) break;
        out.push_back(std::move(c));
    }
    {
        auto c = make("umbral_periodicity", "umbral", Json{{"n_max", n_max}});
        const auto p = powers(Expression(1) + B1, n_max);
        const auto q = powers(B1, n_max);
        for (long n = 0; n <= n_max; ++n) {
            const ZPolynomial rhs = umbral::expect(q[n]) * Rational(n % 2 ? -1 : 1);
            if (!expect_equal(c, umbral::expect(p[n]), rhs, Json{{"n", n}})) break;
        }
        out.push_back(std::move(c));
    }
    {
        auto c = make("umbral_factorization", "umbral", Json{{"exponent_max", factor_max}});
        for (std::uint32_t a = 0; a <= static_cast<std::uint32_t>(factor_max) && c.status != Status::Fail; ++a)
            for (std::uint32_t bb = 0; bb <= static_cast<std::uint32_t>(factor_max) && c.status != Status::Fail; ++bb)
                for (std::uint32_t cc = 0; cc <= static_cast<std::uint32_t>(factor_max); ++cc) {
                    const auto m = Monomial::from_factors(
                        {{SymbolId::B(1), a}, {SymbolId::B(2), bb}, {SymbolId::U(1), cc}});
                    const ZPolynomial rhs(b[a] * b[bb] / Rational(static_cast<long>(cc) + 1));
                    if (!expect_equal(c, umbral::expect(Expression(m)), rhs, Json{{"a", a}, {"b", bb}, {"c", cc}}))
                        break;
                }
        out.push_back(std::move(c));
    }
    {
        auto c = make("umbral_symbol_recursion", "umbral", Json{{"k_min", 2}, {"k_max", recursion_k_max}});
        for (int k = 2; k <= recursion_k_max; ++k) {
            const Expression rhs =
                Expression(1) + Expression::symbol(SymbolId::B(static_cast<std::uint32_t>(k))) +
                Expression::multiply(Expression::symbol(SymbolId::U(static_cast<std::uint32_t>(k - 1))),
                                     umbral::poly_symbol(k - 1) - Expression(1));
            if (umbral::poly_symbol(k) != rhs) {
                c.status = Status::Fail;
                c.witness = Json{{"k", k}};
                c.lhs = umbral::poly_symbol(k).str();
                c.rhs = rhs.str();
                break;
            }
        }
        out.push_back(std::move(c));
    }
    {
        // Fixed family of expressions and weights; no randomness.
        auto c = make("umbral_linearity", "umbral", Json{{"cases", 9}});
        const std::vector<Expression> family{
            expr_power(kZ + B1 + U1, 5), Expression::multiply(expr_power(B2 + U1 * B1, 4), kZ),
            expr_power(umbral::poly_symbol(3), 4)};
        const std::vector<std::pair<Rational, Rational>> weights{
            {Rational(3, 7), Rational(-5, 2)}, {Rational(1), Rational(1)}, {Rational(-2), Rational(11, 3)}};
        int idx = 0;
        for (std::size_t i = 0; i < family.size(); ++i) {
            const auto& e1 = family[i];
            const auto& e2 = family[(i + 1) % family.size()];
            for (const auto& [a, bb] : weights) {
                const ZPolynomial lhs = umbral::expect(e1 * a + e2 * bb);
                const ZPolynomial rhs = umbral::expect(e1) * a + umbral::expect(e2) * bb;
                if (!expect_equal(c, lhs, rhs, Json{{"case", idx}})) break;
                ++idx;
            }
        }
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<IdentityCheck> check_polybernoulli_invariants(ReferenceTables& t, const VerifyConfig& cfg) {
    std::vector<IdentityCheck> out;
    {
        auto c = make("route_agreement", "transforms",
                      Json{{"n_max", cfg.route_n_max}, {"k_min", 1}, {"k_max", cfg.route_k_max}});
        for (int k = 1; k <= cfg.route_k_max && c.status != Status::Fail; ++k) {
            const auto& s = t.get(k, Variant::B);
            const auto u = poly_bernoulli_umbral_table(cfg.route_n_max, k, Variant::B);
            for (long n = 0; n <= cfg.route_n_max; ++n) {
                if (!expect_equal(c, s.polynomial(n), u.polynomial(n), Json{{"n", n}, {"k", k}, {"routes", "series/umbral"}}))
                    break;
                if (!expect_equal(c, ZPolynomial(s.number(n)), ZPolynomial(poly_bernoulli_stirling(n, k)),
                                  Json{{"n", n}, {"k", k}, {"routes", "series/stirling"}}))
                    break;
            }
        }
        out.push_back(std::move(c));
    }
    {
        auto c = make("classical_reduction", "transforms", Json{{"n_max", cfg.reduction_n_max}, {"k", 1}});
        const auto& b = t.get(1, Variant::B);
        const auto& cc = t.get(1, Variant::C);
        const auto& bern = t.bernoulli();
        for (long n = 0; n <= cfg.reduction_n_max; ++n) {
            if (!expect_equal(c, b.polynomial(n), bern[n].shift(Rational(1)), Json{{"n", n}, {"variant", "B"}})) break;
            if (!expect_equal(c, cc.polynomial(n), bern[n], Json{{"n", n}, {"variant", "C"}})) break;
        }
        out.push_back(std::move(c));
    }
    {
        auto c = make("monic_degree", "transforms", Json{{"n_max", cfg.n_max}, {"k_min", 1}, {"k_max", cfg.k_max}});
        for (int k = 1; k <= cfg.k_max && c.status != Status::Fail; ++k) {
            const auto& tb = t.get(k, Variant::B);
            for (long n = 0; n <= cfg.n_max; ++n) {
                const auto& p = tb.polynomial(n);
                if (p.degree() != n || !p.leading().is_one()) {
                    c.status = Status::Fail;
                    c.witness = Json{{"n", n}, {"k", k}, {"degree", p.degree()}, {"leading", p.leading().str()}};
                    break;
                }
            }
        }
        out.push_back(std::move(c));
    }
    {
        auto c = make("bc_conversion", "transforms", Json{{"n_max", cfg.n_max}, {"k_min", 1}, {"k_max", cfg.k_max}});
        for (int k = 1; k <= cfg.k_max && c.status != Status::Fail; ++k) {
            const auto& tb = t.get(k, Variant::B);
            const auto& tc = t.get(k, Variant::C);
            PolyBernoulliTable head{k, Variant::B, Route::Series,
                                    {tb.entries.begin(), tb.entries.begin() + cfg.n_max + 1}};
            const auto conv = bc_convert(head, Conversion::BToC);
            for (long n = 0; n <= cfg.n_max; ++n) {
                if (!expect_equal(c, tc.polynomial(n), tb.polynomial(n).shift(Rational(-1)),
                                  Json{{"n", n}, {"k", k}, {"form", "shift"}}))
                    break;
                if (!expect_equal(c, conv.polynomial(n), tc.polynomial(n), Json{{"n", n}, {"k", k}, {"form", "sum"}}))
                    break;
            }
        }
        out.push_back(std::move(c));
    }
    {
        auto c = make("barnes_cube", "transforms",
                      Json{{"n_max", cfg.cube_n_max}, {"k_min", 1}, {"k_max", cfg.transform_k_max},
                           {"z", Json::array({"formal", "0", "1", "-1"})}});
        for (int k = 1; k <= cfg.transform_k_max && c.status != Status::Fail; ++k) {
            const auto& tb = t.get(k, Variant::B);
            for (long n = 0; n <= cfg.cube_n_max; ++n) {
                const auto cube = barnes_transform_cube(n, k);
                if (!expect_equal(c, cube, tb.polynomial(n), Json{{"n", n}, {"k", k}, {"z", "formal"}})) break;
                bool ok = true;
                for (long zv : {0L, 1L, -1L}) {
                    const Rational z(zv);
                    if (!expect_equal(c, ZPolynomial(barnes_transform_cube(n, k, z)), ZPolynomial(tb.polynomial(n)(z)),
                                      Json{{"n", n}, {"k", k}, {"z", zv}})) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) break;
            }
        }
        out.push_back(std::move(c));
    }
    {
        auto c = make("barnes_simplex", "transforms",
                      Json{{"n_max", cfg.simplex_n_max}, {"k_min", 2}, {"k_max", cfg.transform_k_max}});
        skip_if_empty(c, cfg.transform_k_max < 2, "needs k >= 2");
        for (int k = 2; k <= cfg.transform_k_max && c.status != Status::Fail; ++k) {
            const auto& tb = t.get(k, Variant::B);
            for (long n = 0; n <= cfg.simplex_n_max; ++n)
                if (!expect_equal(c, simplex_transform(n, k), tb.polynomial(n), Json{{"n", n}, {"k", k}})) break;
        }
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace polybern::verify
