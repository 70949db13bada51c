#include "polybern/zeta.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "polybern/special.hpp"

namespace polybern::numeric {

namespace {

// int_0^1 (b + u c)^{-m} du.
cplx inner_u1(cplx b, cplx c, int m) {
    const cplx x = c / b;
    const cplx l = log1p(x);
    if (m == 1) return l / c;
    const double e = 1.0 - m;
    return std::pow(b, e) * expm1(e * l) / (e * c);
}

// int_0^1 (F(b + u q) - F(b)) / u du with F' = y^{-m}.
cplx inner_h(cplx b, cplx q, int m) {
    const cplx x = q / b;
    if (m == 1) return -dilog(-x);
    const int j = m - 1;
    const cplx l = log1p(x);
    cplx acc = l;
    for (int r = 2; r <= j; ++r) acc += expm1((1.0 - r) * l) / (1.0 - r);
    return std::pow(b, -j) / static_cast<double>(j) * acc;
}

cplx ipow(cplx d, int m) {
    cplx r = 1.0;
    for (int i = 0; i < m; ++i) r *= d;
    return r;
}

int panel_scale(double d) { return std::max(1, static_cast<int>(std::ceil(0.5 / d - 1e-12))); }

// sum_{j<m} x^j / j!
double exp_partial(int m, double x) {
    double s = 0.0, t = 1.0;
    for (int j = 0; j < m; ++j) {
        s += t;
        t *= x / (j + 1);
    }
    return s;
}

}  // namespace

double denominator_distance(const MomentKernel& kr) {
    double lo = kr.z, hi = kr.z;
    for (int l = 1; l <= kr.k; ++l) {
        const double s = kr.shifts.empty() ? -0.5 : kr.shifts[l - 1];
        if (l == kr.k) {
            lo += s;
            hi += s;
        } else {
            lo += std::min(0.0, s);
            hi += std::max(0.0, s);
        }
    }
    if (lo <= 0.0 && hi >= 0.0) return 0.0;
    return std::min(std::abs(lo), std::abs(hi));
}

QuadratureResult symbol_moment(const MomentKernel& kr, const QuadratureSpec& spec) {
    spec.validate();
    if (kr.k < 1) throw std::invalid_argument("symbol_moment: k must be >= 1");
    if (kr.m < 1) throw std::invalid_argument("symbol_moment: m must be >= 1");
    if (!kr.shifts.empty() && static_cast<int>(kr.shifts.size()) != kr.k)
        throw std::invalid_argument("symbol_moment: need one shift per symbol");
    const int k = kr.k, m = kr.m;
    const int n_numeric_u = kr.analytic_u ? std::max(0, k - 3) : k - 1;
    if (k + n_numeric_u > static_cast<int>(kMaxDims))
        throw std::invalid_argument("symbol_moment: too many integration axes");
    const double d = denominator_distance(kr);
    if (d < kDenominatorGuard)
        throw std::domain_error("symbol_moment: denominator comes within " + std::to_string(kDenominatorGuard) +
                                " of zero on the integration domain");

    std::vector<double> s(static_cast<std::size_t>(k), -0.5);
    if (!kr.shifts.empty()) s = kr.shifts;

    const double W = sech2_half_width(k * std::pow(d, -m), 1e-3 * spec.tolerance);
    const int pw = spec.panels * panel_scale(d);
    std::vector<Axis> axes;
    for (int l = 0; l < k; ++l) axes.push_back(Axis::sech2(W, pw));
    for (int j = 0; j < n_numeric_u; ++j) axes.push_back(Axis::unit(spec.panels));

    const double z = kr.z;
    if (!kr.analytic_u || k == 1) {
        // x = (w_1..w_k, u_1..u_{k-1}).
        return integrate(axes, spec, [&](const double* x) {
            cplx D = z + cplx(s[k - 1], x[k - 1]);
            double p = 1.0;
            for (int l = k - 2; l >= 0; --l) {
                p *= x[k + l];
                D += cplx(s[l], x[l]) * p;
            }
            return 1.0 / ipow(D, m);
        });
    }
    if (k == 2) {
        return integrate(axes, spec, [&](const double* x) {
            return inner_u1(z + cplx(s[1], x[1]), cplx(s[0], x[0]), m);
        });
    }
    // k >= 3: x = (w_1..w_k, u_3..u_{k-1}); u_1 and u_2 in closed form.
    return integrate(axes, spec, [&](const double* x) {
        cplx A = z + cplx(s[k - 1], x[k - 1]);
        double p = 1.0;
        for (int l = k - 2; l >= 2; --l) {
            p *= x[k + l - 2];
            A += cplx(s[l], x[l]) * p;
        }
        const cplx c1 = cplx(s[0], x[0]) * p;
        const cplx c2 = cplx(s[1], x[1]) * p;
        return (inner_h(A, c1 + c2, m) - inner_h(A, c2, m)) / c1;
    });
}

QuadratureResult negative_moment(int k, int m, double z, const QuadratureSpec& spec) {
    MomentKernel kr;
    kr.k = k;
    kr.m = m;
    kr.z = z;
    return symbol_moment(kr, spec);
}

QuadratureResult ak_zeta_mellin(int k, int m, double tol, const QuadratureSpec& spec) {
    if (k < 1) throw std::invalid_argument("ak_zeta_mellin: k must be >= 1");
    if (m < 1) throw std::invalid_argument("ak_zeta_mellin: m must be >= 1");
    if (!(tol > 0.0)) throw std::invalid_argument("ak_zeta_mellin: tol must be positive");
    if (k == 1) {
        QuadratureResult r;
        r.value = m * riemann_zeta(m + 1);
        r.tail_bound = 0.0;
        return r;
    }
    const double zk = riemann_zeta(k);
    double T = 1.0;
    auto bound = [&](double t) { return zk * std::exp(-t) * exp_partial(m, t) / -std::expm1(-t); };
    while (bound(T) >= 0.5 * tol) T += 0.5;

    QuadratureSpec q = spec;
    q.tolerance = 0.5 * tol;
    q.panels = std::max(spec.panels, static_cast<int>(std::ceil(T / 2.0)));
    double fact = 1.0;
    for (int i = 2; i < m; ++i) fact *= i;
    auto r = integrate({Axis::interval(0.0, T, q.panels)}, q, [&](const double* x) {
        const double t = x[0];
        const double e = std::expm1(-t);  // e^{-t} - 1
        const double li = polylog_complement(k, -e, std::exp(-t));
        return cplx(std::pow(t, m - 1) * li / std::expm1(t) / fact, 0.0);
    });
    r.tail_bound = bound(T);
    return r;
}

namespace {

void check_barnes_args(int m, double w, const std::vector<double>& a, const char* who) {
    if (a.empty()) throw std::invalid_argument(std::string(who) + ": empty parameter list");
    for (double ai : a)
        if (!(ai > 0.0)) throw std::domain_error(std::string(who) + ": parameters must be positive");
    if (!(w > 0.0)) throw std::domain_error(std::string(who) + ": requires w > 0");
    if (m <= static_cast<int>(a.size())) throw std::domain_error(std::string(who) + ": requires m > len(a)");
}

}  // namespace

QuadratureResult barnes_zeta_mellin(int m, double w, const std::vector<double>& a, double tol,
                                    const QuadratureSpec& spec) {
    check_barnes_args(m, w, a, "barnes_zeta_mellin");
    if (!(tol > 0.0)) throw std::invalid_argument("barnes_zeta_mellin: tol must be positive");
    const int k = static_cast<int>(a.size());
    double amax = 0.0;
    for (double ai : a) amax = std::max(amax, ai);
    auto bound = [&](double t) {
        double c = 1.0;
        for (double ai : a) c /= -std::expm1(-ai * t);
        return c * std::pow(w, -m) * std::exp(-w * t) * exp_partial(m, w * t);
    };
    double T = 1.0;
    while (bound(T) >= 0.5 * tol) T += 0.5;

    QuadratureSpec q = spec;
    q.tolerance = 0.5 * tol;
    const double width = std::min(2.0, std::numbers::pi / amax);
    q.panels = std::max(spec.panels, static_cast<int>(std::ceil(T / width)));
    double gamma_m = 1.0;
    for (int i = 2; i < m; ++i) gamma_m *= i;
    auto r = integrate({Axis::interval(0.0, T, q.panels)}, q, [&](const double* x) {
        const double t = x[0];
        double v = std::pow(t, m - 1 - k) * std::exp(-w * t) / gamma_m;
        for (double ai : a) v *= t / -std::expm1(-ai * t);
        return cplx(v, 0.0);
    });
    r.tail_bound = bound(T);
    return r;
}

QuadratureResult barnes_zeta_sech(int m, double w, const std::vector<double>& a, const QuadratureSpec& spec) {
    check_barnes_args(m, w, a, "barnes_zeta_sech");
    spec.validate();
    const int k = static_cast<int>(a.size());
    if (k > static_cast<int>(kMaxDims)) throw std::invalid_argument("barnes_zeta_sech: too many parameters");
    const int p = m - k;
    double asum = 0.0, aprod = 1.0;
    for (double ai : a) {
        asum += ai;
        aprod *= ai;
    }
    // Gamma(m-k)/Gamma(m) = 1/((m-1)(m-2)...(m-k)).
    double pref = 1.0 / aprod;
    for (int i = p; i < m; ++i) pref /= i;

    const double d = std::min(0.5, w / asum);
    const double W = sech2_half_width(k * std::pow(w, -p), 1e-3 * spec.tolerance / pref);
    std::vector<Axis> axes(static_cast<std::size_t>(k), Axis::sech2(W, spec.panels * panel_scale(d)));
    QuadratureSpec q = spec;
    q.tolerance = spec.tolerance / pref;
    auto r = integrate(axes, q, [&](const double* x) {
        double y = 0.0;
        for (int n = 0; n < k; ++n) y += a[n] * x[n];
        return 1.0 / ipow(cplx(w, -y), p);
    });
    r.value *= pref;
    r.imag_residue *= pref;
    r.convergence_delta *= pref;
    for (auto& dl : r.deltas) dl *= pref;
    return r;
}

void MzSignature::validate() const {
    if (exponents.empty()) throw std::invalid_argument("MzSignature: empty signature");
    if (exponents.front() < 2) throw std::domain_error("MzSignature: first exponent must be >= 2");
    for (int s : exponents)
        if (s < 1) throw std::domain_error("MzSignature: exponents must be positive");
}

std::string MzSignature::str() const {
    std::ostringstream o;
    o << (starred ? "zeta*(" : "zeta(");
    for (std::size_t i = 0; i < exponents.size(); ++i) o << (i ? "," : "") << exponents[i];
    o << ")";
    return o.str();
}

MzSignature MzSignature::parse(const std::string& csv, bool starred) {
    MzSignature sig;
    sig.starred = starred;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(item, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("MzSignature: bad exponent '" + item + "'");
        }
        if (pos != item.size()) throw std::invalid_argument("MzSignature: bad exponent '" + item + "'");
        sig.exponents.push_back(v);
    }
    sig.validate();
    return sig;
}

MzResult mz_truncated(const MzSignature& sig, long N) {
    sig.validate();
    if (N < 1) throw std::invalid_argument("mz_truncated: N must be >= 1");
    const int depth = static_cast<int>(sig.exponents.size());
    const auto n_sz = static_cast<std::size_t>(N);

    // cum[n] = sum_{j <= n} S(j) for the current (inner) level; cum[0] = 0.
    std::vector<long double> cum(n_sz + 1, 0.0L), next(n_sz + 1, 0.0L);
    auto accumulate = [&](auto term) {
        long double sum = 0, comp = 0;
        next[0] = 0;
        for (std::size_t n = 1; n <= n_sz; ++n) {
            const long double y = term(n) - comp;
            const long double t = sum + y;
            comp = (t - sum) - y;
            sum = t;
            next[n] = sum;
        }
        std::swap(cum, next);
    };
    {
        const int s = sig.exponents[depth - 1];
        accumulate([&](std::size_t n) { return std::pow(static_cast<long double>(n), -s); });
    }
    for (int i = depth - 2; i >= 0; --i) {
        const int s = sig.exponents[i];
        accumulate([&](std::size_t n) {
            return std::pow(static_cast<long double>(n), -s) * (sig.starred ? cum[n] : cum[n - 1]);
        });
    }

    MzResult r;
    r.value = static_cast<double>(cum[n_sz]);

    const double s = sig.exponents[0];
    const int j = depth - 1;
    const double L = 1.0 + std::log(static_cast<double>(N));
    const double x = (s - 1.0) * L;
    // Gamma(j+1, x) = j! e^{-x} sum_{i<=j} x^i/i!
    double jfact = 1.0;
    for (int i = 2; i <= j; ++i) jfact *= i;
    const double upper_gamma = jfact * std::exp(-x) * exp_partial(j + 1, x);
    double bound = std::exp(s - 1.0) * upper_gamma / std::pow(s - 1.0, j + 1);
    // n^{-s}(1+log n)^j decreases only past e^{j/s-1}; add its maximum otherwise.
    const double x_star = std::exp(j / s - 1.0);
    if (static_cast<double>(N) < x_star) bound += std::pow(x_star, -s) * std::pow(j / s, j);
    if (!sig.starred) bound /= jfact;
    r.tail_bound = bound;
    return r;
}

TelescopingResult telescoping_check(int k, const QuadratureSpec& spec) {
    if (k < 2) throw std::invalid_argument("telescoping_check: k must be >= 2");
    MomentKernel shifted;
    shifted.k = k;
    shifted.m = 1;
    shifted.z = 0.0;
    shifted.shifts.assign(static_cast<std::size_t>(k), 0.5);
    TelescopingResult out;
    out.shifted = symbol_moment(shifted, spec);
    out.negated = negative_moment(k, 1, 0.0, spec);
    out.negated.value = -out.negated.value;
    return out;
}

QuadratureResult mzsv31_double_integral(DoubleIntegralForm form, const QuadratureSpec& spec) {
    spec.validate();
    const double W = sech2_half_width(2.0 * 8.0, 1e-3 * spec.tolerance);
    const std::vector<Axis> axes{Axis::sech2(W, spec.panels), Axis::sech2(W, spec.panels)};
    const bool extra = form == DoubleIntegralForm::ExtraNumerator;
    return integrate(axes, spec, [&](const double* x) {
        const cplx a1(-0.5, x[0]), a2(-0.5, x[1]);
        const cplx v = 1.0 / (a2 * (a1 + a2));
        return extra ? a1 * v : v;
    });
}

}  // namespace polybern::numeric
