// One PASS/FAIL line per acceptance criterion.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <string>

#include "polybern/combinatorics.hpp"
#include "polybern/polybernoulli.hpp"
#include "polybern/special.hpp"
#include "polybern/verify.hpp"
#include "polybern/zeta.hpp"

using namespace polybern;
using namespace polybern::numeric;
using namespace polybern::verify;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
    void note(const std::string& s) { detail += (detail.empty() ? "" : "; ") + s; }
};

std::string fmt(const char* f, double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, x);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int failures = 0;

void report(int id, const std::string& title, const std::function<Outcome()>& body) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        o = body();
    } catch (const std::exception& e) {
        o.pass = false;
        o.detail = std::string("exception: ") + e.what();
    }
    o.note(fmt("%.1f s", seconds_since(t0)));
    if (!o.pass) ++failures;
    std::printf("criterion %2d %s: %s (%s)\n", id, o.pass ? "PASS" : "FAIL", title.c_str(), o.detail.c_str());
    std::fflush(stdout);
}

void require_check(Outcome& o, const IdentityCheck& c) {
    o.require(c.status == Status::Pass, c.name + " " + to_string(c.status) + (c.witness ? " " + c.witness->dump() : ""));
}

bool monotone(const QuadratureResult& r) {
    const auto& d = r.deltas;
    return d.size() < 2 || d[d.size() - 1] <= d[d.size() - 2];
}

// Shared k = 3 moment results.
std::map<int, QuadratureResult> moments3;
TelescopingResult telescoping3;

}  // namespace

int main() {
    report(1, "series = umbral = Stirling for n <= 20, k <= 5", [] {
        Outcome o;
        const auto t0 = std::chrono::steady_clock::now();
        for (int k = 1; k <= 5; ++k) {
            const auto s = poly_bernoulli_series(20, k, Variant::B);
            const auto u = poly_bernoulli_umbral_table(20, k, Variant::B);
            for (long n = 0; n <= 20; ++n) {
                const auto a = s.number(n);
                o.require(a == u.number(n) && a == poly_bernoulli_stirling(n, k),
                          "mismatch at n=" + std::to_string(n) + ", k=" + std::to_string(k));
            }
        }
        const double t = seconds_since(t0);
        o.require(t < 60.0, "runtime over 60 s");
        return o;
    });

    report(2, "B_n^(1)(z) = B_n(z+1), C_n^(1)(z) = B_n(z), n <= 30", [] {
        Outcome o;
        const auto b = poly_bernoulli_series(30, 1, Variant::B);
        const auto c = poly_bernoulli_series(30, 1, Variant::C);
        const auto bern = bernoulli_polynomials(30);
        for (long n = 0; n <= 30; ++n) {
            o.require(b.polynomial(n) == bern[n].shift(Rational(1)), "B form at n=" + std::to_string(n));
            o.require(c.polynomial(n) == bern[n], "C form at n=" + std::to_string(n));
        }
        return o;
    });

    report(3, "cube transform n <= 12, k <= 4, z in {0, 1, -1, formal}; simplex n <= 10, k <= 4", [] {
        Outcome o;
        for (int k = 1; k <= 4; ++k) {
            const auto t = poly_bernoulli_series(12, k, Variant::B);
            for (long n = 0; n <= 12; ++n) {
                const auto p = barnes_transform_cube(n, k);
                o.require(p == t.polynomial(n), "cube formal n=" + std::to_string(n) + " k=" + std::to_string(k));
                for (long z : {0L, 1L, -1L})
                    o.require(barnes_transform_cube(n, k, Rational(z)) == t.polynomial(n)(Rational(z)),
                              "cube z=" + std::to_string(z));
                if (n <= 10 && k >= 2)
                    o.require(simplex_transform(n, k) == t.polynomial(n), "simplex n=" + std::to_string(n));
            }
        }
        o.note("simplex form needs k >= 2, checked for k = 2..4");
        return o;
    });

    report(4, "recurrence, connection (+ Fourier form), difference, higher difference (+ Faulhaber), symbolic "
              "extension on n <= 15, k <= 4, m <= 5",
           [] {
               Outcome o;
               const auto t0 = std::chrono::steady_clock::now();
               ReferenceTables t(16);
               for (Variant v : {Variant::B, Variant::C}) {
                   require_check(o, check_recurrence(t, 15, 4, v));
                   require_check(o, check_connection(t, 15, 4, v));
                   require_check(o, check_difference(t, 15, 4, v));
                   require_check(o, check_higher_difference(t, 15, 4, 5, v));
               }
               require_check(o, check_connection_fourier_form(t, 15, 4));
               require_check(o, check_faulhaber(t, 15, 5));
               require_check(o, check_symbolic_extension(15, 4));
               o.require(seconds_since(t0) < 120.0, "runtime over 2 min");
               return o;
           });

    report(5, "variant recurrence has a counterexample with n <= 6, k <= 3", [] {
        Outcome o;
        ReferenceTables t(7);
        for (SignReading r : {SignReading::ProductOfSigns, SignReading::InnerSignOnly}) {
            const auto c = check_recurrence_variant_falsified(t, 6, 3, r, 48);
            require_check(o, c);
            if (c.witness)
                o.note(to_string(r) + " witness n=" + std::to_string((*c.witness)["n"].get<int>()) +
                       " k=" + std::to_string((*c.witness)["k"].get<int>()) + ": " + *c.lhs + " vs " + *c.rhs);
        }
        return o;
    });

    report(6, "E[(C^(2))^-m] = -1.20206, 1.3529, -1.45884 for m = 1, 2, 3", [] {
        Outcome o;
        const double printed[] = {-1.20206, 1.3529, -1.45884};
        const double tol[] = {5e-6, 5e-5, 5e-6};
        for (int m = 1; m <= 3; ++m) {
            const auto r = negative_moment(2, m, 0.0);
            o.note("m=" + std::to_string(m) + " " + fmt("%.12f", r.value));
            o.require(std::abs(r.value - printed[m - 1]) <= tol[m - 1], "value off at m=" + std::to_string(m));
            o.require(r.levels_used <= 3, "more than 3 levels");
            o.require(r.imag_residue < 1e-9, "imaginary residue");
            o.require(monotone(r), "delta increased");
        }
        return o;
    });

    report(7, "|Mellin - moment| < 1e-6 for k in {2, 3}, m in {1, 2, 3}", [] {
        Outcome o;
        telescoping3 = telescoping_check(3);
        for (int k = 2; k <= 3; ++k)
            for (int m = 1; m <= 3; ++m) {
                QuadratureResult mom;
                if (k == 3 && m == 1) {
                    mom = telescoping3.negated;
                    mom.value = -mom.value;
                } else {
                    mom = negative_moment(k, m, 0.0);
                }
                if (k == 3) moments3[m] = mom;
                const double sign = m % 2 ? -1.0 : 1.0;
                const auto mel = ak_zeta_mellin(k, m, 1e-10);
                const double d = std::abs(mel.value - sign * mom.value);
                o.note("k=" + std::to_string(k) + " m=" + std::to_string(m) + " " + fmt("%.2e", d));
                o.require(d < 1e-6, "routes disagree");
                o.require(mom.imag_residue < 1e-9, "imaginary residue");
                o.require(mom.levels_used <= 3 && monotone(mom), "refinement");
            }
        return o;
    });

    report(8, "Mellin zeta_2(2) within the zeta*(3,1) truncation bracket; double = triple integral", [] {
        Outcome o;
        const auto mel = ak_zeta_mellin(2, 2, 1e-10);
        const auto mz = mz_truncated(MzSignature{{3, 1}, true}, 3000);
        o.note("mellin " + fmt("%.12f", mel.value) + ", truncated " + fmt("%.12f", mz.value) + " + " +
               fmt("%.2e", mz.tail_bound));
        o.require(mel.value >= mz.value - 1e-6 && mel.value <= mz.value + mz.tail_bound + 1e-6, "outside bracket");
        const auto two = mzsv31_double_integral(DoubleIntegralForm::Reduced);
        const auto three = symbol_moment(MomentKernel{2, 2, 0.0, {}, false});
        const double d = std::abs(two.value - three.value);
        o.note("double vs triple " + fmt("%.2e", d));
        o.require(d < 1e-6, "double integral disagrees");
        return o;
    });

    report(9, "k = 1 moments match polygamma for m <= 3, z in {0.25, 0.75, 1, 2}; (B+1)^-m = m zeta(m+1), m <= 4",
           [] {
               Outcome o;
               const QuadratureSpec spec{4, 24, 3, 1e-10};
               double worst = 0;
               for (double z : {0.25, 0.75, 1.0, 2.0})
                   for (int m = 1; m <= 3; ++m) {
                       const auto r = negative_moment(1, m, z, spec);
                       const double fact = std::tgamma(m);
                       const double closed = z > 0.5 ? (m % 2 ? 1.0 : -1.0) * polygamma(m, z) / fact
                                                     : -polygamma(m, 1.0 - z) / fact;
                       worst = std::max(worst, std::abs(r.value - closed));
                   }
               for (int m = 1; m <= 4; ++m) {
                   const auto r = negative_moment(1, m, 1.0, spec);
                   worst = std::max(worst, std::abs(r.value - m * riemann_zeta(m + 1)));
               }
               o.note("max error " + fmt("%.2e", worst));
               o.require(worst < 1e-8, "bridge error above 1e-8");
               return o;
           });

    report(10, "telescoping = zeta(k+1) for k in {2, 3}; zeta(2,{1}^(k-1)) brackets zeta(k+1) at N = 1e5", [] {
        Outcome o;
        for (int k = 2; k <= 3; ++k) {
            const auto t = k == 3 ? telescoping3 : telescoping_check(k);
            const double target = riemann_zeta(k + 1);
            o.note("k=" + std::to_string(k) + " " + fmt("%.2e", std::abs(t.shifted.value - target)) + "/" +
                   fmt("%.2e", std::abs(t.negated.value - target)));
            o.require(std::abs(t.shifted.value - target) < 1e-6, "shifted form off");
            o.require(std::abs(t.negated.value - target) < 1e-6, "negated form off");
            MzSignature sig{{2}, false};
            for (int i = 1; i < k; ++i) sig.exponents.push_back(1);
            const auto mz = mz_truncated(sig, 100000);
            o.note("tail " + fmt("%.2e", mz.tail_bound));
            o.require(mz.value <= target && target <= mz.value + mz.tail_bound, "bracket misses");
            o.require(mz.tail_bound < 1e-3, "tail bound above 1e-3");
        }
        return o;
    });

    report(11, "Barnes sech2 route = Mellin route on (m=3, a=(1)) and (m=4, a=(1,1)), w = 1", [] {
        Outcome o;
        struct Case {
            int m;
            std::vector<double> a;
            double tol;
        };
        for (const Case& c : {Case{3, {1.0}, 1e-8}, Case{4, {1.0, 1.0}, 1e-6}}) {
            double shift = 0;
            for (double x : c.a) shift += 0.5 * x;
            const auto s = barnes_zeta_sech(c.m, 1.0, c.a);
            const auto m = barnes_zeta_mellin(c.m, 1.0 + shift, c.a);
            const double d = std::abs(s.value - m.value);
            o.note("m=" + std::to_string(c.m) + " " + fmt("%.2e", d));
            o.require(d < c.tol, "routes disagree");
            o.require(s.imag_residue < 1e-10, "imaginary residue");
        }
        return o;
    });

    report(12, "E[(U+B)^n] = [n = 0] and E[(1+B)^n] = (-1)^n E[B^n] for n <= 30", [] {
        Outcome o;
        for (const auto& c : check_umbral_axioms(30, 10, 6))
            if (c.name == "umbral_cancellation" || c.name == "umbral_periodicity") require_check(o, c);
        return o;
    });

    std::printf("%d of 12 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
