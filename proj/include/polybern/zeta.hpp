#pragma once

#include <string>
#include <utility>
#include <vector>

#include "polybern/quadrature.hpp"

namespace polybern::numeric {

/// Expectation of (z + sum_{l=1}^{k} (i w_l + s_l) p_l)^{-m}, with w_l
/// sech^2-distributed, p_l = u_l u_{l+1} ... u_{k-1} (p_k = 1) and u_j
/// uniform on [0,1]. With every shift s_l = -1/2 the sum is the C-symbol of
/// order k.
struct MomentKernel {
    int k = 1;
    int m = 1;
    double z = 0.0;
    /// One shift per symbol; empty means all -1/2.
    std::vector<double> shifts;
    /// Integrate u_1 (and u_2 when k >= 3) in closed form. When false every
    /// u-axis is a quadrature axis.
    bool analytic_u = true;
};

/// Distance from 0 to the range of Re of the denominator; the kernel is
/// rejected below kDenominatorGuard.
double denominator_distance(const MomentKernel& kernel);
inline constexpr double kDenominatorGuard = 0.1;

QuadratureResult symbol_moment(const MomentKernel& kernel, const QuadratureSpec& spec = {});

/// E[(z + C^(k))^{-m}]. At z = 0 this is (-1)^m zeta_k(m).
QuadratureResult negative_moment(int k, int m, double z, const QuadratureSpec& spec = {});

/// zeta_k(m) = (1/(m-1)!) int_0^inf t^{m-1} Li_k(1-e^{-t}) / (e^t - 1) dt.
/// k = 1 uses m zeta(m+1). tail_bound carries the truncation bound at T.
QuadratureResult ak_zeta_mellin(int k, int m, double tol = 1e-10, const QuadratureSpec& spec = {});

/// sum_{n in N^k} (w + a.n)^{-m}, by its Mellin integral.
QuadratureResult barnes_zeta_mellin(int m, double w, const std::vector<double>& a, double tol = 1e-10,
                                    const QuadratureSpec& spec = {});

/// zeta_k(m, w + sum(a)/2 | a) from the sech^2 representation
/// (Gamma(m-k)/Gamma(m)) prod(1/a_n) E[(w - i sum a_n x_n)^{-(m-k)}].
QuadratureResult barnes_zeta_sech(int m, double w, const std::vector<double>& a, const QuadratureSpec& spec = {});

/// (s_1, ..., s_d) with s_1 >= 2 and s_i >= 1.
struct MzSignature {
    std::vector<int> exponents;
    bool starred = false;

    void validate() const;
    std::string str() const;
    static MzSignature parse(const std::string& csv, bool starred);
};

struct MzResult {
    double value = 0.0;
    /// The exact series lies in [value, value + tail_bound].
    double tail_bound = 0.0;
};

/// Nested sum with outer index n_1 <= N. The tail bound uses
/// inner sum <= H_n^{d-1} (or H_n^{d-1}/(d-1)! for strict inequalities),
/// H_n <= 1 + log n, and an integral comparison for n^{-s_1}(1+log n)^{d-1}.
MzResult mz_truncated(const MzSignature& sig, long N);

struct TelescopingResult {
    /// E[1/(1 + B_k + sum_{l<k} p_l (1 + B_l))].
    QuadratureResult shifted;
    /// -E[1/C^(k)].
    QuadratureResult negated;
};

TelescopingResult telescoping_check(int k, const QuadratureSpec& spec = {});

/// zeta*(3,1) as a two-dimensional sech^2 integral after the u-integration:
/// E[1/(a_2 (a_1 + a_2))] with a_l = i w_l - 1/2. The ExtraNumerator form
/// multiplies the integrand by a_1.
enum class DoubleIntegralForm { Reduced, ExtraNumerator };
QuadratureResult mzsv31_double_integral(DoubleIntegralForm form, const QuadratureSpec& spec = {});

}  // namespace polybern::numeric
