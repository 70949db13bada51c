#pragma once

#include <algorithm>
#include <array>
#include <complex>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace polybern::numeric {

/// Composite Gauss-Legendre settings. Level l (1-based) uses
/// panels * 2^(l-1) panels per axis; convergence is declared once two
/// successive levels differ by less than the tolerance.
struct QuadratureSpec {
    int panels = 4;
    int nodes = 16;
    int levels = 3;
    double tolerance = 1e-8;

    /// Throws std::invalid_argument on nonsensical values.
    void validate() const;
};

struct QuadratureResult {
    double value = 0.0;
    /// |Im| of the finest-level sum, before it is discarded.
    double imag_residue = 0.0;
    /// |value_l - value_{l-1}| at the last level computed.
    double convergence_delta = 0.0;
    int levels_used = 0;
    /// One entry per level after the first.
    std::vector<double> deltas;
    std::optional<double> tail_bound;
};

class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, QuadratureResult last)
        : std::runtime_error(what), last_(std::move(last)) {}
    const QuadratureResult& last() const { return last_; }
    double last_delta() const { return last_.convergence_delta; }

private:
    QuadratureResult last_;
};

/// Neumaier compensated sum.
class CompensatedSum {
public:
    void add(double x);
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

struct GaussLegendreRule {
    std::vector<double> nodes;    // ascending, in (-1, 1)
    std::vector<double> weights;
};

/// n-point rule on [-1, 1]; cached and safe to call concurrently.
const GaussLegendreRule& gauss_legendre(int n);

/// One tensor axis.
///  Sech2: w in [-half_width, half_width] weighted by (pi/2) sech^2(pi w),
///         the density of the Bernoulli symbol's imaginary part.
///  Unit:  u in [0, 1] with unit weight.
///  Interval: x in [lo, hi] with unit weight.
struct Axis {
    enum class Kind { Sech2, Unit, Interval };
    Kind kind = Kind::Unit;
    double lo = 0.0;
    double hi = 1.0;
    /// Panel count at level 1.
    int panels = 1;

    static Axis sech2(double half_width, int panels) { return {Kind::Sech2, -half_width, half_width, panels}; }
    static Axis unit(int panels) { return {Kind::Unit, 0.0, 1.0, panels}; }
    static Axis interval(double lo, double hi, int panels) { return {Kind::Interval, lo, hi, panels}; }
};

struct AxisNodes {
    std::vector<double> x;
    std::vector<double> w;
};

/// Nodes and weights of an axis with `panels` panels of `nodes` points each.
AxisNodes axis_nodes(const Axis& axis, int panels, int nodes);

/// Half-width W with e^{-2 pi W} * scale <= eps: the sech^2 mass outside
/// [-W, W] is e^{-2 pi W}.
double sech2_half_width(double scale, double eps);

inline constexpr std::size_t kMaxDims = 12;

/// Tensor-product sum over the given axes in fixed axis-major order.
template <typename F>
std::complex<double> tensor_sum(const std::vector<AxisNodes>& axes, F&& f) {
    const std::size_t d = axes.size();
    if (d == 0 || d > kMaxDims) throw std::invalid_argument("tensor_sum: bad dimension");
    for (const auto& a : axes)
        if (a.x.empty()) return {0.0, 0.0};
    std::array<std::size_t, kMaxDims> idx{};
    std::array<double, kMaxDims> x{};
    std::array<double, kMaxDims + 1> wprod{};
    wprod[0] = 1.0;
    for (std::size_t j = 0; j < d; ++j) {
        x[j] = axes[j].x[0];
        wprod[j + 1] = wprod[j] * axes[j].w[0];
    }
    CompensatedSum re, im;
    const auto& last = axes[d - 1];
    for (;;) {
        const double outer = wprod[d - 1];
        for (std::size_t i = 0; i < last.x.size(); ++i) {
            x[d - 1] = last.x[i];
            const std::complex<double> v = f(x.data()) * (outer * last.w[i]);
            re.add(v.real());
            im.add(v.imag());
        }
        // Advance the odometer over the outer axes.
        std::size_t j = d - 1;
        while (j > 0) {
            --j;
            if (++idx[j] < axes[j].x.size()) break;
            idx[j] = 0;
            if (j == 0) return {re.value(), im.value()};
        }
        if (d == 1) return {re.value(), im.value()};
        for (std::size_t t = j; t + 1 < d; ++t) {
            x[t] = axes[t].x[idx[t]];
            wprod[t + 1] = wprod[t] * axes[t].w[idx[t]];
        }
    }
}

/// Runs the refinement ladder. Throws ConvergenceError if the last two
/// levels still differ by at least spec.tolerance.
template <typename F>
QuadratureResult integrate(const std::vector<Axis>& axes, const QuadratureSpec& spec, F&& f) {
    spec.validate();
    QuadratureResult r;
    std::complex<double> prev;
    const int min_levels = std::min(3, spec.levels);
    for (int level = 1; level <= spec.levels; ++level) {
        std::vector<AxisNodes> nodes;
        nodes.reserve(axes.size());
        for (const auto& a : axes) nodes.push_back(axis_nodes(a, a.panels << (level - 1), spec.nodes));
        const auto cur = tensor_sum(nodes, f);
        r.value = cur.real();
        r.imag_residue = std::abs(cur.imag());
        r.levels_used = level;
        if (level > 1) {
            r.convergence_delta = std::abs(cur.real() - prev.real());
            r.deltas.push_back(r.convergence_delta);
            if (level >= min_levels && r.convergence_delta < spec.tolerance) return r;
        }
        prev = cur;
    }
    if (spec.levels == 1) return r;
    throw ConvergenceError("quadrature did not converge: last delta " + std::to_string(r.convergence_delta) +
                               " >= tolerance " + std::to_string(spec.tolerance),
                           r);
}

}  // namespace polybern::numeric
