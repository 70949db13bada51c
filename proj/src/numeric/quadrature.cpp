#include "polybern/quadrature.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

namespace polybern::numeric {

void QuadratureSpec::validate() const {
    if (panels < 1) throw std::invalid_argument("quadrature: panels must be >= 1");
    if (nodes < 2 || nodes > 200) throw std::invalid_argument("quadrature: nodes must be in [2, 200]");
    if (levels < 1 || levels > 8) throw std::invalid_argument("quadrature: levels must be in [1, 8]");
    if (!(tolerance > 0.0)) throw std::invalid_argument("quadrature: tolerance must be positive");
}

void CompensatedSum::add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
        comp_ += (sum_ - t) + x;
    else
        comp_ += (x - t) + sum_;
    sum_ = t;
}

namespace {

GaussLegendreRule build_rule(int n) {
    GaussLegendreRule r;
    r.nodes.resize(n);
    r.weights.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        long double x = std::cos(std::numbers::pi_v<long double> * (i + 0.75L) / (n + 0.5L));
        long double dp = 0;
        for (int it = 0; it < 100; ++it) {
            long double p0 = 1, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const long double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            if (n == 1) p0 = 1;
            dp = n * (x * p1 - p0) / (x * x - 1);
            const long double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-19L) {
                // One more derivative evaluation at the converged node.
                p0 = 1;
                p1 = x;
                for (int k = 2; k <= n; ++k) {
                    const long double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n * (x * p1 - p0) / (x * x - 1);
                break;
            }
        }
        const long double w = 2 / ((1 - x * x) * dp * dp);
        r.nodes[i] = -static_cast<double>(x);
        r.nodes[n - 1 - i] = static_cast<double>(x);
        r.weights[i] = r.weights[n - 1 - i] = static_cast<double>(w);
    }
    if (n % 2 == 1) r.nodes[n / 2] = 0.0;
    return r;
}

}  // namespace

const GaussLegendreRule& gauss_legendre(int n) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<GaussLegendreRule>> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[n];
    if (!slot) slot = std::make_unique<GaussLegendreRule>(build_rule(n));
    return *slot;
}

AxisNodes axis_nodes(const Axis& axis, int panels, int nodes) {
    const auto& rule = gauss_legendre(nodes);
    AxisNodes out;
    out.x.reserve(static_cast<std::size_t>(panels) * nodes);
    out.w.reserve(out.x.capacity());
    const double h = (axis.hi - axis.lo) / panels;
    for (int p = 0; p < panels; ++p) {
        const double a = axis.lo + p * h;
        const double mid = a + 0.5 * h;
        for (int i = 0; i < nodes; ++i) {
            const double x = mid + 0.5 * h * rule.nodes[i];
            double w = 0.5 * h * rule.weights[i];
            if (axis.kind == Axis::Kind::Sech2) {
                const double c = std::cosh(std::numbers::pi * x);
                w *= 0.5 * std::numbers::pi / (c * c);
            }
            out.x.push_back(x);
            out.w.push_back(w);
        }
    }
    return out;
}

double sech2_half_width(double scale, double eps) {
    const double s = std::max(scale, 1.0);
    return std::max(1.0, std::log(s / eps) / (2.0 * std::numbers::pi));
}

}  // namespace polybern::numeric
