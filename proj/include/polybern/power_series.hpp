#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include "polybern/rational.hpp"

namespace polybern {

/// Truncated formal power series sum_{i<=order} c_i t^i over a commutative
/// coefficient ring C (Rational, ZPolynomial, umbral::Expression).
///
/// The order is the index of the last trusted coefficient. Binary operations
/// never extend it: the result carries the minimum order of its operands.
template <typename C>
class PowerSeries {
public:
    using coefficient_type = C;

    explicit PowerSeries(std::size_t order = 0) : c_(order + 1) {}
    PowerSeries(std::vector<C> coeffs, std::size_t order) : c_(std::move(coeffs)) {
        c_.resize(order + 1);
    }

    std::size_t order() const { return c_.size() - 1; }
    const C& operator[](std::size_t i) const { return c_.at(i); }
    C& operator[](std::size_t i) { return c_.at(i); }
    const std::vector<C>& coeffs() const { return c_; }

    /// Index of the first nonzero coefficient; order()+1 if none is nonzero
    /// within the trusted range.
    std::size_t valuation() const {
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!c_[i].is_zero()) return i;
        return c_.size();
    }

    PowerSeries truncated(std::size_t order) const {
        if (order > this->order()) throw std::invalid_argument("PowerSeries: cannot extend order");
        return PowerSeries(std::vector<C>(c_.begin(), c_.begin() + static_cast<long>(order) + 1), order);
    }

    /// Divides by t^v; requires the first v coefficients to vanish.
    PowerSeries shifted_down(std::size_t v) const {
        if (v > order()) throw std::domain_error("PowerSeries: shift exceeds order");
        for (std::size_t i = 0; i < v; ++i)
            if (!c_[i].is_zero()) throw std::domain_error("PowerSeries: shift below valuation");
        return PowerSeries(std::vector<C>(c_.begin() + static_cast<long>(v), c_.end()), order() - v);
    }

    PowerSeries& operator+=(const PowerSeries& o) {
        c_.resize(std::min(c_.size(), o.c_.size()));
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    PowerSeries& operator-=(const PowerSeries& o) {
        c_.resize(std::min(c_.size(), o.c_.size()));
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
    friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }

    template <typename S>
    PowerSeries scaled(const S& s) const {
        PowerSeries r(*this);
        for (auto& c : r.c_) c = c * s;
        return r;
    }

    friend bool operator==(const PowerSeries& a, const PowerSeries& b) { return a.c_ == b.c_; }

private:
    std::vector<C> c_;
};

/// Cauchy product, truncated to the smaller order. Mixed coefficient rings
/// are allowed when A * B is defined.
template <typename A, typename B>
auto operator*(const PowerSeries<A>& a, const PowerSeries<B>& b) {
    using R = std::decay_t<decltype(std::declval<A>() * std::declval<B>())>;
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<R> out(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; i + j <= n; ++j) {
            if (b[j].is_zero()) continue;
            out[i + j] += a[i] * b[j];
        }
    }
    return PowerSeries<R>(std::move(out), n);
}

/// Multiplicative inverse of a series whose constant term is a unit.
template <typename C>
PowerSeries<C> reciprocal(const PowerSeries<C>& s) {
    if (s[0].is_zero()) throw std::domain_error("reciprocal: constant term is zero");
    const C inv0 = s[0].inverse();
    std::vector<C> r(s.order() + 1);
    r[0] = inv0;
    for (std::size_t n = 1; n <= s.order(); ++n) {
        C acc{};
        for (std::size_t i = 1; i <= n; ++i) acc += s[i] * r[n - i];
        r[n] = -(acc * inv0);
    }
    return PowerSeries<C>(std::move(r), s.order());
}

/// num / den for Rational-coefficient denominators. A denominator with
/// valuation v > 0 is allowed when num has valuation >= v; the result order
/// drops by v.
template <typename N>
PowerSeries<N> divide(const PowerSeries<N>& num, const PowerSeries<Rational>& den) {
    const std::size_t v = den.valuation();
    if (v > den.order()) throw std::domain_error("divide: denominator vanishes to its order");
    if (num.valuation() < v && num.valuation() <= num.order())
        throw std::domain_error("divide: numerator valuation below denominator valuation");
    const auto n = num.shifted_down(v);
    const auto d = den.shifted_down(v);
    return n * reciprocal(d);
}

/// outer(inner(t)), truncated to min(outer.order, inner.order). The inner
/// series must have zero constant term.
template <typename C>
PowerSeries<C> compose(const PowerSeries<C>& outer, const PowerSeries<C>& inner) {
    if (!inner[0].is_zero()) throw std::invalid_argument("compose: inner series has nonzero constant term");
    const std::size_t n = std::min(outer.order(), inner.order());
    const auto in = inner.truncated(n);
    // Horner on the outer coefficients.
    PowerSeries<C> acc(n);
    for (std::size_t i = n + 1; i-- > 0;) {
        acc = acc * in;
        acc[0] += outer[i];
    }
    return acc;
}

namespace series {

/// t (the identity series).
PowerSeries<Rational> identity(std::size_t order);
/// exp(a t).
PowerSeries<Rational> exp(std::size_t order, const Rational& a = Rational(1));
/// exp(a t) - 1.
PowerSeries<Rational> expm1(std::size_t order, const Rational& a = Rational(1));
/// log(1 + t).
PowerSeries<Rational> log1p(std::size_t order);
/// Li_k(t) = sum_{n>=1} t^n / n^k.
PowerSeries<Rational> polylog(int k, std::size_t order);

}  // namespace series

}  // namespace polybern
