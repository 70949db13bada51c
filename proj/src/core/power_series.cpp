#include "polybern/power_series.hpp"

#include "polybern/combinatorics.hpp"

namespace polybern::series {

PowerSeries<Rational> identity(std::size_t order) {
    PowerSeries<Rational> s(order);
    if (order >= 1) s[1] = Rational(1);
    return s;
}

PowerSeries<Rational> exp(std::size_t order, const Rational& a) {
    PowerSeries<Rational> s(order);
    Rational term(1);
    for (std::size_t n = 0; n <= order; ++n) {
        s[n] = term;
        term = term * a / Rational(static_cast<long>(n + 1));
    }
    return s;
}

PowerSeries<Rational> expm1(std::size_t order, const Rational& a) {
    auto s = exp(order, a);
    s[0] = Rational(0);
    return s;
}

PowerSeries<Rational> log1p(std::size_t order) {
    PowerSeries<Rational> s(order);
    for (std::size_t n = 1; n <= order; ++n)
        s[n] = Rational(n % 2 == 1 ? 1 : -1, static_cast<long>(n));
    return s;
}

PowerSeries<Rational> polylog(int k, std::size_t order) {
    PowerSeries<Rational> s(order);
    for (std::size_t n = 1; n <= order; ++n)
        s[n] = Rational(static_cast<long>(n)).pow(k).inverse();
    return s;
}

}  // namespace polybern::series
