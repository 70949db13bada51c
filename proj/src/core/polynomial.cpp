#include "polybern/polynomial.hpp"

#include "polybern/combinatorics.hpp"

namespace polybern {

ZPolynomial::ZPolynomial(const Rational& c) {
    if (!c.is_zero()) c_.push_back(c);
}

ZPolynomial::ZPolynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

ZPolynomial ZPolynomial::monomial(std::size_t degree, const Rational& c) {
    std::vector<Rational> v(degree + 1);
    v[degree] = c;
    return ZPolynomial(std::move(v));
}

void ZPolynomial::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational ZPolynomial::operator()(const Rational& x) const {
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double ZPolynomial::evaluate(double x) const {
    double acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->to_double();
    return acc;
}

ZPolynomial ZPolynomial::shift(const Rational& c) const {
    if (c.is_zero() || c_.size() <= 1) return *this;
    // Taylor shift: coefficient j of p(z+c) is sum_i a_i C(i,j) c^(i-j).
    const std::size_t n = c_.size();
    std::vector<Rational> cpow(n);
    cpow[0] = Rational(1);
    for (std::size_t i = 1; i < n; ++i) cpow[i] = cpow[i - 1] * c;
    std::vector<Rational> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j <= i; ++j)
            out[j] += c_[i] * Rational(binomial(static_cast<long>(i), static_cast<long>(j))) * cpow[i - j];
    }
    return ZPolynomial(std::move(out));
}

ZPolynomial ZPolynomial::scale_argument(const Rational& s) const {
    std::vector<Rational> out(c_);
    Rational p(1);
    for (auto& a : out) {
        a *= p;
        p *= s;
    }
    return ZPolynomial(std::move(out));
}

ZPolynomial ZPolynomial::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> out(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return ZPolynomial(std::move(out));
}

ZPolynomial& ZPolynomial::operator+=(const ZPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

ZPolynomial& ZPolynomial::operator-=(const ZPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

ZPolynomial operator*(const ZPolynomial& a, const ZPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return ZPolynomial(std::move(out));
}

ZPolynomial& ZPolynomial::operator*=(const ZPolynomial& o) { return *this = *this * o; }

ZPolynomial& ZPolynomial::operator*=(const Rational& s) {
    if (s.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& a : c_) a *= s;
    return *this;
}

ZPolynomial ZPolynomial::operator-() const {
    ZPolynomial r(*this);
    for (auto& a : r.c_) a = -a;
    return r;
}

std::string ZPolynomial::str() const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t k = c_.size(); k-- > 0;) {
        const Rational& a = c_[k];
        if (a.is_zero()) continue;
        const bool neg = a.sign() < 0;
        const Rational mag = neg ? -a : a;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        if (k == 0 || !mag.is_one()) out += mag.str();
        if (k >= 1) {
            if (!mag.is_one()) out += "*";
            out += "z";
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

}  // namespace polybern
