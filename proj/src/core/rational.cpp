#include "polybern/rational.hpp"

#include <stdexcept>

namespace polybern {

Rational::Rational(const BigInt& num, const BigInt& den) : v_(num, den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s, 10));
        return Rational(BigInt(s.substr(0, slash), 10), BigInt(s.substr(slash + 1), 10));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    }
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    Rational r;
    r.v_ = 1 / v_;
    return r;
}

Rational Rational::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Rational r;
    mpz_pow_ui(r.v_.get_num_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(r.v_.get_den_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

std::string Rational::str() const {
    if (is_integer()) return num_str();
    return num_str() + "/" + den_str();
}

std::size_t Rational::hash() const {
    // Low limbs of numerator and denominator are enough to spread buckets.
    const auto limb = [](mpz_srcptr z) -> std::size_t {
        return mpz_size(z) == 0 ? 0 : static_cast<std::size_t>(mpz_getlimbn(z, 0));
    };
    std::size_t h = limb(v_.get_num_mpz_t()) * 0x9e3779b97f4a7c15ULL;
    h ^= limb(v_.get_den_mpz_t()) + 0x7f4a7c15 + (h << 6) + (h >> 2);
    return sgn(v_) < 0 ? ~h : h;
}

}  // namespace polybern
