#include "polybern/umbral.hpp"

#include <algorithm>
#include <unordered_map>

#include "polybern/combinatorics.hpp"

namespace polybern::umbral {

std::string SymbolId::str() const {
    switch (kind) {
        case SymbolKind::Bernoulli: return "B" + std::to_string(index);
        case SymbolKind::Uniform: return "U" + std::to_string(index);
        case SymbolKind::FormalZ: return "z";
    }
    return "?";
}

// ---------------------------------------------------------------- Monomial

Monomial Monomial::of(SymbolId s, std::uint32_t exponent) {
    Monomial m;
    if (s.kind == SymbolKind::FormalZ) s.index = 0;
    if (exponent > 0) m.f_.push_back({s, exponent});
    return m;
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
    for (auto& f : factors)
        if (f.symbol.kind == SymbolKind::FormalZ) f.symbol.index = 0;
    std::sort(factors.begin(), factors.end(),
              [](const Factor& a, const Factor& b) { return a.symbol < b.symbol; });
    Monomial m;
    for (const auto& f : factors) {
        if (f.exponent == 0) continue;
        if (!m.f_.empty() && m.f_.back().symbol == f.symbol)
            m.f_.back().exponent += f.exponent;
        else
            m.f_.push_back(f);
    }
    return m;
}

std::uint32_t Monomial::exponent(SymbolId s) const {
    if (s.kind == SymbolKind::FormalZ) s.index = 0;
    for (const auto& f : f_)
        if (f.symbol == s) return f.exponent;
    return 0;
}

std::uint32_t Monomial::max_exponent(SymbolKind kind) const {
    std::uint32_t e = 0;
    for (const auto& f : f_)
        if (f.symbol.kind == kind) e = std::max(e, f.exponent);
    return e;
}

Monomial Monomial::without(SymbolId s) const {
    if (s.kind == SymbolKind::FormalZ) s.index = 0;
    Monomial m;
    m.f_.reserve(f_.size());
    for (const auto& f : f_)
        if (f.symbol != s) m.f_.push_back(f);
    return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    m.f_.reserve(a.f_.size() + b.f_.size());
    auto i = a.f_.begin();
    auto j = b.f_.begin();
    while (i != a.f_.end() && j != b.f_.end()) {
        if (i->symbol < j->symbol) {
            m.f_.push_back(*i++);
        } else if (j->symbol < i->symbol) {
            m.f_.push_back(*j++);
        } else {
            m.f_.push_back({i->symbol, i->exponent + j->exponent});
            ++i;
            ++j;
        }
    }
    m.f_.insert(m.f_.end(), i, a.f_.end());
    m.f_.insert(m.f_.end(), j, b.f_.end());
    return m;
}

bool Monomial::divides(const Monomial& other) const {
    for (const auto& f : f_)
        if (other.exponent(f.symbol) < f.exponent) return false;
    return true;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
    if (!b.divides(a)) throw std::domain_error("Monomial: " + b.str() + " does not divide " + a.str());
    std::vector<Factor> out;
    out.reserve(a.f_.size());
    for (const auto& f : a.f_) {
        const auto e = f.exponent - b.exponent(f.symbol);
        if (e > 0) out.push_back({f.symbol, e});
    }
    Monomial m;
    m.f_ = std::move(out);
    return m;
}

std::size_t Monomial::hash() const {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (const auto& f : f_) {
        const std::size_t v = (static_cast<std::size_t>(f.symbol.kind) << 56) ^
                              (static_cast<std::size_t>(f.symbol.index) << 24) ^ f.exponent;
        h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

std::string Monomial::str() const {
    if (f_.empty()) return "1";
    std::string out;
    for (const auto& f : f_) {
        if (!out.empty()) out += "*";
        out += f.symbol.str() + "^" + std::to_string(f.exponent);
    }
    return out;
}

// -------------------------------------------------------------- Expression

namespace {

using Accumulator = std::unordered_map<Monomial, Rational, MonomialHash>;

std::vector<Expression::Term> drain(Accumulator& acc) {
    std::vector<Expression::Term> terms;
    terms.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (!c.is_zero()) terms.emplace_back(m, std::move(c));
    std::sort(terms.begin(), terms.end(),
              [](const Expression::Term& a, const Expression::Term& b) { return a.first < b.first; });
    return terms;
}

}  // namespace

Expression::Expression(const Rational& c) {
    if (!c.is_zero()) terms_.emplace_back(Monomial(), c);
}

Expression::Expression(const Monomial& m, const Rational& c) {
    if (!c.is_zero()) terms_.emplace_back(m, c);
}

Expression Expression::from_terms(std::vector<Term> terms) {
    Accumulator acc;
    for (auto& [m, c] : terms) acc[m] += c;
    Expression e;
    e.terms_ = drain(acc);
    return e;
}

Expression Expression::from_polynomial(const ZPolynomial& p) {
    Expression e;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i)
        if (!p.coeffs()[i].is_zero())
            e.terms_.emplace_back(Monomial::of(SymbolId::Z(), static_cast<std::uint32_t>(i)), p.coeffs()[i]);
    return e;
}

Rational Expression::constant() const { return coefficient(Monomial()); }

Rational Expression::coefficient(const Monomial& m) const {
    const auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                                     [](const Term& t, const Monomial& key) { return t.first < key; });
    return (it != terms_.end() && it->first == m) ? it->second : Rational(0);
}

Expression Expression::inverse() const {
    if (terms_.size() != 1 || !terms_[0].first.is_one())
        throw std::domain_error("Expression: only nonzero constants are invertible");
    return Expression(terms_[0].second.inverse());
}

Expression& Expression::operator+=(const Expression& o) {
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto i = terms_.begin();
    auto j = o.terms_.begin();
    while (i != terms_.end() && j != o.terms_.end()) {
        if (i->first < j->first) {
            out.push_back(std::move(*i++));
        } else if (j->first < i->first) {
            out.push_back(*j++);
        } else {
            Rational c = i->second + j->second;
            if (!c.is_zero()) out.emplace_back(std::move(i->first), std::move(c));
            ++i;
            ++j;
        }
    }
    for (; i != terms_.end(); ++i) out.push_back(std::move(*i));
    for (; j != o.terms_.end(); ++j) out.push_back(*j);
    terms_ = std::move(out);
    return *this;
}

Expression& Expression::operator-=(const Expression& o) { return *this += -o; }

Expression& Expression::operator*=(const Rational& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.second *= s;
    return *this;
}

Expression Expression::multiply(const Expression& a, const Expression& b, const ExpansionLimits& limits) {
    if (a.is_zero() || b.is_zero()) return {};
    Accumulator acc;
    acc.reserve(std::min(a.size() * b.size(), limits.max_terms) + 1);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            acc[ma * mb] += ca * cb;
        }
        if (acc.size() > limits.max_terms)
            throw ExpansionLimitError("umbral expansion exceeded " + std::to_string(limits.max_terms) +
                                      " monomials");
    }
    Expression e;
    e.terms_ = drain(acc);
    return e;
}

std::string Expression::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        const bool neg = c.sign() < 0;
        const Rational mag = neg ? -c : c;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        if (m.is_one()) {
            out += mag.str();
        } else {
            if (!mag.is_one()) out += mag.str() + "*";
            out += m.str();
        }
    }
    return out;
}

// ------------------------------------------------------------- evaluation

namespace {

std::vector<Rational> bernoulli_for(const Expression& e) {
    std::uint32_t maxe = 0;
    for (const auto& t : e.terms()) maxe = std::max(maxe, t.first.max_exponent(SymbolKind::Bernoulli));
    return bernoulli_numbers(static_cast<long>(maxe));
}

}  // namespace

ZPolynomial expect(const Expression& e) {
    const auto b = bernoulli_for(e);
    std::vector<Rational> out;
    for (const auto& [m, c] : e.terms()) {
        Rational v = c;
        std::uint32_t zdeg = 0;
        for (const auto& f : m.factors()) {
            switch (f.symbol.kind) {
                case SymbolKind::Bernoulli: v *= b[f.exponent]; break;
                case SymbolKind::Uniform: v /= Rational(static_cast<long>(f.exponent) + 1); break;
                case SymbolKind::FormalZ: zdeg = f.exponent; break;
            }
            if (v.is_zero()) break;
        }
        if (v.is_zero()) continue;
        if (out.size() <= zdeg) out.resize(zdeg + 1);
        out[zdeg] += v;
    }
    return ZPolynomial(std::move(out));
}

namespace {

template <typename Eval>
Expression expect_kind(const Expression& e, SymbolKind kind, Eval moment) {
    Accumulator acc;
    for (const auto& [m, c] : e.terms()) {
        Rational v = c;
        std::vector<Factor> rest;
        for (const auto& f : m.factors()) {
            if (f.symbol.kind == kind)
                v *= moment(f.exponent);
            else
                rest.push_back(f);
        }
        if (v.is_zero()) continue;
        acc[Monomial::from_factors(std::move(rest))] += v;
    }
    return Expression::from_terms(drain(acc));
}

}  // namespace

Expression expect_bernoulli(const Expression& e) {
    const auto b = bernoulli_for(e);
    return expect_kind(e, SymbolKind::Bernoulli, [&](std::uint32_t n) { return b[n]; });
}

Expression expect_uniform(const Expression& e) {
    return expect_kind(e, SymbolKind::Uniform,
                       [](std::uint32_t n) { return Rational(1, static_cast<long>(n) + 1); });
}

// ----------------------------------------------------------- constructors

Expression c_symbol(int k) {
    if (k < 1) throw std::invalid_argument("c_symbol: k must be >= 1");
    std::vector<Expression::Term> terms;
    for (int l = 1; l <= k; ++l) {
        std::vector<Factor> f{{SymbolId::B(static_cast<std::uint32_t>(l)), 1}};
        for (int j = l; j <= k - 1; ++j) f.push_back({SymbolId::U(static_cast<std::uint32_t>(j)), 1});
        terms.emplace_back(Monomial::from_factors(std::move(f)), Rational(1));
    }
    return Expression::from_terms(std::move(terms));
}

Expression poly_symbol(int k) {
    if (k < 1) throw std::invalid_argument("poly_symbol: k must be >= 1");
    return Expression(1) + c_symbol(k);
}

Expression expr_power(const Expression& e, unsigned n, const ExpansionLimits& limits) {
    // Successive multiplication by the (typically short) base keeps each step
    // linear in the size of the running power.
    Expression acc(1);
    for (unsigned i = 0; i < n; ++i) acc = Expression::multiply(acc, e, limits);
    return acc;
}

Expression shift_substitute(const Expression& e, SymbolId symbol, const Expression& replacement,
                            const ExpansionLimits& limits) {
    if (symbol.kind == SymbolKind::FormalZ) symbol.index = 0;
    std::vector<Expression> powers{Expression(1)};
    Expression out;
    for (const auto& [m, c] : e.terms()) {
        const auto p = m.exponent(symbol);
        while (powers.size() <= p) powers.push_back(Expression::multiply(powers.back(), replacement, limits));
        out += Expression::multiply(Expression(m.without(symbol), c), powers[p], limits);
    }
    return out;
}

Expression reindex(const Expression& e, std::uint32_t b_offset, std::uint32_t u_offset) {
    std::vector<Expression::Term> terms;
    terms.reserve(e.size());
    for (const auto& [m, c] : e.terms()) {
        std::vector<Factor> f = m.factors();
        for (auto& x : f) {
            if (x.symbol.kind == SymbolKind::Bernoulli) x.symbol.index += b_offset;
            if (x.symbol.kind == SymbolKind::Uniform) x.symbol.index += u_offset;
        }
        terms.emplace_back(Monomial::from_factors(std::move(f)), c);
    }
    return Expression::from_terms(std::move(terms));
}

Expression compose_polynomial(const ZPolynomial& f, const Expression& replacement,
                              const ExpansionLimits& limits) {
    Expression acc;
    const auto& c = f.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) acc = Expression::multiply(acc, replacement, limits) + Expression(c[i]);
    return acc;
}

}  // namespace polybern::umbral
