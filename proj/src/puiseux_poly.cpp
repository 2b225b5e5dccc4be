#include "puiseux/puiseux_poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "puiseux/errors.hpp"
#include "puiseux/number_theory.hpp"

namespace puiseux {

namespace {

void require_same_field(const PuiseuxPoly& f, const PuiseuxPoly& g) {
    if (!(f.field() == g.field()))
        throw DomainError("field mismatch: " + f.field().to_string() + " vs " + g.field().to_string());
}

void require_integral(const PuiseuxPoly& f, const char* op) {
    if (!f.field().is_rationals()) throw DomainError(std::string(op) + " is defined over Z only");
    for (const auto& t : f.terms())
        if (t.coefficient.get_den() != 1)
            throw DomainError(std::string(op) + " needs integer coefficients; clear denominators first");
}

std::string exponent_text(const ReducedRational& e) {
    if (e.is_integer()) return e.num() == 1 ? "X" : "X^" + e.num().get_str();
    return "X^(" + e.to_string() + ")";
}

} // namespace

void DensePoly::trim() {
    while (!coeffs.empty() && sgn(coeffs.back()) == 0) coeffs.pop_back();
}

PuiseuxPoly PuiseuxPoly::canonicalize(std::vector<Term> terms, const Field& field) {
    std::map<ReducedRational, Coefficient, std::greater<>> merged;
    for (auto& t : terms) {
        auto [it, fresh] = merged.try_emplace(t.exponent, field.normalize(t.coefficient));
        if (!fresh) it->second = field.add(it->second, t.coefficient);
    }
    PuiseuxPoly out(field);
    for (auto& [e, c] : merged) {
        Coefficient n = field.normalize(c);
        if (sgn(n) != 0) out.terms_.push_back({e, std::move(n)});
    }
    return out;
}

PuiseuxPoly PuiseuxPoly::canonicalize(const std::vector<std::pair<Rational, Coefficient>>& terms, const Field& field) {
    std::vector<Term> checked;
    checked.reserve(terms.size());
    for (const auto& [e, c] : terms) {
        if (sgn(e) < 0) throw DomainError("negative exponent " + rational_to_string(e));
        checked.push_back({ReducedRational(e), c});
    }
    return canonicalize(std::move(checked), field);
}

PuiseuxPoly PuiseuxPoly::constant(const Coefficient& c, const Field& field) { return monomial(ReducedRational(), c, field); }

PuiseuxPoly PuiseuxPoly::monomial(const ReducedRational& exponent, const Coefficient& c, const Field& field) {
    return canonicalize(std::vector<Term>{{exponent, c}}, field);
}

const ReducedRational& PuiseuxPoly::degree() const {
    if (is_zero()) throw DomainError("degree of the zero polynomial");
    return terms_.front().exponent;
}

const Coefficient& PuiseuxPoly::leading_coefficient() const {
    if (is_zero()) throw DomainError("leading coefficient of the zero polynomial");
    return terms_.front().coefficient;
}

std::vector<ReducedRational> PuiseuxPoly::support() const {
    std::vector<ReducedRational> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.push_back(t.exponent);
    return out;
}

BigInt PuiseuxPoly::support_denominator_lcm() const {
    const auto s = support();
    return denominator_lcm(s);
}

PuiseuxPoly PuiseuxPoly::scaled(const Coefficient& c) const {
    std::vector<Term> t(terms_.begin(), terms_.end());
    for (auto& term : t) term.coefficient = field_.mul(term.coefficient, c);
    return canonicalize(std::move(t), field_);
}

PuiseuxPoly PuiseuxPoly::pow(unsigned long e) const {
    PuiseuxPoly result = constant(1, field_);
    PuiseuxPoly base = *this;
    while (e) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

PuiseuxPoly PuiseuxPoly::monic() const { return scaled(field_.inv(leading_coefficient())); }

std::string PuiseuxPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        const auto& [e, c] = terms_[i];
        const bool negative = sgn(c) < 0;
        if (i == 0)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        const Rational mag = abs(c);
        if (e.is_zero())
            os << rational_to_string(mag);
        else if (mag == 1)
            os << exponent_text(e);
        else
            os << rational_to_string(mag) << "*" << exponent_text(e);
    }
    return os.str();
}

PuiseuxPoly operator+(const PuiseuxPoly& f, const PuiseuxPoly& g) {
    require_same_field(f, g);
    std::vector<Term> t(f.terms_.begin(), f.terms_.end());
    t.insert(t.end(), g.terms_.begin(), g.terms_.end());
    return PuiseuxPoly::canonicalize(std::move(t), f.field_);
}

PuiseuxPoly operator-(const PuiseuxPoly& f, const PuiseuxPoly& g) { return f + g.scaled(-1); }

PuiseuxPoly operator*(const PuiseuxPoly& f, const PuiseuxPoly& g) {
    require_same_field(f, g);
    std::vector<Term> t;
    t.reserve(f.terms_.size() * g.terms_.size());
    for (const auto& a : f.terms_)
        for (const auto& b : g.terms_) t.push_back({a.exponent + b.exponent, a.coefficient * b.coefficient});
    return PuiseuxPoly::canonicalize(std::move(t), f.field_);
}

PuiseuxPoly add(const PuiseuxPoly& f, const PuiseuxPoly& g) { return f + g; }
PuiseuxPoly mul(const PuiseuxPoly& f, const PuiseuxPoly& g) { return f * g; }

BigInt content(const PuiseuxPoly& f) {
    if (f.is_zero()) throw DomainError("content of the zero polynomial");
    require_integral(f, "content");
    BigInt g = 0;
    for (const auto& t : f.terms()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coefficient.get_num().get_mpz_t());
    return g;
}

bool is_primitive(const PuiseuxPoly& f) { return content(f) == 1; }

std::pair<PuiseuxPoly, BigInt> clear_rational_coefficients(const PuiseuxPoly& f) {
    if (!f.field().is_rationals()) throw DomainError("clearing denominators is defined over Q only");
    BigInt l = 1;
    for (const auto& t : f.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coefficient.get_den().get_mpz_t());
    return {f.scaled(Rational(l)), l};
}

bool eisenstein_needs_constant_term(const PuiseuxPoly& f) {
    return !f.is_zero() && f.field().is_rationals() && !f.terms().back().exponent.is_zero();
}

bool eisenstein_applies(const PuiseuxPoly& f, const BigInt& p) {
    if (!is_prime(p)) throw DomainError(p.get_str() + " is not prime");
    if (f.is_zero()) return false;
    require_integral(f, "Eisenstein's criterion");
    const auto terms = f.terms();
    if (terms.size() < 2 || !terms.back().exponent.is_zero()) return false;
    auto divisible = [&](const Coefficient& c, const BigInt& d) {
        return mpz_divisible_p(c.get_num().get_mpz_t(), d.get_mpz_t()) != 0;
    };
    if (divisible(terms.front().coefficient, p)) return false;
    for (std::size_t i = 1; i < terms.size(); ++i)
        if (!divisible(terms[i].coefficient, p)) return false;
    return !divisible(terms.back().coefficient, BigInt(p * p));
}

DensePoly inflate(const PuiseuxPoly& f, const BigInt& m) {
    if (m <= 0) throw DomainError("inflation exponent must be positive");
    DensePoly out{f.field(), {}};
    if (f.is_zero()) return out;
    for (const auto& t : f.terms())
        if (!mpz_divisible_p(m.get_mpz_t(), t.exponent.den().get_mpz_t()))
            throw DomainError(m.get_str() + " is not a common multiple of the support denominators");
    const BigInt top = f.degree().num() * (m / f.degree().den());
    if (top > kMaxInflatedDegree) throw CapExceededError("inflated degree " + top.get_str() + " exceeds the cap");
    out.coeffs.assign(top.get_ui() + 1, Rational(0));
    for (const auto& t : f.terms()) {
        const BigInt k = t.exponent.num() * (m / t.exponent.den());
        out.coeffs[k.get_ui()] = t.coefficient;
    }
    return out;
}

PuiseuxPoly deflate(const DensePoly& g, const BigInt& m, const MonoidSpec& monoid) {
    if (m <= 0) throw DomainError("deflation exponent must be positive");
    std::vector<Term> terms;
    for (std::size_t k = 0; k < g.coeffs.size(); ++k) {
        if (sgn(g.coeffs[k]) == 0) continue;
        const ReducedRational e = ReducedRational::reduce(BigInt(static_cast<unsigned long>(k)), m);
        if (!contains(monoid, e)) throw ExponentNotInMonoidError(e.to_string());
        terms.push_back({e, g.coeffs[k]});
    }
    return PuiseuxPoly::canonicalize(std::move(terms), g.field);
}

void require_in_algebra(const PuiseuxPoly& f, const MonoidSpec& monoid) {
    for (const auto& t : f.terms())
        if (!contains(monoid, t.exponent)) throw ExponentNotInMonoidError(t.exponent.to_string());
}

} // namespace puiseux
