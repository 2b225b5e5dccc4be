#include "puiseux/rational.hpp"

#include <cctype>
#include <ostream>

#include "puiseux/errors.hpp"

namespace puiseux {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace

ReducedRational::ReducedRational(const Rational& q) : value_(q) {
    value_.canonicalize();
    if (sgn(value_) < 0) throw DomainError("negative rational " + value_.get_str() + " is not in Q>=0");
}

ReducedRational ReducedRational::reduce(const BigInt& num, const BigInt& den) {
    if (den == 0) throw DomainError("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return ReducedRational(q);
}

ReducedRational ReducedRational::parse(std::string_view text) {
    const auto slash = text.find('/');
    const std::string_view n = text.substr(0, slash);
    const std::string_view d = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!all_digits(n) || !all_digits(d))
        throw DomainError("malformed rational literal '" + std::string(text) + "'");
    return reduce(BigInt(std::string(n)), BigInt(std::string(d)));
}

std::string ReducedRational::to_string() const { return rational_to_string(value_); }

std::optional<ReducedRational> checked_sub(const ReducedRational& a, const ReducedRational& b) {
    if (a < b) return std::nullopt;
    return ReducedRational(Rational(a.value_ - b.value_), ReducedRational::Unchecked{});
}

ReducedRational ReducedRational::divided_by(const BigInt& k) const {
    if (k <= 0) throw DomainError("division by a non-positive integer");
    Rational q = value_ / Rational(k);
    return ReducedRational(std::move(q), Unchecked{});
}

ReducedRational ReducedRational::times(const BigInt& k) const {
    if (k < 0) throw DomainError("multiplication by a negative integer");
    Rational q = value_ * Rational(k);
    return ReducedRational(std::move(q), Unchecked{});
}

std::ostream& operator<<(std::ostream& os, const ReducedRational& q) { return os << q.to_string(); }

std::string rational_to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_signed_rational(std::string_view text) {
    if (!text.empty() && text.front() == '-') {
        Rational r = -ReducedRational::parse(text.substr(1)).value();
        return r;
    }
    return ReducedRational::parse(text).value();
}

} // namespace puiseux
