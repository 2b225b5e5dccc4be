#include "puiseux/field.hpp"

#include "puiseux/errors.hpp"
#include "puiseux/number_theory.hpp"

namespace puiseux {

Field Field::prime(const BigInt& p) {
    if (!is_prime(p)) throw DomainError("field modulus " + p.get_str() + " is not prime");
    return Field(p);
}

Field Field::parse(std::string_view text) {
    if (text == "Q") return rationals();
    if (text.starts_with("Fp:")) {
        const std::string digits(text.substr(3));
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
            throw DomainError("malformed field '" + std::string(text) + "'");
        return prime(BigInt(digits));
    }
    throw DomainError("unknown field '" + std::string(text) + "' (expected Q or Fp:<p>)");
}

Coefficient Field::normalize(const Rational& c) const {
    if (is_rationals()) {
        Rational r = c;
        r.canonicalize();
        return r;
    }
    return Rational(rational_mod(c, modulus_));
}

Coefficient Field::inv(const Coefficient& a) const {
    if (sgn(a) == 0) throw DomainError("inverse of zero");
    if (is_rationals()) return Rational(1) / a;
    return Rational(modular_inverse(a.get_num(), modulus_));
}

std::string Field::to_string() const { return is_rationals() ? "Q" : "Fp:" + modulus_.get_str(); }

} // namespace puiseux
