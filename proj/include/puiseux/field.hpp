#ifndef PUISEUX_FIELD_HPP
#define PUISEUX_FIELD_HPP

#include <string>
#include <string_view>
#include <utility>

#include "puiseux/rational.hpp"

namespace puiseux {

/// Coefficient of a Puiseux polynomial. Over Q any signed rational; over F_p
/// an integer residue in [0, p) stored in the same type.
using Coefficient = Rational;

/// Coefficient field: Q or a prime field F_p.
class Field {
public:
    static Field rationals() { return Field(BigInt(0)); }
    /// Throws DomainError if p is not prime.
    static Field prime(const BigInt& p);
    /// "Q" or "Fp:<p>".
    static Field parse(std::string_view text);

    bool is_rationals() const { return modulus_ == 0; }
    bool is_prime_field() const { return modulus_ != 0; }
    /// p for F_p, 0 for Q.
    const BigInt& modulus() const noexcept { return modulus_; }

    /// Maps an arbitrary rational into the field (residue mod p for F_p).
    Coefficient normalize(const Rational& c) const;

    Coefficient add(const Coefficient& a, const Coefficient& b) const { return normalize(a + b); }
    Coefficient sub(const Coefficient& a, const Coefficient& b) const { return normalize(a - b); }
    Coefficient mul(const Coefficient& a, const Coefficient& b) const { return normalize(a * b); }
    Coefficient neg(const Coefficient& a) const { return normalize(-a); }
    /// Throws DomainError on zero.
    Coefficient inv(const Coefficient& a) const;

    std::string to_string() const;

    friend bool operator==(const Field& a, const Field& b) { return a.modulus_ == b.modulus_; }

private:
    explicit Field(BigInt m) : modulus_(std::move(m)) {}
    BigInt modulus_;
};

} // namespace puiseux

#endif
