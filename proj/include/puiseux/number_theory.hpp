#ifndef PUISEUX_NUMBER_THEORY_HPP
#define PUISEUX_NUMBER_THEORY_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "puiseux/rational.hpp"

namespace puiseux {

/// p-adic valuation value: an integer, or +infinity (only for the input 0).
class Valuation {
public:
    static Valuation infinity() { return Valuation(true, 0); }
    static Valuation finite(long v) { return Valuation(false, v); }

    bool is_infinite() const noexcept { return infinite_; }
    /// Throws DomainError when infinite.
    long value() const;

    std::string to_string() const;

    friend bool operator==(const Valuation&, const Valuation&) = default;
    /// +infinity compares above every finite value.
    friend bool operator<(const Valuation& a, const Valuation& b) {
        if (a.infinite_) return false;
        if (b.infinite_) return true;
        return a.value_ < b.value_;
    }
    friend bool operator<=(const Valuation& a, const Valuation& b) { return !(b < a); }
    friend Valuation operator+(const Valuation& a, const Valuation& b) {
        if (a.infinite_ || b.infinite_) return infinity();
        return finite(a.value_ + b.value_);
    }

private:
    Valuation(bool inf, long v) : infinite_(inf), value_(v) {}
    bool infinite_;
    long value_;
};

bool is_prime(const BigInt& n);

/// Exponent of the prime p in a nonzero integer.
long integer_valuation(const BigInt& p, const BigInt& n);

/// v_p(q) = v_p(n(q)) - v_p(d(q)); v_p(0) = +infinity.
/// Throws DomainError when p is not prime.
Valuation padic_valuation(const BigInt& p, const ReducedRational& q);

/// Signed variant used on intermediate (possibly negative) rationals.
Valuation padic_valuation(const BigInt& p, const Rational& q);

/// lcm of the denominators; 1 for the empty set.
BigInt denominator_lcm(std::span<const ReducedRational> values);

/// b in [0, m) with a*b = 1 (mod m). Throws DomainError if gcd(a, m) != 1 or m <= 0.
BigInt modular_inverse(const BigInt& a, const BigInt& m);

/// All primes <= bound in increasing order (empty when bound < 2).
std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

/// Smallest prime strictly greater than n.
BigInt next_prime(const BigInt& n);

struct PrimePower {
    BigInt prime;
    long exponent;
};

/// Prime factorization of |n| for n != 0, primes increasing.
/// Trial division followed by Pollard rho on the cofactor.
std::vector<PrimePower> factor_integer(const BigInt& n);

/// Nonnegative residue of a rational whose denominator is invertible mod p.
/// Throws DomainError otherwise.
BigInt rational_mod(const Rational& q, const BigInt& p);

} // namespace puiseux

#endif
