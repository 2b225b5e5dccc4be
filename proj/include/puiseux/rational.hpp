#ifndef PUISEUX_RATIONAL_HPP
#define PUISEUX_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

namespace puiseux {

using BigInt = mpz_class;
/// Signed exact rational; used for coefficients and intermediate arithmetic.
using Rational = mpq_class;

/// Nonnegative rational number in lowest terms.
///
/// The GMP rational underneath is always canonical, so n(q) and d(q) are
/// read directly from it. Zero is 0/1. Subtraction is only offered in the
/// checked form `checked_sub`, since the result may leave Q>=0.
class ReducedRational {
public:
    ReducedRational() = default;
    ReducedRational(unsigned long n) : value_(n) {} // NOLINT: integers convert implicitly

    /// Throws DomainError if `q` is negative.
    explicit ReducedRational(const Rational& q);

    /// num/den in lowest terms. Throws DomainError on a zero denominator or a
    /// negative value.
    static ReducedRational reduce(const BigInt& num, const BigInt& den);

    /// Parses "a/b" or "a" (ASCII, no whitespace). Throws DomainError.
    static ReducedRational parse(std::string_view text);

    const BigInt& num() const { return value_.get_num(); }
    const BigInt& den() const { return value_.get_den(); }
    const Rational& value() const noexcept { return value_; }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }

    /// "a/b", or "a" when the denominator is 1.
    std::string to_string() const;

    ReducedRational& operator+=(const ReducedRational& o) {
        value_ += o.value_;
        return *this;
    }
    ReducedRational& operator*=(const ReducedRational& o) {
        value_ *= o.value_;
        return *this;
    }
    friend ReducedRational operator+(ReducedRational a, const ReducedRational& b) { return a += b; }
    friend ReducedRational operator*(ReducedRational a, const ReducedRational& b) { return a *= b; }

    /// a - b, or nullopt when b > a.
    friend std::optional<ReducedRational> checked_sub(const ReducedRational& a, const ReducedRational& b);

    /// q / k for a positive integer k.
    ReducedRational divided_by(const BigInt& k) const;
    ReducedRational times(const BigInt& k) const;

    friend bool operator==(const ReducedRational& a, const ReducedRational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const ReducedRational& a, const ReducedRational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

private:
    struct Unchecked {};
    ReducedRational(Rational q, Unchecked) : value_(std::move(q)) {}

    Rational value_{0};
};

std::ostream& operator<<(std::ostream& os, const ReducedRational& q);

/// Same text format as ReducedRational, but signed.
std::string rational_to_string(const Rational& q);
Rational parse_signed_rational(std::string_view text);

} // namespace puiseux

#endif
