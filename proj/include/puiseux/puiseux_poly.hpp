#ifndef PUISEUX_PUISEUX_POLY_HPP
#define PUISEUX_PUISEUX_POLY_HPP

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "puiseux/field.hpp"
#include "puiseux/monoid.hpp"
#include "puiseux/rational.hpp"

namespace puiseux {

struct Term {
    ReducedRational exponent;
    Coefficient coefficient;
    friend bool operator==(const Term&, const Term&) = default;
};

/// Ordinary polynomial over a field, coefficients in ascending degree.
/// Trailing zeros are trimmed; the zero polynomial has no coefficients.
struct DensePoly {
    Field field;
    std::vector<Coefficient> coeffs;

    long degree() const { return static_cast<long>(coeffs.size()) - 1; }
    void trim();
    friend bool operator==(const DensePoly&, const DensePoly&) = default;
};

/// Element of F[M]: a finite sum of c * X^q in canonical form, with strictly
/// decreasing exponents and nonzero coefficients. Zero has no terms.
class PuiseuxPoly {
public:
    explicit PuiseuxPoly(Field field) : field_(std::move(field)) {}

    /// Merges like exponents, drops zero coefficients, sorts decreasingly.
    static PuiseuxPoly canonicalize(std::vector<Term> terms, const Field& field);
    /// Signed-exponent input; throws DomainError on a negative exponent.
    static PuiseuxPoly canonicalize(const std::vector<std::pair<Rational, Coefficient>>& terms, const Field& field);
    static PuiseuxPoly constant(const Coefficient& c, const Field& field);
    static PuiseuxPoly monomial(const ReducedRational& exponent, const Coefficient& c, const Field& field);

    const Field& field() const noexcept { return field_; }
    std::span<const Term> terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }

    bool is_zero() const noexcept { return terms_.empty(); }
    /// Zero or a nonzero constant.
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent.is_zero()); }
    bool is_monomial() const { return terms_.size() == 1; }

    /// Leading exponent. Throws DomainError on zero.
    const ReducedRational& degree() const;
    const Coefficient& leading_coefficient() const;
    /// Exponents in decreasing order.
    std::vector<ReducedRational> support() const;
    /// lcm of d(Supp(f)); 1 for zero.
    BigInt support_denominator_lcm() const;

    PuiseuxPoly scaled(const Coefficient& c) const;
    PuiseuxPoly pow(unsigned long e) const;
    /// Multiplies by the inverse of the leading coefficient.
    PuiseuxPoly monic() const;

    /// "X^(3/2) + 2*X^(1/2) + 2"; re-parses to the same canonical form.
    std::string to_string() const;

    friend bool operator==(const PuiseuxPoly& a, const PuiseuxPoly& b) {
        return a.field_ == b.field_ && a.terms_ == b.terms_;
    }

    friend PuiseuxPoly operator+(const PuiseuxPoly& f, const PuiseuxPoly& g);
    friend PuiseuxPoly operator-(const PuiseuxPoly& f, const PuiseuxPoly& g);
    friend PuiseuxPoly operator*(const PuiseuxPoly& f, const PuiseuxPoly& g);

private:
    Field field_;
    std::vector<Term> terms_;
};

// Field mismatches throw DomainError.
PuiseuxPoly add(const PuiseuxPoly& f, const PuiseuxPoly& g);
PuiseuxPoly mul(const PuiseuxPoly& f, const PuiseuxPoly& g);

/// Largest positive integer dividing every coefficient. Requires integer
/// coefficients over Q; throws DomainError on zero or otherwise.
BigInt content(const PuiseuxPoly& f);
bool is_primitive(const PuiseuxPoly& f);

/// (g, multiplier) with g = multiplier * f and g integral; the multiplier is
/// the lcm of the coefficient denominators.
std::pair<PuiseuxPoly, BigInt> clear_rational_coefficients(const PuiseuxPoly& f);

/// Eisenstein at the prime p on the canonical form of f: the leading
/// coefficient is a unit mod p, every other coefficient is divisible by p,
/// and the constant coefficient is not divisible by p^2. False when f has no
/// constant term or is constant. Throws DomainError if p is not prime or the
/// coefficients are not integers over Q.
bool eisenstein_applies(const PuiseuxPoly& f, const BigInt& p);

/// True when f has integer coefficients over Q but no constant term, which is
/// the one case in which `eisenstein_applies` is inapplicable by shape.
bool eisenstein_needs_constant_term(const PuiseuxPoly& f);

/// Upper limit on the degree of an inflated polynomial.
inline constexpr long kMaxInflatedDegree = 1L << 20;

/// f(X^m). Throws DomainError if m is not a positive common multiple of
/// d(Supp(f)), CapExceededError past kMaxInflatedDegree.
DensePoly inflate(const PuiseuxPoly& f, const BigInt& m);

/// g(X^(1/m)); every resulting exponent is checked against M.
/// Throws ExponentNotInMonoidError.
PuiseuxPoly deflate(const DensePoly& g, const BigInt& m, const MonoidSpec& monoid);

/// Throws ExponentNotInMonoidError unless Supp(f) is contained in M.
void require_in_algebra(const PuiseuxPoly& f, const MonoidSpec& monoid);

} // namespace puiseux

#endif
