#ifndef PUISEUX_UPOLY_HPP
#define PUISEUX_UPOLY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "puiseux/puiseux_poly.hpp"
#include "puiseux/rational.hpp"

namespace puiseux {

/// Polynomial in Z[X], coefficients in ascending degree, leading coefficient
/// nonzero (the zero polynomial has no coefficients).
class IntegerPolynomial {
public:
    IntegerPolynomial() = default;
    explicit IntegerPolynomial(std::vector<BigInt> coeffs);

    /// Throws DomainError on a non-integer coefficient or a non-Q field.
    static IntegerPolynomial from_dense(const DensePoly& p);
    DensePoly to_dense() const;

    const std::vector<BigInt>& coeffs() const noexcept { return c_; }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const BigInt& lc() const { return c_.back(); }
    const BigInt& operator[](std::size_t i) const { return c_[i]; }

    /// Positive gcd of the coefficients (0 for zero).
    BigInt content() const;
    /// f / content with a positive leading coefficient.
    IntegerPolynomial primitive_part() const;
    IntegerPolynomial derivative() const;
    IntegerPolynomial scaled(const BigInt& k) const;
    /// Sum of squares of the coefficients.
    BigInt norm2_squared() const;

    std::string to_string() const;

    friend bool operator==(const IntegerPolynomial&, const IntegerPolynomial&) = default;
    friend IntegerPolynomial operator+(const IntegerPolynomial& a, const IntegerPolynomial& b);
    friend IntegerPolynomial operator-(const IntegerPolynomial& a, const IntegerPolynomial& b);
    friend IntegerPolynomial operator*(const IntegerPolynomial& a, const IntegerPolynomial& b);

    /// Sorting key: degree, then coefficients from the constant term up.
    friend bool operator<(const IntegerPolynomial& a, const IntegerPolynomial& b);

private:
    void trim();
    std::vector<BigInt> c_;
};

/// a / b when b divides a in Z[X].
std::optional<IntegerPolynomial> divide_exact(const IntegerPolynomial& a, const IntegerPolynomial& b);

/// Primitive gcd with positive leading coefficient (primitive remainder sequence).
IntegerPolynomial gcd(const IntegerPolynomial& a, const IntegerPolynomial& b);

/// Polynomial over F_p, residues in [0, p), ascending degree.
class ModPolynomial {
public:
    /// Throws DomainError if p is not prime.
    ModPolynomial(BigInt p, std::vector<BigInt> coeffs);
    static ModPolynomial from_integer(const BigInt& p, const IntegerPolynomial& f);
    /// Throws DomainError unless the field is F_p.
    static ModPolynomial from_dense(const DensePoly& f);
    DensePoly to_dense() const;
    static ModPolynomial monomial(const BigInt& p, const BigInt& c, std::size_t degree);

    const BigInt& modulus() const noexcept { return p_; }
    const std::vector<BigInt>& coeffs() const noexcept { return c_; }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    const BigInt& lc() const { return c_.back(); }

    ModPolynomial monic() const;
    ModPolynomial derivative() const;
    ModPolynomial scaled(const BigInt& k) const;

    /// Lift to Z[X] with coefficients in (-p/2, p/2].
    IntegerPolynomial symmetric_lift() const;

    std::string to_string() const;

    friend bool operator==(const ModPolynomial&, const ModPolynomial&) = default;
    friend ModPolynomial operator+(const ModPolynomial& a, const ModPolynomial& b);
    friend ModPolynomial operator-(const ModPolynomial& a, const ModPolynomial& b);
    friend ModPolynomial operator*(const ModPolynomial& a, const ModPolynomial& b);
    friend bool operator<(const ModPolynomial& a, const ModPolynomial& b);

private:
    ModPolynomial(BigInt p, std::vector<BigInt> coeffs, bool /*trusted*/);
    void normalize();

    BigInt p_;
    std::vector<BigInt> c_;

    friend std::pair<ModPolynomial, ModPolynomial> divmod(const ModPolynomial& a, const ModPolynomial& b);
};

/// Quotient and remainder; throws DomainError on division by zero.
std::pair<ModPolynomial, ModPolynomial> divmod(const ModPolynomial& a, const ModPolynomial& b);
ModPolynomial operator%(const ModPolynomial& a, const ModPolynomial& b);
/// Monic gcd (zero when both inputs are zero).
ModPolynomial gcd(ModPolynomial a, ModPolynomial b);
/// base^e mod m.
ModPolynomial powmod(const ModPolynomial& base, const BigInt& e, const ModPolynomial& m);

} // namespace puiseux

#endif
