#ifndef PUISEUX_FACTOR_HPP
#define PUISEUX_FACTOR_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "puiseux/puiseux_poly.hpp"
#include "puiseux/upoly.hpp"

namespace puiseux {

struct ModFactor {
    ModPolynomial factor; ///< monic irreducible
    unsigned long multiplicity;
    friend bool operator==(const ModFactor&, const ModFactor&) = default;
};

struct ModFactorization {
    BigInt unit; ///< leading coefficient of the input
    std::vector<ModFactor> factors;
};

struct IntFactor {
    IntegerPolynomial factor; ///< primitive, irreducible over Q, positive leading coefficient
    unsigned long multiplicity;
    friend bool operator==(const IntFactor&, const IntFactor&) = default;
};

struct IntFactorization {
    BigInt content; ///< signed so that content * prod(factors^mult) is the input
    std::vector<IntFactor> factors;
};

inline constexpr std::size_t kDefaultDegreeCap = 64;

struct IntFactorOptions {
    std::size_t degree_cap = kDefaultDegreeCap;
    /// Evaluate recombination candidates with the OpenMP kernel; the serial
    /// scan gives identical output.
    bool parallel_recombination = true;
};

/// Complete factorization over F_p: squarefree decomposition, distinct-degree
/// splitting, then Cantor-Zassenhaus equal-degree splitting driven by a fixed
/// seed. Factors are sorted by degree, then coefficients. Throws DomainError on zero.
ModFactorization factor_mod_p(const ModPolynomial& f);

/// Factorization over Z: content, squarefree decomposition (Yun), then for
/// each squarefree part a factorization modulo a prime above twice the
/// Mignotte bound and exhaustive subset recombination. Throws DomainError on
/// zero, and CapExceededError when the degree exceeds `degree_cap` or the
/// recombination search would test more than about four million subsets.
IntFactorization factor_over_integers(const IntegerPolynomial& f, std::size_t degree_cap = kDefaultDegreeCap);
IntFactorization factor_over_integers(const IntegerPolynomial& f, const IntFactorOptions& options);

/// Irreducibility over the polynomial's own field (Q or F_p).
/// Throws DomainError on a constant.
bool is_irreducible_poly(const DensePoly& f, std::size_t degree_cap = kDefaultDegreeCap);

/// A prime at which Eisenstein's criterion holds for f, if any.
std::optional<BigInt> find_eisenstein_prime(const IntegerPolynomial& f);

/// Product of unit and factors; used to check reconstructions.
IntegerPolynomial expand(const IntFactorization& fz);
ModPolynomial expand(const ModFactorization& fz, const BigInt& p);

} // namespace puiseux

#endif
