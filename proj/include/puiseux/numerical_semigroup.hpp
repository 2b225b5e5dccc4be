#ifndef PUISEUX_NUMERICAL_SEMIGROUP_HPP
#define PUISEUX_NUMERICAL_SEMIGROUP_HPP

#include <cstddef>
#include <vector>

#include "puiseux/rational.hpp"

namespace puiseux {

/// Submonoid of (N0, +) generated by finitely many positive integers.
///
/// Membership is decided through the Apery set of the smallest generator:
/// n is in S iff n >= Ap(n mod a) where Ap(r) is the least element of S
/// congruent to r. The table is built once with Dijkstra over residues, so
/// queries cost O(1) regardless of the size of n.
class NumericalSemigroup {
public:
    /// Largest smallest-generator for which the Apery table is built.
    static constexpr std::size_t kMaxModulus = std::size_t{1} << 22;

    /// Throws DomainError for a non-positive generator, CapExceededError when the
    /// smallest generator (after dividing by the gcd) exceeds kMaxModulus.
    explicit NumericalSemigroup(std::vector<BigInt> generators);

    bool contains(const BigInt& n) const;

    const std::vector<BigInt>& generators() const noexcept { return generators_; }
    const BigInt& gcd() const noexcept { return gcd_; }

private:
    std::vector<BigInt> generators_;
    BigInt gcd_ = 0;
    // Apery set w.r.t. apery_modulus_ of the semigroup divided by gcd_; -1 marks
    // an unreachable residue (cannot happen once gcd_ has been divided out).
    std::vector<BigInt> apery_;
    unsigned long apery_modulus_ = 0;
};

} // namespace puiseux

#endif
