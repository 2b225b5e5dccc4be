#ifndef PUISEUX_ALGEBRA_FACTOR_HPP
#define PUISEUX_ALGEBRA_FACTOR_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "puiseux/factor.hpp"
#include "puiseux/monoid.hpp"
#include "puiseux/puiseux_poly.hpp"

namespace puiseux {

inline constexpr unsigned long kDefaultInflationBound = 8;
inline constexpr unsigned long kDefaultDepth = 8;

/// Outcome of a bounded irreducibility test in F[M].
struct IrreducibilityVerdict {
    enum class Status {
        IrreducibleCertified, ///< no tested inflation split (or a criterion proved it)
        Reducible,            ///< `witness` multiplies back to the input
        Unit,
        Unknown,
    };
    Status status;
    unsigned long bound = 0;
    /// Two non-units whose product is the input (Reducible only).
    std::optional<std::pair<PuiseuxPoly, PuiseuxPoly>> witness;
    /// Inflation exponent that exposed the split, or 0.
    BigInt witness_inflation = 0;
    /// Short reason, e.g. "eisenstein at 2" or "inflations up to k=8".
    std::string evidence;

    bool irreducible() const { return status == Status::IrreducibleCertified; }
};

struct FactorOutcome {
    enum class Status {
        UnitElement,
        UniqueFactorization,
        NoAtomicFactorizationFound,
        CapExceeded,
    };
    Status status;
    /// Always satisfies unit * prod(factors) == input. For UniqueFactorization the
    /// factors are the normalized atoms (with repetition); otherwise they are the
    /// last partial splitting reached.
    Coefficient unit;
    std::vector<PuiseuxPoly> factors;
    unsigned long bound = 0;
    unsigned long depth = 0;
    /// Over F_p with p-divisible M, every non-constant element is a p-th power,
    /// so the absence of a factorization into irreducibles is proved.
    bool frobenius_certificate = false;
    std::string detail;
};

struct AlgebraOptions {
    unsigned long inflation_bound = kDefaultInflationBound;
    unsigned long depth = kDefaultDepth;
    std::size_t degree_cap = kDefaultDegreeCap;
};

/// X^q is irreducible in F[M] iff q is an atom of M. Throws DomainError if q is not in M or is 0.
bool monomial_is_irreducible(const MonoidSpec& m, const ReducedRational& q);

/// Units of F[M] are the nonzero constants.
bool is_unit(const PuiseuxPoly& f);

/// Bounded irreducibility in F[M] through inflation to F[X].
///
/// For root-closed M: with m0 = lcm d(Supp f), every m = k*m0 (k <= bound)
/// with 1/m in M is tested; a split of f(X^m) deflates to a witness in F[M].
/// Cyclic M is handled exactly through F[M] = F[Y]. For other monoids only the
/// atom test on monomials, Eisenstein (over Q) and a bounded search for two
/// factors landing in F[M] are run, and the result may be Unknown.
///
/// Throws DomainError on zero, ExponentNotInMonoidError if Supp(f) is not in M.
IrreducibilityVerdict is_irreducible(const PuiseuxPoly& f, const MonoidSpec& m, unsigned long bound,
                                     std::size_t degree_cap = kDefaultDegreeCap);

/// Irreducibility in Z[M]: primitive and irreducible in Q[M]. An imprimitive
/// non-constant input is reported Reducible with witness (content, f/content).
IrreducibilityVerdict is_irreducible_integral(const PuiseuxPoly& f, const MonoidSpec& m, unsigned long bound,
                                              std::size_t degree_cap = kDefaultDegreeCap);

/// Factorization into irreducibles of F[M] for root-closed M.
/// Throws UnsupportedMonoidError for M not root-closed, DomainError on zero.
FactorOutcome factor_in_algebra(const PuiseuxPoly& f, const MonoidSpec& m, const AlgebraOptions& options = {});

/// Equal-length lists that agree up to order and unit multiples. Throws
/// DomainError if a list does not multiply to a unit multiple of f, or if
/// an entry is constant.
bool uufd_check(const PuiseuxPoly& f, const std::vector<PuiseuxPoly>& z1, const std::vector<PuiseuxPoly>& z2);

/// g with g^p = f over F_p, exponents divided by p. Throws UnsupportedFieldError
/// over Q and ExponentNotInMonoidError when some q/p is not in M.
PuiseuxPoly frobenius_pth_root(const PuiseuxPoly& f, const MonoidSpec& m);

/// Associate representative: over Q primitive integral with positive leading
/// coefficient, over F_p monic. Returns (normalized, unit) with f = unit * normalized.
std::pair<PuiseuxPoly, Coefficient> normalize_associate(const PuiseuxPoly& f);

} // namespace puiseux

#endif
