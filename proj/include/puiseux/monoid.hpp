#ifndef PUISEUX_MONOID_HPP
#define PUISEUX_MONOID_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "puiseux/numerical_semigroup.hpp"
#include "puiseux/rational.hpp"

namespace puiseux {

// Families of Puiseux monoids (additive submonoids of Q>=0) with a finite
// description. Each one comes with its own membership algorithm.

/// <g1, ..., gk> for positive rationals gi. An empty list is the trivial monoid.
struct FinitelyGenerated {
    std::vector<ReducedRational> generators;
};

/// One generator a/p of a prime reciprocal monoid.
struct ReciprocalPair {
    BigInt numerator;
    BigInt prime;
    friend bool operator==(const ReciprocalPair&, const ReciprocalPair&) = default;
};

/// <a1/p1, ..., ak/pk> with pairwise distinct primes pi not dividing ai.
/// With `tail`, also contains 1/p for every prime p not in the list.
struct PrimeReciprocal {
    std::vector<ReciprocalPair> pairs;
    bool tail = false;
};

/// All of Q>=0.
struct QNonneg {};

/// Union of <1/p^n> over n: every x whose denominator is a power of p.
struct PrimePowerReciprocal {
    BigInt p;
};

/// <1/(p^i q^j)>: every x whose denominator has only the prime factors p, q.
struct BiPrimeDivisible {
    BigInt p, q;
};

/// <1/p^n, 1/q^n | n >= 1>; antimatter but not root-closed.
struct PrimePowerPair {
    BigInt p, q;
};

/// Immutable, validated description of a Puiseux monoid.
class MonoidSpec {
public:
    using Family =
        std::variant<FinitelyGenerated, PrimeReciprocal, QNonneg, PrimePowerReciprocal, BiPrimeDivisible, PrimePowerPair>;

    // The factories throw ValidationError on invalid parameters.
    static MonoidSpec finitely_generated(std::vector<ReducedRational> generators);
    static MonoidSpec prime_reciprocal(std::vector<ReciprocalPair> pairs, bool tail);
    static MonoidSpec qnonneg();
    static MonoidSpec prime_power_reciprocal(const BigInt& p);
    static MonoidSpec biprime_divisible(const BigInt& p, const BigInt& q);
    static MonoidSpec prime_power_pair(const BigInt& p, const BigInt& q);

    const Family& family() const noexcept { return family_; }

    template <class F>
    bool is() const noexcept {
        return std::holds_alternative<F>(family_);
    }
    template <class F>
    const F& as() const {
        return std::get<F>(family_);
    }

    bool is_trivial() const;

    /// Text in the monoid grammar, e.g. "fg: 2/3, 3/4" or "pr: 1/2, 1/3; tail".
    std::string to_string() const;

    /// Integer semigroup used by membership: the scaled generators for
    /// FinitelyGenerated, <a1, ..., ak> for PrimeReciprocal without tail.
    const NumericalSemigroup* integer_semigroup() const noexcept { return semigroup_.get(); }
    /// lcm of generator denominators (FinitelyGenerated), 1 otherwise.
    const BigInt& scale() const noexcept { return scale_; }

private:
    explicit MonoidSpec(Family f);

    Family family_;
    BigInt scale_ = 1;
    std::shared_ptr<const NumericalSemigroup> semigroup_;
};

/// Unique normal form n + sum(alpha_i * g_i) with 0 <= alpha_i < modulus_i.
struct Digit {
    ReducedRational generator;
    BigInt coefficient;
    BigInt modulus;
    friend bool operator==(const Digit&, const Digit&) = default;
};

struct Decomposition {
    BigInt integer_part;
    /// Ordered by prime, then by increasing power of the prime.
    std::vector<Digit> digits;

    ReducedRational value() const;
    friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

struct AtomsResult {
    enum class Kind {
        Finite,       ///< `atoms` is the full atom set
        WithTail,     ///< `atoms` plus 1/p for every unlisted prime p
        Antimatter,   ///< no atoms
    };
    Kind kind;
    std::vector<ReducedRational> atoms;
};

/// Multiset of atoms: atom -> multiplicity.
using Factorization = std::map<ReducedRational, BigInt>;

struct FactorizationSet {
    ReducedRational element;
    std::vector<Factorization> factorizations;
    std::set<BigInt> lengths;
};

struct DifferenceGroup {
    enum class Kind {
        Cyclic,                  ///< generator * Z
        AllRationals,            ///< Q
        DensePrime,              ///< { n / p^r }
        DenseBiPrime,            ///< { n / (p^r q^s) }
        SquarefreeDenominators,  ///< { n / d : d squarefree }
    };
    Kind kind;
    ReducedRational generator; // Cyclic only
    BigInt p = 0, q = 0;

    std::string to_string() const;
};

struct ChainReport {
    bool valid = true;
    /// 1-based index of the first failing step q_i -> q_{i+1}.
    std::optional<std::size_t> violation_step;
    std::string reason;
};

/// Throws DomainError for a negative x.
bool contains(const MonoidSpec& m, const Rational& x);
bool contains(const MonoidSpec& m, const ReducedRational& x);

/// Defined for PrimeReciprocal and PrimePowerPair. Throws NotMemberError or
/// UnsupportedFamilyError.
Decomposition decompose(const MonoidSpec& m, const ReducedRational& x);

AtomsResult atoms(const MonoidSpec& m);

/// Minimal generating set of a finitely generated monoid, ascending.
std::vector<ReducedRational> minimal_generators(const FinitelyGenerated& fg);

bool is_atom(const MonoidSpec& m, const ReducedRational& q);

/// Throws DomainError if y or z is not in the monoid.
bool divides(const MonoidSpec& m, const ReducedRational& y, const ReducedRational& z);

/// Element y with 0 < y < q, y in M and q - y in M; nullopt when q is 0 or an atom.
/// Throws DomainError if q is not in M.
std::optional<ReducedRational> split_witness(const MonoidSpec& m, const ReducedRational& q);

/// All factorizations of x. Supported for FinitelyGenerated and PrimeReciprocal
/// without tail (see `truncate`). Throws NotMemberError, NoAtomsError,
/// UnsupportedFamilyError, or CapExceededError past `max_factorizations`.
FactorizationSet factorizations(const MonoidSpec& m, const ReducedRational& x, std::size_t max_factorizations = 200000);

/// PrimeReciprocal with tail -> no tail, listing (1, p) for unlisted primes p <= bound.
MonoidSpec truncate(const MonoidSpec& m, std::uint64_t prime_bound);

bool is_root_closed(const MonoidSpec& m);

/// d with root closure <d>. FinitelyGenerated only.
ReducedRational root_closure_fg(const MonoidSpec& m);

bool is_atomic(const MonoidSpec& m);
bool is_antimatter(const MonoidSpec& m);
bool has_zero_limit_point(const MonoidSpec& m);

DifferenceGroup difference_group_generator(const MonoidSpec& m);

/// Throws DomainError if a chain element is outside M.
ChainReport verify_divisibility_chain(const MonoidSpec& m, std::span<const ReducedRational> chain);

/// Primes <= bound that divide the denominator of some element of M.
std::vector<std::uint64_t> denominator_prime_set(const MonoidSpec& m, std::uint64_t bound);

/// True iff M is cyclic, i.e. isomorphic to (N0, +). Then F[M] is a PID and
/// half-factorial; otherwise neither.
bool is_isomorphic_to_naturals(const MonoidSpec& m);

/// Cyclic generator when M is a nontrivial cyclic monoid.
std::optional<ReducedRational> cyclic_generator(const MonoidSpec& m);

/// x/n in M for every x in M.
bool is_n_divisible(const MonoidSpec& m, const BigInt& n);

} // namespace puiseux

#endif
