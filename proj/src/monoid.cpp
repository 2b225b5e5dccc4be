#include "puiseux/monoid.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "puiseux/errors.hpp"
#include "puiseux/number_theory.hpp"

namespace puiseux {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// Strips every factor p from n; returns the exponent removed.
long strip(BigInt& n, const BigInt& p) {
    return static_cast<long>(mpz_remove(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

bool is_prime_power_of(BigInt n, const BigInt& p) {
    strip(n, p);
    return n == 1;
}

bool smooth_over(BigInt n, const BigInt& p, const BigInt& q) {
    strip(n, p);
    strip(n, q);
    return n == 1;
}

void require_prime(const BigInt& p, const char* what) {
    if (!is_prime(p)) throw ValidationError(std::string(what) + " parameter " + p.get_str() + " is not prime");
}

void require_distinct_primes(const BigInt& p, const BigInt& q) {
    require_prime(p, "first");
    require_prime(q, "second");
    if (p == q) throw ValidationError("repeated prime " + p.get_str());
}

std::optional<Decomposition> try_decompose_reciprocal(const PrimeReciprocal& pr, const NumericalSemigroup* remainder,
                                                      const ReducedRational& x) {
    Decomposition out;
    Rational rest = x.value();
    BigInt d = x.den();
    const BigInt& n = x.num();

    auto add_digit = [&](const BigInt& a, const BigInt& p) {
        const BigInt other = x.den() / p;
        const BigInt alpha = BigInt(n * modular_inverse(BigInt(a * other % p), p) % p);
        if (alpha != 0) {
            const ReducedRational gen = ReducedRational::reduce(a, p);
            rest -= Rational(alpha) * gen.value();
            out.digits.push_back({gen, alpha, p});
        }
    };

    for (const auto& pair : pr.pairs) {
        const long v = strip(d, pair.prime);
        if (v == 0) continue;
        if (v > 1) return std::nullopt;
        add_digit(pair.numerator, pair.prime);
    }
    if (d != 1) {
        if (!pr.tail) return std::nullopt;
        for (const auto& pp : factor_integer(d)) {
            if (pp.exponent > 1) return std::nullopt;
            add_digit(BigInt(1), pp.prime);
        }
    }
    rest.canonicalize();
    if (rest.get_den() != 1 || sgn(rest) < 0) return std::nullopt;
    if (!pr.tail && !(remainder ? remainder->contains(rest.get_num()) : rest == 0)) return std::nullopt;
    std::sort(out.digits.begin(), out.digits.end(), [](const Digit& a, const Digit& b) { return a.modulus < b.modulus; });
    out.integer_part = rest.get_num();
    return out;
}

// Digit extraction from the highest power of each prime downward. Each digit
// is forced by a congruence modulo the prime; a negative integer remainder
// means x is not in the monoid.
std::optional<Decomposition> try_decompose_power_pair(const PrimePowerPair& pp, const ReducedRational& x) {
    Decomposition out;
    Rational rest = x.value();
    {
        BigInt d = x.den();
        strip(d, pp.p);
        strip(d, pp.q);
        if (d != 1) return std::nullopt;
    }
    for (const BigInt& p : {pp.p, pp.q}) {
        std::vector<Digit> digits;
        for (;;) {
            rest.canonicalize();
            BigInt cofactor = rest.get_den();
            const long k = strip(cofactor, p);
            if (k == 0) break;
            BigInt pk;
            mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(k));
            BigInt alpha = BigInt(rest.get_num() * modular_inverse(BigInt(cofactor % p), p)) % p;
            if (alpha < 0) alpha += p;
            rest -= Rational(alpha, pk);
            digits.push_back({ReducedRational::reduce(1, pk), alpha, p});
        }
        std::reverse(digits.begin(), digits.end());
        out.digits.insert(out.digits.end(), digits.begin(), digits.end());
    }
    rest.canonicalize();
    if (sgn(rest) < 0) return std::nullopt;
    out.integer_part = rest.get_num();
    return out;
}

bool in_finitely_generated(const MonoidSpec& m, const ReducedRational& x) {
    if (x.is_zero()) return true;
    if (m.is_trivial()) return false;
    if (!mpz_divisible_p(m.scale().get_mpz_t(), x.den().get_mpz_t())) return false;
    return m.integer_semigroup()->contains(BigInt(x.num() * (m.scale() / x.den())));
}

ReducedRational gcd_generator(std::span<const ReducedRational> gens) {
    const BigInt l = denominator_lcm(gens);
    BigInt g = 0;
    for (const auto& x : gens) {
        const BigInt scaled = x.num() * (l / x.den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), scaled.get_mpz_t());
    }
    return ReducedRational::reduce(g, l);
}

std::vector<ReducedRational> reciprocal_generators(const PrimeReciprocal& pr) {
    std::vector<ReducedRational> gens;
    for (const auto& pair : pr.pairs) gens.push_back(ReducedRational::reduce(pair.numerator, pair.prime));
    return gens;
}

bool listed_prime(const PrimeReciprocal& pr, const BigInt& p) {
    return std::any_of(pr.pairs.begin(), pr.pairs.end(), [&](const ReciprocalPair& r) { return r.prime == p; });
}

std::vector<ReducedRational> finite_atoms(const MonoidSpec& m) {
    const AtomsResult a = atoms(m);
    if (a.kind == AtomsResult::Kind::Antimatter) throw NoAtomsError("monoid " + m.to_string() + " has no atoms");
    if (a.kind == AtomsResult::Kind::WithTail)
        throw UnsupportedFamilyError("atom set is infinite; truncate the tail first");
    return a.atoms;
}

} // namespace

// ---------------------------------------------------------------------------
// MonoidSpec

MonoidSpec::MonoidSpec(Family f) : family_(std::move(f)) {}

MonoidSpec MonoidSpec::finitely_generated(std::vector<ReducedRational> generators) {
    for (const auto& g : generators)
        if (g.is_zero()) throw ValidationError("generators must be positive");
    MonoidSpec m(FinitelyGenerated{std::move(generators)});
    const auto& gens = m.as<FinitelyGenerated>().generators;
    if (!gens.empty()) {
        m.scale_ = denominator_lcm(gens);
        std::vector<BigInt> scaled;
        for (const auto& g : gens) scaled.emplace_back(g.num() * (m.scale_ / g.den()));
        m.semigroup_ = std::make_shared<const NumericalSemigroup>(std::move(scaled));
    }
    return m;
}

MonoidSpec MonoidSpec::prime_reciprocal(std::vector<ReciprocalPair> pairs, bool tail) {
    std::set<BigInt> seen;
    for (const auto& pair : pairs) {
        require_prime(pair.prime, "denominator");
        if (pair.numerator <= 0) throw ValidationError("numerators must be positive");
        if (mpz_divisible_p(pair.numerator.get_mpz_t(), pair.prime.get_mpz_t()))
            throw ValidationError(pair.prime.get_str() + " divides its numerator " + pair.numerator.get_str());
        if (!seen.insert(pair.prime).second) throw ValidationError("repeated prime " + pair.prime.get_str());
    }
    std::sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) { return a.prime < b.prime; });
    MonoidSpec m(PrimeReciprocal{std::move(pairs), tail});
    const auto& pr = m.as<PrimeReciprocal>();
    if (!tail && !pr.pairs.empty()) {
        std::vector<BigInt> nums;
        for (const auto& pair : pr.pairs) nums.push_back(pair.numerator);
        m.semigroup_ = std::make_shared<const NumericalSemigroup>(std::move(nums));
    }
    return m;
}

MonoidSpec MonoidSpec::qnonneg() { return MonoidSpec(QNonneg{}); }

MonoidSpec MonoidSpec::prime_power_reciprocal(const BigInt& p) {
    require_prime(p, "prime");
    return MonoidSpec(PrimePowerReciprocal{p});
}

MonoidSpec MonoidSpec::biprime_divisible(const BigInt& p, const BigInt& q) {
    require_distinct_primes(p, q);
    return MonoidSpec(BiPrimeDivisible{p, q});
}

MonoidSpec MonoidSpec::prime_power_pair(const BigInt& p, const BigInt& q) {
    require_distinct_primes(p, q);
    return MonoidSpec(PrimePowerPair{p, q});
}

bool MonoidSpec::is_trivial() const {
    if (const auto* fg = std::get_if<FinitelyGenerated>(&family_)) return fg->generators.empty();
    if (const auto* pr = std::get_if<PrimeReciprocal>(&family_)) return pr->pairs.empty() && !pr->tail;
    return false;
}

std::string MonoidSpec::to_string() const {
    std::ostringstream os;
    std::visit(Overloaded{
                   [&](const FinitelyGenerated& fg) {
                       os << "fg:";
                       for (std::size_t i = 0; i < fg.generators.size(); ++i)
                           os << (i ? ", " : " ") << fg.generators[i];
                   },
                   [&](const PrimeReciprocal& pr) {
                       os << "pr:";
                       for (std::size_t i = 0; i < pr.pairs.size(); ++i)
                           os << (i ? ", " : " ") << pr.pairs[i].numerator << "/" << pr.pairs[i].prime;
                       if (pr.tail) os << (pr.pairs.empty() ? " tail" : "; tail");
                   },
                   [&](const QNonneg&) { os << "qplus"; },
                   [&](const PrimePowerReciprocal& f) { os << "ppr: " << f.p; },
                   [&](const BiPrimeDivisible& f) { os << "biprime: " << f.p << ", " << f.q; },
                   [&](const PrimePowerPair& f) { os << "powers: " << f.p << ", " << f.q; },
               },
               family_);
    return os.str();
}

ReducedRational Decomposition::value() const {
    ReducedRational v = ReducedRational::reduce(integer_part, 1);
    for (const auto& d : digits) v += d.generator.times(d.coefficient);
    return v;
}

// ---------------------------------------------------------------------------
// Membership and normal forms

bool contains(const MonoidSpec& m, const Rational& x) {
    if (sgn(x) < 0) throw DomainError("negative element " + rational_to_string(x));
    return contains(m, ReducedRational(x));
}

bool contains(const MonoidSpec& m, const ReducedRational& x) {
    if (x.is_zero()) return true;
    return std::visit(Overloaded{
                          [&](const FinitelyGenerated&) { return in_finitely_generated(m, x); },
                          [&](const PrimeReciprocal& pr) {
                              return try_decompose_reciprocal(pr, m.integer_semigroup(), x).has_value();
                          },
                          [&](const QNonneg&) { return true; },
                          [&](const PrimePowerReciprocal& f) { return is_prime_power_of(x.den(), f.p); },
                          [&](const BiPrimeDivisible& f) { return smooth_over(x.den(), f.p, f.q); },
                          [&](const PrimePowerPair& f) { return try_decompose_power_pair(f, x).has_value(); },
                      },
                      m.family());
}

Decomposition decompose(const MonoidSpec& m, const ReducedRational& x) {
    std::optional<Decomposition> d;
    if (const auto* pr = std::get_if<PrimeReciprocal>(&m.family()))
        d = try_decompose_reciprocal(*pr, m.integer_semigroup(), x);
    else if (const auto* pp = std::get_if<PrimePowerPair>(&m.family()))
        d = try_decompose_power_pair(*pp, x);
    else
        throw UnsupportedFamilyError("decompose is defined for prime reciprocal and prime power pair monoids");
    if (!d) throw NotMemberError(x.to_string() + " is not in " + m.to_string());
    return *d;
}

// ---------------------------------------------------------------------------
// Atoms and divisibility

std::vector<ReducedRational> minimal_generators(const FinitelyGenerated& fg) {
    std::vector<ReducedRational> gens = fg.generators;
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<ReducedRational> kept;
    for (const auto& g : gens) {
        if (!kept.empty()) {
            std::vector<ReducedRational> with_g = kept;
            with_g.push_back(g);
            const BigInt l = denominator_lcm(with_g);
            std::vector<BigInt> scaled;
            for (const auto& k : kept) scaled.emplace_back(k.num() * (l / k.den()));
            if (NumericalSemigroup(std::move(scaled)).contains(BigInt(g.num() * (l / g.den())))) continue;
        }
        kept.push_back(g);
    }
    return kept;
}

AtomsResult atoms(const MonoidSpec& m) {
    return std::visit(Overloaded{
                          [](const FinitelyGenerated& fg) {
                              return AtomsResult{AtomsResult::Kind::Finite, minimal_generators(fg)};
                          },
                          [](const PrimeReciprocal& pr) {
                              auto gens = reciprocal_generators(pr);
                              std::sort(gens.begin(), gens.end());
                              return AtomsResult{pr.tail ? AtomsResult::Kind::WithTail : AtomsResult::Kind::Finite,
                                                 std::move(gens)};
                          },
                          [](const auto&) { return AtomsResult{AtomsResult::Kind::Antimatter, {}}; },
                      },
                      m.family());
}

bool is_atom(const MonoidSpec& m, const ReducedRational& q) {
    if (q.is_zero() || !contains(m, q)) return false;
    if (const auto* fg = std::get_if<FinitelyGenerated>(&m.family())) {
        const auto gens = minimal_generators(*fg);
        return std::binary_search(gens.begin(), gens.end(), q);
    }
    if (const auto* pr = std::get_if<PrimeReciprocal>(&m.family())) {
        for (const auto& pair : pr->pairs)
            if (q == ReducedRational::reduce(pair.numerator, pair.prime)) return true;
        return pr->tail && q.num() == 1 && is_prime(q.den()) && !listed_prime(*pr, q.den());
    }
    return false;
}

bool divides(const MonoidSpec& m, const ReducedRational& y, const ReducedRational& z) {
    if (!contains(m, y)) throw DomainError(y.to_string() + " is not in " + m.to_string());
    if (!contains(m, z)) throw DomainError(z.to_string() + " is not in " + m.to_string());
    const auto diff = checked_sub(z, y);
    return diff && contains(m, *diff);
}

std::optional<ReducedRational> split_witness(const MonoidSpec& m, const ReducedRational& q) {
    if (!contains(m, q)) throw DomainError(q.to_string() + " is not in " + m.to_string());
    if (q.is_zero()) return std::nullopt;

    auto try_candidates = [&](const std::vector<ReducedRational>& candidates) -> std::optional<ReducedRational> {
        for (const auto& c : candidates) {
            if (c.is_zero() || !(c < q)) continue;
            if (contains(m, c) && contains(m, *checked_sub(q, c))) return c;
        }
        return std::nullopt;
    };

    return std::visit(
        Overloaded{
            [&](const FinitelyGenerated& fg) { return try_candidates(minimal_generators(fg)); },
            [&](const PrimeReciprocal& pr) {
                std::vector<ReducedRational> candidates = reciprocal_generators(pr);
                if (pr.tail) {
                    if (q.den() != 1)
                        for (const auto& pp : factor_integer(q.den()))
                            if (!listed_prime(pr, pp.prime)) candidates.push_back(ReducedRational::reduce(1, pp.prime));
                    BigInt p = 2;
                    while (listed_prime(pr, p)) p = next_prime(p);
                    candidates.push_back(ReducedRational::reduce(1, p));
                }
                return try_candidates(candidates);
            },
            [&](const QNonneg&) { return std::optional<ReducedRational>(q.divided_by(2)); },
            [&](const PrimePowerReciprocal& f) {
                return std::optional<ReducedRational>(ReducedRational::reduce(1, BigInt(q.den() * f.p)));
            },
            [&](const BiPrimeDivisible& f) {
                return std::optional<ReducedRational>(ReducedRational::reduce(1, BigInt(q.den() * f.p)));
            },
            [&](const PrimePowerPair& f) {
                // Split the smallest digit generator g = 1/p^k as (p-1)/p^(k+1) + 1/p^(k+1).
                const Decomposition d = decompose(m, q);
                BigInt denom = f.p;
                if (!d.digits.empty()) denom = d.digits.front().generator.den() * d.digits.front().modulus;
                return std::optional<ReducedRational>(ReducedRational::reduce(1, denom));
            },
        },
        m.family());
}

FactorizationSet factorizations(const MonoidSpec& m, const ReducedRational& x, std::size_t max_factorizations) {
    if (!m.is<FinitelyGenerated>() && !m.is<PrimeReciprocal>()) {
        if (atoms(m).kind == AtomsResult::Kind::Antimatter)
            throw NoAtomsError("monoid " + m.to_string() + " has no atoms");
        throw UnsupportedFamilyError("factorizations need a finite atom set");
    }
    if (!contains(m, x)) throw NotMemberError(x.to_string() + " is not in " + m.to_string());
    std::vector<ReducedRational> atom_list = finite_atoms(m);
    std::sort(atom_list.rbegin(), atom_list.rend());

    FactorizationSet out{x, {}, {}};
    if (x.is_zero()) {
        out.factorizations.emplace_back();
        out.lengths.insert(BigInt(0));
        return out;
    }

    std::vector<ReducedRational> all = atom_list;
    all.push_back(x);
    const BigInt l = denominator_lcm(all);
    std::vector<BigInt> scaled;
    for (const auto& a : atom_list) scaled.emplace_back(a.num() * (l / a.den()));
    const BigInt target = x.num() * (l / x.den());

    // suffix[i] decides whether a remainder is reachable with atoms i..end.
    std::vector<NumericalSemigroup> suffix;
    for (std::size_t i = 0; i < scaled.size(); ++i)
        suffix.emplace_back(std::vector<BigInt>(scaled.begin() + static_cast<std::ptrdiff_t>(i), scaled.end()));

    std::vector<BigInt> counts(scaled.size());
    std::function<void(std::size_t, const BigInt&)> walk = [&](std::size_t i, const BigInt& rest) {
        if (rest == 0) {
            Factorization f;
            BigInt length = 0;
            for (std::size_t j = 0; j < i; ++j)
                if (counts[j] != 0) {
                    f.emplace(atom_list[j], counts[j]);
                    length += counts[j];
                }
            if (out.factorizations.size() >= max_factorizations)
                throw CapExceededError("more than " + std::to_string(max_factorizations) + " factorizations");
            out.factorizations.push_back(std::move(f));
            out.lengths.insert(length);
            return;
        }
        if (i == scaled.size() || !suffix[i].contains(rest)) return;
        BigInt c = rest / scaled[i];
        for (;; --c) {
            counts[i] = c;
            walk(i + 1, BigInt(rest - c * scaled[i]));
            if (c == 0) break;
        }
        counts[i] = 0;
    };
    walk(0, target);
    return out;
}

MonoidSpec truncate(const MonoidSpec& m, std::uint64_t prime_bound) {
    const auto* pr = std::get_if<PrimeReciprocal>(&m.family());
    if (!pr || !pr->tail) return m;
    std::vector<ReciprocalPair> pairs = pr->pairs;
    for (auto p : primes_up_to(prime_bound))
        if (!listed_prime(*pr, BigInt(p))) pairs.push_back({BigInt(1), BigInt(p)});
    return MonoidSpec::prime_reciprocal(std::move(pairs), false);
}

// ---------------------------------------------------------------------------
// Structural predicates

std::optional<ReducedRational> cyclic_generator(const MonoidSpec& m) {
    if (const auto* fg = std::get_if<FinitelyGenerated>(&m.family())) {
        auto gens = minimal_generators(*fg);
        if (gens.size() == 1) return gens.front();
    }
    if (const auto* pr = std::get_if<PrimeReciprocal>(&m.family()))
        if (!pr->tail && pr->pairs.size() == 1) return ReducedRational::reduce(pr->pairs[0].numerator, pr->pairs[0].prime);
    return std::nullopt;
}

bool is_root_closed(const MonoidSpec& m) {
    if (m.is_trivial()) return true;
    if (m.is<FinitelyGenerated>() || m.is<PrimeReciprocal>()) return cyclic_generator(m).has_value();
    return !m.is<PrimePowerPair>();
}

ReducedRational root_closure_fg(const MonoidSpec& m) {
    const auto* fg = std::get_if<FinitelyGenerated>(&m.family());
    if (!fg) throw UnsupportedFamilyError("root_closure_fg needs a finitely generated monoid");
    if (m.is_trivial()) throw TrivialMonoidError();
    return gcd_generator(fg->generators);
}

bool is_atomic(const MonoidSpec& m) { return m.is<FinitelyGenerated>() || m.is<PrimeReciprocal>(); }

bool is_antimatter(const MonoidSpec& m) { return m.is_trivial() || !is_atomic(m); }

bool has_zero_limit_point(const MonoidSpec& m) {
    if (m.is<FinitelyGenerated>()) return false;
    if (const auto* pr = std::get_if<PrimeReciprocal>(&m.family())) return pr->tail;
    return true;
}

std::string DifferenceGroup::to_string() const {
    switch (kind) {
    case Kind::Cyclic:
        return generator.to_string();
    case Kind::AllRationals:
        return "AllRationals";
    case Kind::DensePrime:
        return "DensePrime(" + p.get_str() + ")";
    case Kind::DenseBiPrime:
        return "DenseBiPrime(" + p.get_str() + "," + q.get_str() + ")";
    case Kind::SquarefreeDenominators:
        return "SquarefreeDenominators";
    }
    return {};
}

DifferenceGroup difference_group_generator(const MonoidSpec& m) {
    if (m.is_trivial()) throw TrivialMonoidError();
    using K = DifferenceGroup::Kind;
    return std::visit(Overloaded{
                          [](const FinitelyGenerated& fg) { return DifferenceGroup{K::Cyclic, gcd_generator(fg.generators)}; },
                          [](const PrimeReciprocal& pr) {
                              if (pr.tail) return DifferenceGroup{K::SquarefreeDenominators, {}};
                              return DifferenceGroup{K::Cyclic, gcd_generator(reciprocal_generators(pr))};
                          },
                          [](const QNonneg&) { return DifferenceGroup{K::AllRationals, {}}; },
                          [](const PrimePowerReciprocal& f) { return DifferenceGroup{K::DensePrime, {}, f.p}; },
                          [](const BiPrimeDivisible& f) { return DifferenceGroup{K::DenseBiPrime, {}, f.p, f.q}; },
                          [](const PrimePowerPair& f) { return DifferenceGroup{K::DenseBiPrime, {}, f.p, f.q}; },
                      },
                      m.family());
}

ChainReport verify_divisibility_chain(const MonoidSpec& m, std::span<const ReducedRational> chain) {
    for (const auto& q : chain)
        if (!contains(m, q)) throw DomainError(q.to_string() + " is not in " + m.to_string());
    ChainReport report;
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        const auto diff = checked_sub(chain[i], chain[i + 1]);
        std::string reason;
        if (!diff)
            reason = chain[i + 1].to_string() + " exceeds " + chain[i].to_string();
        else if (diff->is_zero())
            reason = "non-strict step: equal elements";
        else if (!contains(m, *diff))
            reason = chain[i].to_string() + " - " + chain[i + 1].to_string() + " = " + diff->to_string() + " is not in M";
        if (!reason.empty()) {
            report.valid = false;
            report.violation_step = i + 1;
            report.reason = std::move(reason);
            break;
        }
    }
    return report;
}

std::vector<std::uint64_t> denominator_prime_set(const MonoidSpec& m, std::uint64_t bound) {
    const auto primes = primes_up_to(bound);
    std::vector<std::uint64_t> out;
    auto keep_if = [&](auto&& pred) {
        for (auto p : primes)
            if (pred(BigInt(p))) out.push_back(p);
    };
    std::visit(Overloaded{
                   [&](const FinitelyGenerated& fg) {
                       if (fg.generators.empty()) return;
                       keep_if([&](const BigInt& p) { return mpz_divisible_p(m.scale().get_mpz_t(), p.get_mpz_t()) != 0; });
                   },
                   [&](const PrimeReciprocal& pr) {
                       keep_if([&](const BigInt& p) { return pr.tail || listed_prime(pr, p); });
                   },
                   [&](const QNonneg&) { out = primes; },
                   [&](const PrimePowerReciprocal& f) { keep_if([&](const BigInt& p) { return p == f.p; }); },
                   [&](const BiPrimeDivisible& f) { keep_if([&](const BigInt& p) { return p == f.p || p == f.q; }); },
                   [&](const PrimePowerPair& f) { keep_if([&](const BigInt& p) { return p == f.p || p == f.q; }); },
               },
               m.family());
    return out;
}

bool is_isomorphic_to_naturals(const MonoidSpec& m) {
    if (m.is_trivial()) throw TrivialMonoidError();
    return cyclic_generator(m).has_value();
}

bool is_n_divisible(const MonoidSpec& m, const BigInt& n) {
    if (n <= 0) throw DomainError("divisor must be positive");
    if (n == 1 || m.is_trivial()) return true;
    return std::visit(Overloaded{
                          [](const QNonneg&) { return true; },
                          [&](const PrimePowerReciprocal& f) { return is_prime_power_of(n, f.p); },
                          [&](const BiPrimeDivisible& f) { return smooth_over(n, f.p, f.q); },
                          [](const auto&) { return false; },
                      },
                      m.family());
}

} // namespace puiseux
