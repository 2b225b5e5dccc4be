#include "puiseux/algebra_factor.hpp"

#include <algorithm>
#include <map>

#include "puiseux/errors.hpp"
#include "puiseux/number_theory.hpp"

namespace puiseux {

namespace {

using Status = IrreducibilityVerdict::Status;

// Factorization of an ordinary polynomial over its own field:
// f = unit * prod(factor^mult), factors normalized (primitive integral or monic).
struct DenseFactorization {
    Coefficient unit;
    std::vector<std::pair<DensePoly, unsigned long>> factors;

    bool irreducible() const { return factors.size() == 1 && factors[0].second == 1; }
};

DenseFactorization factor_dense(const DensePoly& f, std::size_t degree_cap) {
    DenseFactorization out;
    if (f.field.is_prime_field()) {
        const ModFactorization fz = factor_mod_p(ModPolynomial::from_dense(f));
        out.unit = Rational(fz.unit);
        for (const auto& [g, m] : fz.factors) out.factors.emplace_back(g.to_dense(), m);
        return out;
    }
    BigInt l = 1;
    for (const auto& c : f.coeffs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<BigInt> ints;
    for (const auto& c : f.coeffs) ints.emplace_back(c.get_num() * (l / c.get_den()));
    const IntegerPolynomial g(std::move(ints));
    if (find_eisenstein_prime(g.primitive_part())) {
        // Eisenstein: irreducible over Q without running the engine.
        BigInt c = g.content();
        if (g.lc() < 0) c = -c;
        out.unit = Rational(c, l);
        out.factors.emplace_back(g.primitive_part().to_dense(), 1);
        return out;
    }
    const IntFactorization fz = factor_over_integers(g, degree_cap);
    out.unit = Rational(fz.content, l);
    out.unit.canonicalize();
    for (const auto& [h, m] : fz.factors) out.factors.emplace_back(h.to_dense(), m);
    return out;
}

DensePoly dense_mul(const DensePoly& a, const DensePoly& b) {
    DensePoly out{a.field, {}};
    if (a.coeffs.empty() || b.coeffs.empty()) return out;
    out.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs.size(); ++j) out.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    for (auto& c : out.coeffs) c = a.field.normalize(c);
    out.trim();
    return out;
}

DensePoly dense_constant(const Field& field, const Coefficient& c) { return DensePoly{field, {field.normalize(c)}}; }

// Product of unit and the factor multiset given by `counts`.
DensePoly dense_product(const DenseFactorization& fz, const std::vector<unsigned long>& counts, bool with_unit) {
    DensePoly r = dense_constant(fz.factors.front().first.field, with_unit ? fz.unit : Coefficient(1));
    for (std::size_t i = 0; i < counts.size(); ++i)
        for (unsigned long k = 0; k < counts[i]; ++k) r = dense_mul(r, fz.factors[i].first);
    return r;
}

// Cyclic M = <a>: F[M] is F[Y] with Y = X^a.
DensePoly to_cyclic(const PuiseuxPoly& f, const ReducedRational& a) {
    DensePoly out{f.field(), {}};
    if (f.is_zero()) return out;
    const Rational top = f.degree().value() / a.value();
    if (top.get_den() != 1) throw ExponentNotInMonoidError(f.degree().to_string());
    if (top.get_num() > kMaxInflatedDegree) throw CapExceededError("degree in the cyclic generator exceeds the cap");
    out.coeffs.assign(top.get_num().get_ui() + 1, Rational(0));
    for (const auto& t : f.terms()) {
        const Rational k = t.exponent.value() / a.value();
        if (k.get_den() != 1) throw ExponentNotInMonoidError(t.exponent.to_string());
        out.coeffs[k.get_num().get_ui()] = t.coefficient;
    }
    return out;
}

PuiseuxPoly from_cyclic(const DensePoly& g, const ReducedRational& a) {
    std::vector<Term> terms;
    for (std::size_t k = 0; k < g.coeffs.size(); ++k)
        if (sgn(g.coeffs[k]) != 0) terms.push_back({a.times(BigInt(static_cast<unsigned long>(k))), g.coeffs[k]});
    return PuiseuxPoly::canonicalize(std::move(terms), g.field);
}

IrreducibilityVerdict reducible(PuiseuxPoly g, PuiseuxPoly h, unsigned long bound, BigInt m, std::string evidence) {
    IrreducibilityVerdict v{Status::Reducible, bound};
    v.witness.emplace(std::move(g), std::move(h));
    v.witness_inflation = std::move(m);
    v.evidence = std::move(evidence);
    return v;
}

// Splits a reducible factorization as (first factor) * (everything else).
std::pair<DensePoly, DensePoly> first_split(const DenseFactorization& fz) {
    std::vector<unsigned long> first(fz.factors.size(), 0), rest(fz.factors.size(), 0);
    first[0] = 1;
    for (std::size_t i = 0; i < fz.factors.size(); ++i) rest[i] = fz.factors[i].second;
    rest[0] -= 1;
    return {dense_product(fz, first, false), dense_product(fz, rest, true)};
}

bool frobenius_applies(const PuiseuxPoly& f, const MonoidSpec& m) {
    return f.field().is_prime_field() && is_n_divisible(m, f.field().modulus());
}

constexpr unsigned long kFrobeniusWitnessLimit = 64;

} // namespace

bool monomial_is_irreducible(const MonoidSpec& m, const ReducedRational& q) {
    if (q.is_zero()) throw DomainError("the monomial X^0 is a unit");
    if (!contains(m, q)) throw DomainError(q.to_string() + " is not in " + m.to_string());
    return is_atom(m, q);
}

bool is_unit(const PuiseuxPoly& f) { return !f.is_zero() && f.is_constant(); }

std::pair<PuiseuxPoly, Coefficient> normalize_associate(const PuiseuxPoly& f) {
    if (f.is_zero()) throw DomainError("zero has no associate class representative");
    if (f.field().is_prime_field()) return {f.monic(), f.leading_coefficient()};
    auto [g, l] = clear_rational_coefficients(f);
    BigInt c = content(g);
    if (sgn(g.leading_coefficient()) < 0) c = -c;
    Rational unit(c, l);
    unit.canonicalize();
    return {g.scaled(Rational(1) / Rational(c)), unit};
}

IrreducibilityVerdict is_irreducible(const PuiseuxPoly& f, const MonoidSpec& m, unsigned long bound,
                                     std::size_t degree_cap) {
    if (f.is_zero()) throw DomainError("irreducibility of zero is undefined");
    require_in_algebra(f, m);
    if (f.is_constant()) return {Status::Unit, bound, std::nullopt, 0, "nonzero constant"};
    const Field& field = f.field();

    if (f.is_monomial()) {
        const auto& t = f.terms()[0];
        const auto y = split_witness(m, t.exponent);
        if (!y) return {Status::IrreducibleCertified, bound, std::nullopt, 0, "degree is an atom of M"};
        return reducible(PuiseuxPoly::monomial(*y, 1, field),
                         PuiseuxPoly::monomial(*checked_sub(t.exponent, *y), t.coefficient, field), bound, 0,
                         "degree " + t.exponent.to_string() + " is not an atom of M");
    }

    if (frobenius_applies(f, m) && f.field().modulus() <= kFrobeniusWitnessLimit) {
        const PuiseuxPoly g = frobenius_pth_root(f, m);
        return reducible(g, g.pow(f.field().modulus().get_ui() - 1), bound, 0, "p-th power in characteristic p");
    }

    if (const auto a = cyclic_generator(m)) {
        const DensePoly g = to_cyclic(f, *a);
        const DenseFactorization fz = factor_dense(g, degree_cap);
        if (fz.irreducible())
            return {Status::IrreducibleCertified, bound, std::nullopt, 0, "cyclic monoid: F[M] = F[Y]"};
        auto [left, right] = first_split(fz);
        return reducible(from_cyclic(left, *a), from_cyclic(right, *a), bound, 0, "cyclic monoid: F[M] = F[Y]");
    }

    const BigInt m0 = f.support_denominator_lcm();

    if (is_root_closed(m)) {
        bool tested = false;
        for (unsigned long k = 1; k <= bound; ++k) {
            const BigInt inflation = m0 * k;
            if (!contains(m, ReducedRational::reduce(1, inflation))) continue;
            tested = true;
            const DenseFactorization fz = factor_dense(inflate(f, inflation), degree_cap);
            if (fz.irreducible()) continue;
            auto [left, right] = first_split(fz);
            return reducible(deflate(left, inflation, m), deflate(right, inflation, m), bound, inflation,
                             "f(X^" + inflation.get_str() + ") splits");
        }
        if (!tested) return {Status::Unknown, bound, std::nullopt, 0, "no admissible inflation within the bound"};
        return {Status::IrreducibleCertified, bound, std::nullopt, 0,
                "f(X^m) irreducible for m = k*" + m0.get_str() + ", k <= " + std::to_string(bound) + ", 1/m in M"};
    }

    // Not root-closed: deflation of arbitrary factors may leave F[M].
    if (field.is_rationals()) {
        const auto integral = clear_rational_coefficients(f).first;
        const auto g = IntegerPolynomial::from_dense(inflate(integral, m0)).primitive_part();
        if (const auto p = find_eisenstein_prime(g))
            return {Status::IrreducibleCertified, bound, std::nullopt, 0, "Eisenstein at " + p->get_str()};
    }
    constexpr std::size_t kMaxSplits = 4096;
    for (unsigned long k = 1; k <= bound; ++k) {
        const BigInt inflation = m0 * k;
        const DenseFactorization fz = factor_dense(inflate(f, inflation), degree_cap);
        if (fz.irreducible()) continue;
        std::vector<unsigned long> counts(fz.factors.size(), 0);
        std::size_t visited = 0;
        // Odometer over sub-multisets; skips the empty and the full one.
        for (;;) {
            std::size_t i = 0;
            while (i < counts.size() && counts[i] == fz.factors[i].second) counts[i++] = 0;
            if (i == counts.size()) break;
            ++counts[i];
            if (++visited > kMaxSplits) break;
            std::vector<unsigned long> rest(counts.size());
            bool full = true;
            for (std::size_t j = 0; j < counts.size(); ++j) {
                rest[j] = fz.factors[j].second - counts[j];
                full = full && rest[j] == 0;
            }
            if (full) continue;
            try {
                PuiseuxPoly left = deflate(dense_product(fz, counts, false), inflation, m);
                PuiseuxPoly right = deflate(dense_product(fz, rest, true), inflation, m);
                return reducible(std::move(left), std::move(right), bound, inflation,
                                 "f(X^" + inflation.get_str() + ") splits inside F[M]");
            } catch (const ExponentNotInMonoidError&) {
            }
        }
    }
    return {Status::Unknown, bound, std::nullopt, 0, "M is not root-closed and no screen decided"};
}

IrreducibilityVerdict is_irreducible_integral(const PuiseuxPoly& f, const MonoidSpec& m, unsigned long bound,
                                              std::size_t degree_cap) {
    if (!f.field().is_rationals()) throw DomainError("integral irreducibility is defined over Z only");
    if (f.is_constant()) throw DomainError("integral irreducibility needs a non-constant element");
    require_in_algebra(f, m);
    const BigInt c = content(f);
    if (c != 1) {
        const Field& q = f.field();
        return reducible(PuiseuxPoly::constant(Rational(c), q), f.scaled(Rational(1) / Rational(c)), bound, 0,
                         "content " + c.get_str() + " is not a unit of Z");
    }
    return is_irreducible(f, m, bound, degree_cap);
}

FactorOutcome factor_in_algebra(const PuiseuxPoly& f, const MonoidSpec& m, const AlgebraOptions& options) {
    if (f.is_zero()) throw DomainError("cannot factor zero");
    require_in_algebra(f, m);
    FactorOutcome out{FactorOutcome::Status::UnitElement, Coefficient(1), {}, options.inflation_bound, options.depth};
    if (f.is_constant()) {
        out.unit = f.leading_coefficient();
        out.detail = "nonzero constants are units";
        return out;
    }
    if (!is_root_closed(m)) throw UnsupportedMonoidError(m.to_string() + " is not root-closed");

    const Field& field = f.field();
    const bool frobenius = frobenius_applies(f, m);

    struct Piece {
        PuiseuxPoly poly;
        unsigned long multiplicity;
    };
    std::vector<Piece> level;
    Coefficient unit(1);
    auto absorb = [&](std::vector<Piece>& into, const PuiseuxPoly& p, unsigned long mult) {
        auto [normal, u] = normalize_associate(p);
        for (unsigned long k = 0; k < mult; ++k) unit = field.mul(unit, u);
        for (auto& piece : into)
            if (piece.poly == normal) {
                piece.multiplicity += mult;
                return;
            }
        into.push_back({std::move(normal), mult});
    };
    auto expand_pieces = [&](const std::vector<Piece>& pieces) {
        std::vector<PuiseuxPoly> flat;
        for (const auto& p : pieces)
            for (unsigned long k = 0; k < p.multiplicity; ++k) flat.push_back(p.poly);
        return flat;
    };

    // Initial split through one inflation with 1/m in M.
    try {
        if (const auto a = cyclic_generator(m)) {
            const DenseFactorization fz = factor_dense(to_cyclic(f, *a), options.degree_cap);
            unit = fz.unit;
            for (const auto& [g, mult] : fz.factors) absorb(level, from_cyclic(g, *a), mult);
        } else {
            const BigInt m0 = f.support_denominator_lcm();
            std::optional<BigInt> inflation;
            for (unsigned long k = 1; k <= std::max(options.inflation_bound, 1UL) && !inflation; ++k)
                if (contains(m, ReducedRational::reduce(1, BigInt(m0 * k)))) inflation = BigInt(m0 * k);
            if (!inflation) throw UnsupportedMonoidError("no inflation exponent m with 1/m in M within the bound");
            const DenseFactorization fz = factor_dense(inflate(f, *inflation), options.degree_cap);
            unit = fz.unit;
            for (const auto& [g, mult] : fz.factors) absorb(level, deflate(g, *inflation, m), mult);
        }
    } catch (const CapExceededError& e) {
        out.status = FactorOutcome::Status::CapExceeded;
        out.factors = {f};
        out.detail = e.what();
        return out;
    }

    std::vector<PuiseuxPoly> atoms;
    constexpr unsigned long kMaxPieces = 1UL << 16;
    bool exhausted = false;
    for (unsigned long depth = 0; !level.empty(); ++depth) {
        std::vector<Piece> next;
        std::vector<Piece> stuck;
        try {
            for (auto& piece : level) {
                if (frobenius && piece.poly.field().modulus() <= kFrobeniusWitnessLimit) {
                    if (depth >= options.depth) {
                        stuck.push_back(piece);
                        continue;
                    }
                    absorb(next, frobenius_pth_root(piece.poly, m),
                           piece.multiplicity * field.modulus().get_ui());
                    continue;
                }
                const IrreducibilityVerdict v = is_irreducible(piece.poly, m, options.inflation_bound, options.degree_cap);
                if (v.status == Status::IrreducibleCertified) {
                    for (unsigned long k = 0; k < piece.multiplicity; ++k) atoms.push_back(piece.poly);
                    continue;
                }
                if (v.status != Status::Reducible || depth >= options.depth) {
                    stuck.push_back(piece);
                    continue;
                }
                absorb(next, v.witness->first, piece.multiplicity);
                absorb(next, v.witness->second, piece.multiplicity);
            }
        } catch (const CapExceededError& e) {
            out.status = FactorOutcome::Status::CapExceeded;
            std::vector<PuiseuxPoly> partial = atoms;
            for (auto& p : expand_pieces(stuck)) partial.push_back(std::move(p));
            for (auto& p : expand_pieces(next)) partial.push_back(std::move(p));
            // Pieces of this level not yet processed still multiply back to f.
            std::vector<Piece> pending;
            for (const auto& piece : level) pending.push_back(piece);
            out.unit = unit;
            out.factors = expand_pieces(level);
            out.factors.insert(out.factors.begin(), atoms.begin(), atoms.end());
            out.detail = e.what();
            // Units absorbed during this level belong to `next`; recompute from scratch.
            PuiseuxPoly prod = PuiseuxPoly::constant(1, field);
            for (const auto& p : out.factors) prod = prod * p;
            out.unit = field.mul(f.leading_coefficient(), field.inv(prod.leading_coefficient()));
            return out;
        }
        if (!stuck.empty()) {
            exhausted = true;
            for (auto& p : expand_pieces(stuck)) atoms.push_back(std::move(p));
            for (auto& p : expand_pieces(next)) atoms.push_back(std::move(p));
            break;
        }
        unsigned long total = 0;
        for (const auto& p : next) total += p.multiplicity;
        if (total > kMaxPieces) {
            exhausted = true;
            for (auto& p : expand_pieces(next)) atoms.push_back(std::move(p));
            break;
        }
        level = std::move(next);
    }

    std::sort(atoms.begin(), atoms.end(), [](const PuiseuxPoly& a, const PuiseuxPoly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a.to_string() < b.to_string();
    });
    out.unit = unit;
    out.factors = std::move(atoms);

    PuiseuxPoly prod = PuiseuxPoly::constant(out.unit, field);
    for (const auto& p : out.factors) prod = prod * p;
    if (!(prod == f)) throw Error("internal error: factorization does not reconstruct its input");

    if (exhausted) {
        out.status = FactorOutcome::Status::NoAtomicFactorizationFound;
        out.frobenius_certificate = frobenius;
        out.detail = frobenius ? "every non-constant element is a p-th power: F[M] is antimatter"
                               : "splitting did not terminate within the depth cap";
    } else {
        out.status = FactorOutcome::Status::UniqueFactorization;
        out.detail = "each factor irreducible up to inflation bound " + std::to_string(options.inflation_bound);
    }
    return out;
}

bool uufd_check(const PuiseuxPoly& f, const std::vector<PuiseuxPoly>& z1, const std::vector<PuiseuxPoly>& z2) {
    if (f.is_zero()) throw DomainError("zero has no factorizations");
    auto normalized = [&](const std::vector<PuiseuxPoly>& z) {
        PuiseuxPoly prod = PuiseuxPoly::constant(1, f.field());
        std::vector<PuiseuxPoly> out;
        for (const auto& g : z) {
            if (g.is_constant()) throw DomainError("factor lists must contain non-constant elements");
            prod = prod * g;
            out.push_back(g.monic());
        }
        if (prod.is_zero() || !(prod.monic() == f.monic()))
            throw DomainError("factor list does not multiply to a unit multiple of the input");
        std::sort(out.begin(), out.end(), [](const PuiseuxPoly& a, const PuiseuxPoly& b) { return a.to_string() < b.to_string(); });
        return out;
    };
    const auto a = normalized(z1);
    const auto b = normalized(z2);
    return a == b;
}

PuiseuxPoly frobenius_pth_root(const PuiseuxPoly& f, const MonoidSpec& m) {
    if (!f.field().is_prime_field()) throw UnsupportedFieldError("the Frobenius root needs a prime field");
    const BigInt& p = f.field().modulus();
    std::vector<Term> terms;
    for (const auto& t : f.terms()) {
        const ReducedRational e = t.exponent.divided_by(p);
        if (!contains(m, e)) throw ExponentNotInMonoidError(e.to_string());
        terms.push_back({e, t.coefficient});
    }
    PuiseuxPoly g = PuiseuxPoly::canonicalize(std::move(terms), f.field());
    constexpr unsigned long kVerifyLimit = 257;
    if (p <= kVerifyLimit && !(g.pow(p.get_ui()) == f))
        throw Error("internal error: Frobenius root does not verify");
    return g;
}

} // namespace puiseux
