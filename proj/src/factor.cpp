#include "puiseux/factor.hpp"

#include <algorithm>
#include <bitset>
#include <map>

#include "puiseux/errors.hpp"
#include "puiseux/kernels.hpp"
#include "puiseux/number_theory.hpp"

namespace puiseux {

namespace {

constexpr unsigned long kSplittingSeed = 0x5eed5eedUL;

ModPolynomial one(const BigInt& p) { return ModPolynomial::monomial(p, 1, 0); }
ModPolynomial x_poly(const BigInt& p) { return ModPolynomial::monomial(p, 1, 1); }

ModPolynomial exact_quotient(const ModPolynomial& a, const ModPolynomial& b) { return divmod(a, b).first; }

// g(X) with g(X)^p = f(X) when f' = 0; over F_p coefficients are fixed by Frobenius.
ModPolynomial pth_root(const ModPolynomial& f) {
    const BigInt& p = f.modulus();
    std::vector<BigInt> c;
    const auto& fc = f.coeffs();
    const unsigned long step = p.get_ui();
    for (std::size_t i = 0; i < fc.size(); i += step) c.push_back(fc[i]);
    return ModPolynomial(p, std::move(c));
}

// Squarefree decomposition of a monic polynomial in characteristic p.
void squarefree_mod_p(const ModPolynomial& f, unsigned long scale, std::map<unsigned long, ModPolynomial>& out) {
    const BigInt& p = f.modulus();
    if (f.degree() <= 0) return;
    auto add = [&](const ModPolynomial& g, unsigned long m) {
        auto [it, fresh] = out.try_emplace(m, g);
        if (!fresh) it->second = it->second * g;
    };
    ModPolynomial c = gcd(f, f.derivative());
    ModPolynomial w = exact_quotient(f, c);
    unsigned long i = 1;
    while (!w.is_one()) {
        ModPolynomial y = gcd(w, c);
        ModPolynomial z = exact_quotient(w, y);
        if (z.degree() > 0) add(z, i * scale);
        w = std::move(y);
        c = exact_quotient(c, w);
        ++i;
    }
    if (c.degree() > 0) squarefree_mod_p(pth_root(c), scale * p.get_ui(), out);
}

// Distinct-degree factorization of a squarefree monic polynomial.
std::vector<std::pair<ModPolynomial, unsigned long>> distinct_degree(ModPolynomial f) {
    const BigInt& p = f.modulus();
    std::vector<std::pair<ModPolynomial, unsigned long>> out;
    ModPolynomial h = x_poly(p) % f;
    for (unsigned long d = 1; f.degree() >= static_cast<long>(2 * d); ++d) {
        h = powmod(h, p, f);
        ModPolynomial g = gcd(h - x_poly(p), f);
        if (!g.is_one()) {
            out.emplace_back(g, d);
            f = exact_quotient(f, g);
            h = h % f;
        }
    }
    if (f.degree() > 0) out.emplace_back(f, static_cast<unsigned long>(f.degree()));
    return out;
}

ModPolynomial random_poly(const BigInt& p, long below_degree, gmp_randclass& rng) {
    std::vector<BigInt> c;
    for (long i = 0; i < below_degree; ++i) c.push_back(rng.get_z_range(p));
    return ModPolynomial(p, std::move(c));
}

// Cantor-Zassenhaus splitting of a product of distinct irreducibles of degree d.
void equal_degree(const ModPolynomial& f, unsigned long d, gmp_randclass& rng, std::vector<ModPolynomial>& out) {
    if (f.degree() == static_cast<long>(d)) {
        out.push_back(f);
        return;
    }
    const BigInt& p = f.modulus();
    BigInt qd;
    mpz_pow_ui(qd.get_mpz_t(), p.get_mpz_t(), d);
    for (;;) {
        ModPolynomial a = random_poly(p, f.degree(), rng);
        if (a.degree() <= 0) continue;
        ModPolynomial b(p, {});
        if (p == 2) {
            ModPolynomial t = a % f;
            b = t;
            for (unsigned long j = 1; j < d; ++j) {
                t = (t * t) % f;
                b = b + t;
            }
        } else {
            b = powmod(a, BigInt((qd - 1) / 2), f) - one(p);
        }
        ModPolynomial u = gcd(b, f);
        if (u.degree() > 0 && u.degree() < f.degree()) {
            equal_degree(u, d, rng, out);
            equal_degree(exact_quotient(f, u), d, rng, out);
            return;
        }
    }
}

bool squarefree_mod(const IntegerPolynomial& f, const BigInt& p) {
    const ModPolynomial fp = ModPolynomial::from_integer(p, f);
    if (fp.degree() != f.degree()) return false;
    return gcd(fp, fp.derivative()).is_one();
}

BigInt ceil_sqrt(const BigInt& n) {
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    if (r * r < n) ++r;
    return r;
}

// Bitmask of attainable factor degrees given one factorization pattern.
using DegreeSet = std::bitset<kDefaultDegreeCap * 8 + 1>;

constexpr int kPrimeCandidates = 6;
constexpr std::size_t kRecombinationBatch = 4096;
constexpr std::size_t kRecombinationBudget = std::size_t{1} << 22;

DegreeSet attainable_degrees(const std::vector<std::pair<ModPolynomial, unsigned long>>& ddf) {
    DegreeSet s;
    s.set(0);
    for (const auto& [g, d] : ddf)
        for (long k = 0; k < g.degree() / static_cast<long>(d); ++k) s |= s << d;
    return s;
}

std::vector<IntegerPolynomial> zassenhaus(IntegerPolynomial f, bool parallel) {
    std::vector<IntegerPolynomial> found;
    if (f.degree() >= 1 && f[0] == 0) {
        found.emplace_back(std::vector<BigInt>{0, 1});
        f = *divide_exact(f, found.back());
    }
    const long n = f.degree();
    if (n <= 0) return found;
    if (n == 1) {
        found.push_back(f);
        return found;
    }

    // Small-prime screen: degree patterns that rule out any proper factor.
    DegreeSet possible;
    possible.set();
    if (static_cast<std::size_t>(n) < DegreeSet().size()) {
        int screened = 0;
        for (unsigned long sp : primes_up_to(200)) {
            if (screened == 8) break;
            const BigInt p(sp);
            if (mpz_divisible_p(f.lc().get_mpz_t(), p.get_mpz_t()) || !squarefree_mod(f, p)) continue;
            ++screened;
            possible &= attainable_degrees(distinct_degree(ModPolynomial::from_integer(p, f).monic()));
            bool proper = false;
            for (long d = 1; d < n; ++d) proper = proper || possible.test(static_cast<std::size_t>(d));
            if (!proper) {
                found.push_back(f);
                return found;
            }
        }
    }

    // Prime above twice the Mignotte bound |lc| * 2^n * ||f||_2. Among the
    // first few admissible primes keep the one with the fewest local factors,
    // which matters a great deal for cyclotomic-like inputs.
    BigInt bound = abs(f.lc()) * ceil_sqrt(f.norm2_squared());
    mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<unsigned long>(n));
    BigInt p;
    std::size_t fewest = 0;
    BigInt q = BigInt(2 * bound + 1);
    for (int tried = 0; tried < kPrimeCandidates;) {
        q = next_prime(q);
        if (mpz_divisible_p(f.lc().get_mpz_t(), q.get_mpz_t()) || !squarefree_mod(f, q)) continue;
        ++tried;
        std::size_t count = 0;
        for (const auto& [g, d] : distinct_degree(ModPolynomial::from_integer(q, f).monic()))
            count += static_cast<std::size_t>(g.degree()) / d;
        if (p == 0 || count < fewest) {
            p = q;
            fewest = count;
        }
        if (fewest <= 1) break;
    }
    if (fewest <= 1) {
        found.push_back(f);
        return found;
    }

    const ModFactorization modular = factor_mod_p(ModPolynomial::from_integer(p, f));
    std::vector<ModPolynomial> local;
    for (const auto& mf : modular.factors) local.push_back(mf.factor);

    IntegerPolynomial rest = f;
    std::vector<std::size_t> live(local.size());
    for (std::size_t i = 0; i < live.size(); ++i) live[i] = i;

    std::size_t budget = kRecombinationBudget;
    for (std::size_t s = 1; 2 * s <= live.size();) {
        const BigInt lead = rest.lc();
        const BigInt tail = rest[0];
        std::vector<std::vector<std::size_t>> batch;
        auto candidate = [&](std::size_t idx) {
            ModPolynomial prod = ModPolynomial::monomial(p, lead, 0);
            for (auto k : batch[idx]) prod = prod * local[k];
            return prod.symmetric_lift().primitive_part();
        };
        auto divides = [&](std::size_t idx) {
            const IntegerPolynomial g = candidate(idx);
            if (!mpz_divisible_p(tail.get_mpz_t(), g[0].get_mpz_t())) return false;
            return divide_exact(rest, g).has_value();
        };

        // Walk the s-subsets of `live` lexicographically, testing them in
        // batches and skipping any whose degree no small prime allows.
        std::vector<std::size_t> pick(s);
        for (std::size_t i = 0; i < s; ++i) pick[i] = i;
        std::optional<std::vector<std::size_t>> hit;
        bool exhausted = false;
        while (!hit && !exhausted) {
            batch.clear();
            while (batch.size() < kRecombinationBatch && !exhausted) {
                if (budget-- == 0) throw CapExceededError("recombination search exceeds its budget");
                std::vector<std::size_t> chosen;
                std::size_t degree = 0;
                for (auto k : pick) {
                    chosen.push_back(live[k]);
                    degree += static_cast<std::size_t>(local[live[k]].degree());
                }
                if (degree >= possible.size() || possible.test(degree)) batch.push_back(std::move(chosen));
                std::size_t i = s;
                while (i > 0 && pick[i - 1] == live.size() - s + i - 1) --i;
                if (i == 0) {
                    exhausted = true;
                } else {
                    ++pick[i - 1];
                    for (std::size_t j = i; j < s; ++j) pick[j] = pick[j - 1] + 1;
                }
            }
            const auto at = parallel ? kernels::find_first(batch.size(), divides)
                                     : kernels::find_first_serial(batch.size(), divides);
            if (at) hit = batch[*at];
        }
        if (!hit) {
            ++s;
            continue;
        }
        batch = {*hit};
        const IntegerPolynomial g = candidate(0);
        rest = *divide_exact(rest, g);
        found.push_back(g);
        std::vector<std::size_t> remaining;
        for (auto k : live)
            if (std::find(hit->begin(), hit->end(), k) == hit->end()) remaining.push_back(k);
        live = std::move(remaining);
    }
    if (rest.degree() > 0) found.push_back(rest.primitive_part());
    return found;
}

} // namespace

ModFactorization factor_mod_p(const ModPolynomial& f) {
    if (f.is_zero()) throw DomainError("cannot factor the zero polynomial");
    ModFactorization out{f.lc(), {}};
    std::map<unsigned long, ModPolynomial> sqf;
    squarefree_mod_p(f.monic(), 1, sqf);
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(kSplittingSeed);
    for (const auto& [mult, part] : sqf)
        for (const auto& [g, d] : distinct_degree(part)) {
            std::vector<ModPolynomial> irreducibles;
            equal_degree(g, d, rng, irreducibles);
            for (auto& h : irreducibles) out.factors.push_back({std::move(h), mult});
        }
    std::sort(out.factors.begin(), out.factors.end(), [](const ModFactor& a, const ModFactor& b) {
        if (a.factor == b.factor) return a.multiplicity < b.multiplicity;
        return a.factor < b.factor;
    });
    return out;
}

IntFactorization factor_over_integers(const IntegerPolynomial& f, std::size_t degree_cap) {
    return factor_over_integers(f, IntFactorOptions{degree_cap, true});
}

IntFactorization factor_over_integers(const IntegerPolynomial& f, const IntFactorOptions& options) {
    if (f.is_zero()) throw DomainError("cannot factor the zero polynomial");
    if (static_cast<std::size_t>(f.degree()) > options.degree_cap)
        throw CapExceededError("degree " + std::to_string(f.degree()) + " exceeds the factoring cap of " +
                               std::to_string(options.degree_cap));
    IntFactorization out;
    out.content = f.content();
    if (f.lc() < 0) out.content = -out.content;
    if (f.degree() == 0) return out;

    // Yun's squarefree decomposition over Z.
    IntegerPolynomial a = f.primitive_part();
    IntegerPolynomial c = gcd(a, a.derivative());
    IntegerPolynomial w = *divide_exact(a, c);
    for (unsigned long i = 1; w.degree() > 0; ++i) {
        IntegerPolynomial y = gcd(w, c);
        IntegerPolynomial z = *divide_exact(w, y);
        if (z.degree() > 0)
            for (auto& g : zassenhaus(z, options.parallel_recombination)) out.factors.push_back({std::move(g), i});
        w = std::move(y);
        c = *divide_exact(c, w);
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const IntFactor& x, const IntFactor& y) {
        if (x.factor == y.factor) return x.multiplicity < y.multiplicity;
        return x.factor < y.factor;
    });
    if (!(expand(out) == f)) throw Error("internal error: integer factorization does not reconstruct its input");
    return out;
}

bool is_irreducible_poly(const DensePoly& f, std::size_t degree_cap) {
    if (f.degree() <= 0) throw DomainError("irreducibility of a constant is undefined");
    if (f.field.is_prime_field()) {
        const auto fz = factor_mod_p(ModPolynomial::from_dense(f));
        return fz.factors.size() == 1 && fz.factors[0].multiplicity == 1;
    }
    BigInt l = 1;
    for (const auto& c : f.coeffs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<BigInt> ints;
    for (const auto& c : f.coeffs) ints.emplace_back(c.get_num() * (l / c.get_den()));
    const IntegerPolynomial g(std::move(ints));
    if (find_eisenstein_prime(g.primitive_part())) return true;
    const auto fz = factor_over_integers(g, degree_cap);
    return fz.factors.size() == 1 && fz.factors[0].multiplicity == 1;
}

std::optional<BigInt> find_eisenstein_prime(const IntegerPolynomial& f) {
    if (f.degree() < 1 || f[0] == 0) return std::nullopt;
    BigInt g = 0;
    for (long i = 0; i < f.degree(); ++i) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), f[static_cast<std::size_t>(i)].get_mpz_t());
    if (g == 1) return std::nullopt;
    for (const auto& pp : factor_integer(g)) {
        const BigInt p2 = pp.prime * pp.prime;
        if (!mpz_divisible_p(f.lc().get_mpz_t(), pp.prime.get_mpz_t()) && !mpz_divisible_p(f[0].get_mpz_t(), p2.get_mpz_t()))
            return pp.prime;
    }
    return std::nullopt;
}

IntegerPolynomial expand(const IntFactorization& fz) {
    IntegerPolynomial r(std::vector<BigInt>{fz.content});
    for (const auto& [g, m] : fz.factors)
        for (unsigned long k = 0; k < m; ++k) r = r * g;
    return r;
}

ModPolynomial expand(const ModFactorization& fz, const BigInt& p) {
    ModPolynomial r = ModPolynomial::monomial(p, fz.unit, 0);
    for (const auto& [g, m] : fz.factors)
        for (unsigned long k = 0; k < m; ++k) r = r * g;
    return r;
}

} // namespace puiseux
