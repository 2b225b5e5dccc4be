// Shared generators and brute-force oracles for the test suites. Oracles are
// deliberately naive: plain enumeration over small machine integers, with no
// code shared with the library.
#ifndef PUISEUX_TESTS_SUPPORT_HPP
#define PUISEUX_TESTS_SUPPORT_HPP

#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "puiseux/algebra_factor.hpp"
#include "puiseux/field.hpp"
#include "puiseux/monoid.hpp"
#include "puiseux/number_theory.hpp"
#include "puiseux/puiseux_poly.hpp"
#include "puiseux/upoly.hpp"

namespace testing_support {

using namespace puiseux;

class Rng {
public:
    explicit Rng(std::uint64_t seed) : g_(seed) {}
    long range(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(g_); }
    bool coin() { return range(0, 1) == 1; }
    template <class T>
    const T& pick(const std::vector<T>& v) { return v[static_cast<std::size_t>(range(0, static_cast<long>(v.size()) - 1))]; }

private:
    std::mt19937_64 g_;
};

inline ReducedRational rr(long n, long d = 1) { return ReducedRational::reduce(BigInt(n), BigInt(d)); }

/// Exact small fraction num/den, kept as a pair of machine integers.
struct Frac {
    long long num, den;
};

inline Frac frac_norm(long long n, long long d) {
    const long long g = std::gcd(n < 0 ? -n : n, d);
    return {n / g, d / g};
}

/// x in <gens> by trying every coefficient vector with sum(c_i * g_i) <= x.
inline bool fg_contains_oracle(const std::vector<Frac>& gens, Frac x, std::size_t i = 0) {
    if (x.num == 0) return true;
    if (i == gens.size()) return false;
    const Frac g = gens[i];
    for (long long c = 0;; ++c) {
        // remaining = x - c*g, as a fraction over den = x.den * g.den
        const long long n = x.num * g.den - c * g.num * x.den;
        if (n < 0) break;
        if (fg_contains_oracle(gens, frac_norm(n, x.den * g.den), i + 1)) return true;
    }
    return false;
}

// ---- Polynomials over F_p with small machine coefficients (ascending order). ----

using SmallPoly = std::vector<long>;

inline void small_trim(SmallPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

/// Remainder of f by monic g over F_p.
inline SmallPoly small_rem(SmallPoly f, const SmallPoly& g, long p) {
    small_trim(f);
    while (f.size() >= g.size()) {
        const long c = f.back();
        const std::size_t shift = f.size() - g.size();
        for (std::size_t i = 0; i < g.size(); ++i) f[shift + i] = ((f[shift + i] - c * g[i]) % p + p) % p;
        small_trim(f);
    }
    return f;
}

inline SmallPoly small_quot(SmallPoly f, const SmallPoly& g, long p) {
    small_trim(f);
    SmallPoly q(f.size() >= g.size() ? f.size() - g.size() + 1 : 0, 0);
    while (f.size() >= g.size()) {
        const long c = f.back();
        const std::size_t shift = f.size() - g.size();
        q[shift] = c;
        for (std::size_t i = 0; i < g.size(); ++i) f[shift + i] = ((f[shift + i] - c * g[i]) % p + p) % p;
        small_trim(f);
    }
    return q;
}

/// All monic polynomials of the given degree over F_p.
inline std::vector<SmallPoly> all_monic(long p, int degree) {
    std::vector<SmallPoly> out;
    long count = 1;
    for (int i = 0; i < degree; ++i) count *= p;
    for (long code = 0; code < count; ++code) {
        SmallPoly f(static_cast<std::size_t>(degree) + 1, 0);
        long c = code;
        for (int i = 0; i < degree; ++i) {
            f[static_cast<std::size_t>(i)] = c % p;
            c /= p;
        }
        f.back() = 1;
        out.push_back(f);
    }
    return out;
}

/// Monic irreducibles of degree <= max_degree by trial division against lower degrees.
inline std::vector<SmallPoly> irreducible_table(long p, int max_degree) {
    std::vector<SmallPoly> table;
    for (int d = 1; d <= max_degree; ++d)
        for (const auto& f : all_monic(p, d)) {
            bool irreducible = true;
            for (const auto& g : table)
                if (2 * (static_cast<int>(g.size()) - 1) <= d && small_rem(f, g, p).empty()) {
                    irreducible = false;
                    break;
                }
            if (irreducible) table.push_back(f);
        }
    return table;
}

/// Factorization of monic f by repeated trial division with the table: factor -> multiplicity.
inline std::map<SmallPoly, unsigned long> trial_factor(SmallPoly f, const std::vector<SmallPoly>& table, long p) {
    std::map<SmallPoly, unsigned long> out;
    for (const auto& g : table)
        while (f.size() >= g.size() && small_rem(f, g, p).empty()) {
            f = small_quot(f, g, p);
            ++out[g];
        }
    return out;
}

// ---- Random Puiseux polynomials. ----

/// Up to max_terms terms, exponent denominators <= max_den, numerators <= max_num,
/// integer coefficients in [-coeff, coeff] (nonzero).
inline PuiseuxPoly random_poly(Rng& rng, const Field& field, int max_terms, long max_den, long max_num, long coeff) {
    std::vector<Term> terms;
    const int n = static_cast<int>(rng.range(1, max_terms));
    for (int i = 0; i < n; ++i) {
        long c = 0;
        while (c == 0) c = rng.range(-coeff, coeff);
        terms.push_back({rr(rng.range(0, max_num), rng.range(1, max_den)), Rational(c)});
    }
    return PuiseuxPoly::canonicalize(std::move(terms), field);
}

inline PuiseuxPoly poly_of(const std::vector<std::pair<ReducedRational, long>>& terms, const Field& field) {
    std::vector<Term> t;
    for (const auto& [e, c] : terms) t.push_back({e, Rational(c)});
    return PuiseuxPoly::canonicalize(std::move(t), field);
}

/// Same multiset up to unit multiples: compares monic normal forms.
inline bool same_up_to_units(std::vector<PuiseuxPoly> a, std::vector<PuiseuxPoly> b) {
    if (a.size() != b.size()) return false;
    for (auto& f : a) f = f.monic();
    for (auto& f : b) f = f.monic();
    auto by_text = [](const PuiseuxPoly& x, const PuiseuxPoly& y) { return x.to_string() < y.to_string(); };
    std::sort(a.begin(), a.end(), by_text);
    std::sort(b.begin(), b.end(), by_text);
    return a == b;
}

inline PuiseuxPoly product(const std::vector<PuiseuxPoly>& fs, const Field& field, const Coefficient& unit = 1) {
    PuiseuxPoly p = PuiseuxPoly::constant(unit, field);
    for (const auto& f : fs) p = p * f;
    return p;
}

} // namespace testing_support

#endif
