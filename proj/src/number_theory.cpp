#include "puiseux/number_theory.hpp"

#include <algorithm>
#include <map>

#include "puiseux/errors.hpp"

namespace puiseux {

long Valuation::value() const {
    if (infinite_) throw DomainError("valuation is infinite");
    return value_;
}

std::string Valuation::to_string() const { return infinite_ ? "inf" : std::to_string(value_); }

bool is_prime(const BigInt& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

long integer_valuation(const BigInt& p, const BigInt& n) {
    if (n == 0) throw DomainError("valuation of zero integer");
    BigInt rest;
    return static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

Valuation padic_valuation(const BigInt& p, const Rational& q) {
    if (!is_prime(p)) throw DomainError(p.get_str() + " is not prime");
    if (sgn(q) == 0) return Valuation::infinity();
    return Valuation::finite(integer_valuation(p, q.get_num()) - integer_valuation(p, q.get_den()));
}

Valuation padic_valuation(const BigInt& p, const ReducedRational& q) { return padic_valuation(p, q.value()); }

BigInt denominator_lcm(std::span<const ReducedRational> values) {
    BigInt l = 1;
    for (const auto& v : values) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.den().get_mpz_t());
    return l;
}

BigInt modular_inverse(const BigInt& a, const BigInt& m) {
    if (m <= 0) throw DomainError("modulus must be positive");
    if (m == 1) return 0;
    BigInt inv;
    if (mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw DomainError(a.get_str() + " is not invertible modulo " + m.get_str());
    if (inv < 0) inv += m;
    return inv;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
    std::vector<std::uint64_t> out;
    if (bound < 2) return out;
    std::vector<bool> composite(bound + 1, false);
    for (std::uint64_t i = 2; i <= bound; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
    }
    return out;
}

BigInt next_prime(const BigInt& n) {
    BigInt r;
    mpz_nextprime(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

namespace {

// Brent's variant of Pollard rho; n odd composite.
BigInt pollard_rho(const BigInt& n) {
    for (unsigned long c = 1;; ++c) {
        BigInt y = 2, x, g = 1, q = 1, ys;
        auto f = [&](const BigInt& v) { return BigInt((v * v + c) % n); };
        unsigned long r = 1;
        constexpr unsigned long m = 64;
        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = f(y);
            unsigned long k = 0;
            do {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = (q * abs(x - y)) % n;
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                BigInt d = abs(x - ys);
                mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void split_into(const BigInt& n, std::map<BigInt, long>& acc) {
    if (n == 1) return;
    if (is_prime(n)) {
        ++acc[n];
        return;
    }
    const BigInt d = pollard_rho(n);
    split_into(d, acc);
    split_into(BigInt(n / d), acc);
}

} // namespace

std::vector<PrimePower> factor_integer(const BigInt& n) {
    if (n == 0) throw DomainError("cannot factor zero");
    BigInt rest = abs(n);
    std::map<BigInt, long> acc;
    for (unsigned long p : primes_up_to(1000)) {
        const BigInt bp(p);
        if (mpz_divisible_ui_p(rest.get_mpz_t(), p)) acc[bp] = integer_valuation(bp, rest);
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) rest /= p;
    }
    split_into(rest, acc);
    std::vector<PrimePower> out;
    for (auto& [p, e] : acc) out.push_back({p, e});
    return out;
}

BigInt rational_mod(const Rational& q, const BigInt& p) {
    BigInt num = q.get_num() % p;
    if (num < 0) num += p;
    const BigInt inv = modular_inverse(BigInt(q.get_den() % p), p);
    return BigInt((num * inv) % p);
}

} // namespace puiseux
