#include <doctest.h>

#include "puiseux/errors.hpp"
#include "support.hpp"

using namespace puiseux;
using testing_support::rr;
using testing_support::Rng;

namespace {

// v_p(n) for a nonzero machine integer, by repeated division.
long naive_valuation(long p, long n) {
    long v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

bool naive_is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

} // namespace

TEST_CASE("reduce cancels common factors") {
    CHECK(rr(4, 6).to_string() == "2/3");
    CHECK(rr(4, 6).num() == 2);
    CHECK(rr(4, 6).den() == 3);
    const ReducedRational zero = rr(0, 5);
    CHECK(zero.num() == 0);
    CHECK(zero.den() == 1);
    CHECK(zero.to_string() == "0");
    CHECK(rr(13, 6).to_string() == "13/6");
}

TEST_CASE("reduce rejects a zero denominator") {
    CHECK_THROWS_AS(ReducedRational::reduce(1, 0), DomainError);
}

TEST_CASE("rational literals parse and print") {
    CHECK(ReducedRational::parse("6/4") == rr(3, 2));
    CHECK(ReducedRational::parse("7") == rr(7));
    CHECK(ReducedRational::parse("7").to_string() == "7");
    CHECK_THROWS_AS(ReducedRational::parse("1/"), DomainError);
    CHECK_THROWS_AS(ReducedRational::parse("-1/2"), DomainError);
    CHECK_THROWS_AS(ReducedRational::parse("1 /2"), DomainError);
}

TEST_CASE("subtraction stays inside the nonnegative rationals") {
    CHECK(checked_sub(rr(5, 6), rr(1, 2)) == rr(1, 3));
    CHECK_FALSE(checked_sub(rr(1, 2), rr(5, 6)).has_value());
}

TEST_CASE("p-adic valuation") {
    CHECK(padic_valuation(2, rr(13, 6)) == Valuation::finite(-1));
    CHECK(padic_valuation(5, rr(13, 6)) == Valuation::finite(0));
    CHECK(padic_valuation(3, rr(0)).is_infinite());
    CHECK(padic_valuation(3, rr(0)).to_string() == "inf");
    CHECK(padic_valuation(3, rr(18, 5)) == Valuation::finite(2));
    CHECK_THROWS_AS(padic_valuation(4, rr(1, 2)), DomainError);
}

TEST_CASE("valuation of a huge power") {
    const BigInt big = BigInt(3) * BigInt("1267650600228229401496703205376"); // 3 * 2^100
    CHECK(padic_valuation(2, ReducedRational::reduce(big, 7)) == Valuation::finite(100));
    CHECK(padic_valuation(2, ReducedRational::reduce(7, big)) == Valuation::finite(-100));
}

TEST_CASE("denominator lcm") {
    const std::vector<ReducedRational> a{rr(1, 2), rr(1, 3)};
    CHECK(denominator_lcm(a) == 6);
    CHECK(denominator_lcm(std::vector<ReducedRational>{}) == 1);
    const std::vector<ReducedRational> b{rr(3, 4), rr(5, 6), rr(2)};
    CHECK(denominator_lcm(b) == 12);
}

TEST_CASE("modular inverse") {
    CHECK(modular_inverse(3, 5) == 2);
    CHECK(modular_inverse(1, 7) == 1);
    CHECK(modular_inverse(10, 17) == 12);
    CHECK(modular_inverse(-3, 5) == 3);
    CHECK_THROWS_AS(modular_inverse(4, 8), DomainError);
    for (long m = 2; m < 40; ++m)
        for (long a = 1; a < m; ++a) {
            if (std::gcd(a, m) != 1) continue;
            long brute = 0;
            while ((a * brute) % m != 1) ++brute;
            CHECK(modular_inverse(a, m) == brute);
        }
}

TEST_CASE("prime sieve") {
    CHECK(primes_up_to(10) == std::vector<std::uint64_t>{2, 3, 5, 7});
    CHECK(primes_up_to(2) == std::vector<std::uint64_t>{2});
    const auto thirty = primes_up_to(30);
    CHECK(thirty.size() == 10);
    CHECK(thirty.back() == 29);
    std::vector<std::uint64_t> naive;
    for (long n = 2; n <= 2000; ++n)
        if (naive_is_prime(n)) naive.push_back(static_cast<std::uint64_t>(n));
    CHECK(primes_up_to(2000) == naive);
    for (long n = 0; n <= 2000; ++n) CHECK(is_prime(n) == naive_is_prime(n));
}

TEST_CASE("integer factorization multiplies back") {
    Rng rng(0x11);
    for (int i = 0; i < 200; ++i) {
        const BigInt n = BigInt(rng.range(2, 1L << 40)) * rng.range(1, 1000);
        BigInt back = 1;
        for (const auto& [p, e] : factor_integer(n)) {
            CHECK(is_prime(p));
            for (unsigned long k = 0; k < e; ++k) back *= p;
        }
        CHECK(back == n);
    }
}

TEST_CASE("valuation properties on random rationals") {
    Rng rng(0x5eed);
    const std::vector<long> primes{2, 3, 5, 7, 11};
    for (int i = 0; i < 500; ++i) {
        const long p = rng.pick(primes);
        const ReducedRational r = rr(rng.range(1, 5000), rng.range(1, 5000));
        const ReducedRational s = rr(rng.range(0, 5000), rng.range(1, 5000));
        if (!s.is_zero()) CHECK(padic_valuation(p, r * s) == padic_valuation(p, r) + padic_valuation(p, s));
        const Valuation lo = std::min(padic_valuation(p, r), padic_valuation(p, s));
        CHECK(lo <= padic_valuation(p, r + s));
        // Against the division oracle.
        CHECK(padic_valuation(p, r).value() ==
              naive_valuation(p, r.num().get_si()) - naive_valuation(p, r.den().get_si()));
        // Idempotent reduction.
        CHECK(ReducedRational::reduce(r.num(), r.den()) == r);
    }
}
