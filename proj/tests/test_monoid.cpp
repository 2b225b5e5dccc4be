#include <doctest.h>

#include <set>

#include "puiseux/errors.hpp"
#include "puiseux/kernels.hpp"
#include "support.hpp"

using namespace puiseux;
using namespace testing_support;

namespace {

MonoidSpec fg(std::vector<ReducedRational> g) { return MonoidSpec::finitely_generated(std::move(g)); }
MonoidSpec pr_tail() { return MonoidSpec::prime_reciprocal({{1, 2}, {1, 3}}, true); }
MonoidSpec powers23() { return MonoidSpec::prime_power_pair(2, 3); }

ReducedRational sum(const Factorization& z) {
    ReducedRational s;
    for (const auto& [a, k] : z) s += a.times(k);
    return s;
}

} // namespace

TEST_CASE("family validation") {
    CHECK_THROWS_AS(fg({rr(0)}), ValidationError);
    CHECK_THROWS_AS(MonoidSpec::prime_reciprocal({{1, 2}, {3, 2}}, false), ValidationError);
    CHECK_THROWS_AS(MonoidSpec::prime_reciprocal({{2, 2}}, false), ValidationError);
    CHECK_THROWS_AS(MonoidSpec::prime_reciprocal({{1, 4}}, false), ValidationError);
    CHECK_THROWS_AS(MonoidSpec::prime_power_pair(2, 2), ValidationError);
    CHECK_THROWS_AS(MonoidSpec::biprime_divisible(2, 9), ValidationError);
    CHECK_THROWS_AS(MonoidSpec::prime_power_reciprocal(1), ValidationError);
}

TEST_CASE("membership examples") {
    CHECK(contains(powers23(), rr(5, 6)));
    CHECK_FALSE(contains(powers23(), rr(1, 6)));
    CHECK(contains(powers23(), rr(0)));
    CHECK(contains(fg({rr(2, 3)}), rr(0)));
    CHECK_FALSE(contains(fg({rr(1, 2), rr(1, 3)}), rr(1, 6)));
    CHECK(contains(pr_tail(), rr(13, 6)));
    CHECK_THROWS_AS(contains(fg({rr(1)}), Rational(-1)), DomainError);
}

TEST_CASE("membership in the dense families") {
    CHECK(contains(MonoidSpec::qnonneg(), rr(17, 99)));
    CHECK(contains(MonoidSpec::prime_power_reciprocal(3), rr(5, 27)));
    CHECK_FALSE(contains(MonoidSpec::prime_power_reciprocal(3), rr(5, 6)));
    CHECK(contains(MonoidSpec::biprime_divisible(2, 3), rr(7, 72)));
    CHECK_FALSE(contains(MonoidSpec::biprime_divisible(2, 3), rr(1, 10)));
    // Without a tail only the listed primes may appear in denominators.
    const MonoidSpec pr = MonoidSpec::prime_reciprocal({{1, 2}, {2, 5}}, false);
    CHECK(contains(pr, rr(2, 5)));
    CHECK_FALSE(contains(pr, rr(1, 5)));
    CHECK_FALSE(contains(pr, rr(1, 3)));
    CHECK(contains(pr_tail(), rr(1, 7)));
    // 1/35 = 3/5 + 3/7 - 1 needs a negative integer part; 12/35 = 1/5 + 1/7.
    CHECK_FALSE(contains(pr_tail(), rr(1, 35)));
    CHECK(contains(pr_tail(), rr(12, 35)));
}

TEST_CASE("membership agrees with coefficient enumeration") {
    const std::vector<std::vector<Frac>> specs{
        {{2, 3}, {3, 4}}, {{1, 2}, {1, 3}}, {{5, 7}}, {{3, 1}, {5, 1}}, {{4, 5}, {6, 7}, {9, 2}}};
    for (const auto& gens : specs) {
        std::vector<ReducedRational> g;
        for (const auto& f : gens) g.push_back(rr(f.num, f.den));
        const MonoidSpec m = fg(g);
        for (long d = 1; d <= 60; ++d)
            for (long n = 0; n <= 60; ++n) {
                const ReducedRational x = rr(n, d);
                REQUIRE(contains(m, x) == fg_contains_oracle(gens, frac_norm(n, d)));
            }
    }
}

TEST_CASE("digit decomposition") {
    const Decomposition d = decompose(pr_tail(), rr(13, 6));
    CHECK(d.integer_part == 1);
    REQUIRE(d.digits.size() == 2);
    CHECK(d.digits[0].generator == rr(1, 2));
    CHECK(d.digits[0].coefficient == 1);
    CHECK(d.digits[1].generator == rr(1, 3));
    CHECK(d.digits[1].coefficient == 2);
    CHECK(d.value() == rr(13, 6));

    const Decomposition four = decompose(pr_tail(), rr(4));
    CHECK(four.integer_part == 4);
    CHECK(four.digits.empty());

    const Decomposition p = decompose(powers23(), rr(5, 6));
    CHECK(p.integer_part == 0);
    REQUIRE(p.digits.size() == 2);
    CHECK(p.digits[0].generator == rr(1, 2));
    CHECK(p.digits[0].coefficient == 1);
    CHECK(p.digits[1].generator == rr(1, 3));
    CHECK(p.digits[1].coefficient == 1);

    CHECK_THROWS_AS(decompose(powers23(), rr(1, 6)), NotMemberError);
    CHECK_THROWS_AS(decompose(MonoidSpec::qnonneg(), rr(1, 6)), UnsupportedFamilyError);
}

TEST_CASE("atoms") {
    const AtomsResult a = atoms(fg({rr(2, 3), rr(3, 4), rr(17, 12)}));
    CHECK(a.kind == AtomsResult::Kind::Finite);
    CHECK(a.atoms == std::vector<ReducedRational>{rr(2, 3), rr(3, 4)});
    CHECK(atoms(MonoidSpec::prime_power_reciprocal(2)).kind == AtomsResult::Kind::Antimatter);
    CHECK(atoms(fg({rr(1)})).atoms == std::vector<ReducedRational>{rr(1)});
    CHECK(atoms(pr_tail()).kind == AtomsResult::Kind::WithTail);
    CHECK(atoms(powers23()).kind == AtomsResult::Kind::Antimatter);
}

TEST_CASE("atom test") {
    CHECK(is_atom(fg({rr(1, 3), rr(1, 2), rr(1, 4), rr(1, 8)}), rr(1, 3)));
    CHECK_FALSE(is_atom(MonoidSpec::qnonneg(), rr(1, 2)));
    CHECK_FALSE(is_atom(fg({rr(2), rr(3)}), rr(6)));
    CHECK(is_atom(fg({rr(2), rr(3)}), rr(3)));
    CHECK(is_atom(pr_tail(), rr(1, 7)));
    CHECK_FALSE(is_atom(pr_tail(), rr(1)));
}

TEST_CASE("divisibility") {
    CHECK(divides(powers23(), rr(1, 2), rr(5, 6)));
    CHECK(divides(powers23(), rr(0), rr(5, 6)));
    CHECK_FALSE(divides(fg({rr(2), rr(3)}), rr(3), rr(4)));
    CHECK_THROWS_AS(divides(powers23(), rr(1, 6), rr(5, 6)), DomainError);
}

TEST_CASE("factorizations and length sets") {
    const FactorizationSet six = factorizations(fg({rr(2), rr(3)}), rr(6));
    CHECK(six.lengths == std::set<BigInt>{2, 3});
    REQUIRE(six.factorizations.size() == 2);
    std::set<Factorization> expected{{{rr(2), 3}}, {{rr(3), 2}}};
    CHECK(std::set<Factorization>(six.factorizations.begin(), six.factorizations.end()) == expected);

    const FactorizationSet five = factorizations(fg({rr(1)}), rr(5));
    REQUIRE(five.factorizations.size() == 1);
    CHECK(five.factorizations[0] == Factorization{{rr(1), 5}});
    CHECK(five.lengths == std::set<BigInt>{5});

    CHECK_THROWS_AS(factorizations(fg({rr(2), rr(3)}), rr(1)), NotMemberError);
    CHECK_THROWS_AS(factorizations(MonoidSpec::qnonneg(), rr(1)), NoAtomsError);
}

TEST_CASE("factorizations use atoms and sum to the element") {
    const MonoidSpec m = fg({rr(2, 3), rr(3, 4), rr(5, 6), rr(17, 12)});
    for (long n = 0; n <= 40; ++n) {
        const ReducedRational x = rr(n, 12);
        if (!contains(m, x)) continue;
        const FactorizationSet fs = factorizations(m, x);
        CHECK_FALSE(fs.factorizations.empty());
        for (const auto& z : fs.factorizations) {
            CHECK(sum(z) == x);
            for (const auto& [a, k] : z) CHECK(is_atom(m, a));
        }
    }
    const MonoidSpec truncated = truncate(pr_tail(), 7);
    const FactorizationSet fs = factorizations(truncated, rr(13, 6));
    for (const auto& z : fs.factorizations) CHECK(sum(z) == rr(13, 6));
}

TEST_CASE("root closure") {
    CHECK(is_root_closed(MonoidSpec::qnonneg()));
    CHECK(is_root_closed(MonoidSpec::prime_power_reciprocal(5)));
    CHECK(is_root_closed(MonoidSpec::biprime_divisible(2, 3)));
    CHECK_FALSE(is_root_closed(powers23()));
    CHECK_FALSE(is_root_closed(fg({rr(1, 2), rr(1, 3)})));
    CHECK(is_root_closed(fg({rr(4, 7)})));
    CHECK(root_closure_fg(fg({rr(1, 2), rr(1, 3)})) == rr(1, 6));
    CHECK(root_closure_fg(fg({rr(2), rr(3)})) == rr(1));
    CHECK(root_closure_fg(fg({rr(1, 4)})) == rr(1, 4));
}

TEST_CASE("atomic, antimatter and the zero limit point") {
    CHECK(is_atomic(pr_tail()));
    CHECK(is_antimatter(powers23()));
    CHECK(is_atomic(fg({rr(5, 7)})));
    CHECK_FALSE(is_atomic(MonoidSpec::qnonneg()));
    CHECK(has_zero_limit_point(MonoidSpec::qnonneg()));
    CHECK_FALSE(has_zero_limit_point(fg({rr(5, 7), rr(2)})));
}

TEST_CASE("difference group") {
    const DifferenceGroup g = difference_group_generator(fg({rr(1, 2), rr(1, 3)}));
    CHECK(g.kind == DifferenceGroup::Kind::Cyclic);
    CHECK(g.generator == rr(1, 6));
    CHECK(difference_group_generator(powers23()).to_string() == "DenseBiPrime(2,3)");
    CHECK(difference_group_generator(fg({rr(1)})).generator == rr(1));
    CHECK(difference_group_generator(MonoidSpec::qnonneg()).kind == DifferenceGroup::Kind::AllRationals);
}

TEST_CASE("divisibility chains") {
    const std::vector<ReducedRational> good{rr(13, 6), rr(1, 2), rr(0)};
    CHECK(verify_divisibility_chain(pr_tail(), good).valid);

    const std::vector<ReducedRational> flat{rr(1, 2), rr(1, 2)};
    const ChainReport f = verify_divisibility_chain(pr_tail(), flat);
    CHECK_FALSE(f.valid);
    CHECK(f.violation_step == 1);

    const std::vector<ReducedRational> bad{rr(7), rr(3), rr(2)};
    const ChainReport b = verify_divisibility_chain(fg({rr(2), rr(3)}), bad);
    CHECK_FALSE(b.valid);
    CHECK(b.violation_step == 2);
}

TEST_CASE("denominator primes") {
    CHECK(denominator_prime_set(MonoidSpec::prime_power_reciprocal(2), 10) == std::vector<std::uint64_t>{2});
    CHECK(denominator_prime_set(MonoidSpec::qnonneg(), 10) == std::vector<std::uint64_t>{2, 3, 5, 7});
    CHECK(denominator_prime_set(MonoidSpec::prime_reciprocal({{1, 2}, {1, 5}}, false), 10) ==
          std::vector<std::uint64_t>{2, 5});
}

TEST_CASE("isomorphism with the naturals") {
    CHECK(is_isomorphic_to_naturals(fg({rr(3, 5)})));
    CHECK(is_isomorphic_to_naturals(fg({rr(3, 5), rr(6, 5)})));
    CHECK_FALSE(is_isomorphic_to_naturals(fg({rr(2), rr(3)})));
    CHECK_FALSE(is_isomorphic_to_naturals(MonoidSpec::qnonneg()));
    CHECK_THROWS_AS(is_isomorphic_to_naturals(fg({})), TrivialMonoidError);
}

TEST_CASE("printing the grammar form") {
    CHECK(powers23().to_string() == "powers: 2, 3");
    CHECK(pr_tail().to_string() == "pr: 1/2, 1/3; tail");
    CHECK(fg({rr(2, 3), rr(3, 4)}).to_string() == "fg: 2/3, 3/4");
}

TEST_CASE("divisibility is transitive on samples") {
    Rng rng(0xd1d);
    const std::vector<MonoidSpec> ms{fg({rr(2, 3), rr(3, 4)}), pr_tail(), powers23(), fg({rr(3), rr(5), rr(7)})};
    for (const auto& m : ms) {
        std::vector<ReducedRational> pool;
        for (long d : {1L, 2L, 3L, 4L, 6L, 12L})
            for (long n = 0; n <= 30; ++n)
                if (contains(m, rr(n, d))) pool.push_back(rr(n, d));
        for (int i = 0; i < 300; ++i) {
            const auto& y = rng.pick(pool);
            const auto& z = rng.pick(pool);
            const auto& w = rng.pick(pool);
            if (divides(m, y, z) && divides(m, z, w)) CHECK(divides(m, y, w));
        }
    }
}

TEST_CASE("root closure generator covers the monoid") {
    Rng rng(0xc105e);
    for (int i = 0; i < 30; ++i) {
        std::vector<ReducedRational> g;
        const int k = static_cast<int>(rng.range(1, 3));
        for (int j = 0; j < k; ++j) g.push_back(rr(rng.range(1, 12), rng.range(1, 12)));
        const MonoidSpec m = fg(g);
        const ReducedRational r = root_closure_fg(m);
        const MonoidSpec cyc = fg({r});
        for (const auto& x : g) CHECK(contains(cyc, x));
        bool found = false;
        for (unsigned long n = 1; n <= 10000 && !found; ++n) found = contains(m, r.times(n));
        CHECK(found);
    }
}

TEST_CASE("prime reciprocal chains are bounded by the longest factorization") {
    // From x = 13/6, walk every strictly descending divisibility chain.
    const MonoidSpec m = pr_tail();
    const ReducedRational x = rr(13, 6);
    std::vector<ReducedRational> below;
    for (long n = 0; n <= 13; ++n)
        if (contains(m, rr(n, 6))) below.push_back(rr(n, 6));
    std::map<ReducedRational, int> longest;
    for (const auto& y : below) {
        int best = 0;
        for (const auto& z : below)
            if (z < y && divides(m, z, y)) best = std::max(best, longest[z] + 1);
        longest[y] = best;
    }
    const FactorizationSet fs = factorizations(truncate(m, 3), x);
    CHECK(BigInt(longest[x]) <= *fs.lengths.rbegin());
}

TEST_CASE("batch membership kernel matches its serial twin") {
    const MonoidSpec m = fg({rr(2, 3), rr(3, 4)});
    std::vector<ReducedRational> xs;
    for (long d = 1; d <= 12; ++d)
        for (long n = 0; n <= 60; ++n) xs.push_back(rr(n, d));
    const auto parallel = kernels::contains_batch(m, xs);
    CHECK(parallel == kernels::contains_batch_serial(m, xs));
    for (std::size_t i = 0; i < xs.size(); ++i) CHECK(static_cast<bool>(parallel[i]) == contains(m, xs[i]));
}

TEST_CASE("first-match kernel matches its serial twin") {
    for (std::size_t n : {0u, 1u, 17u, 1000u}) {
        auto pred = [](std::size_t i) { return i % 7 == 5 && i > 20; };
        CHECK(kernels::find_first(n, pred) == kernels::find_first_serial(n, pred));
    }
    CHECK_THROWS_AS(kernels::find_first(100, [](std::size_t i) -> bool {
                        if (i == 50) throw DomainError("boom");
                        return false;
                    }),
                    DomainError);
}
