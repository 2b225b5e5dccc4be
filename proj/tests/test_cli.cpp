#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "puiseux/cli.hpp"
#include "puiseux/errors.hpp"
#include "puiseux/parser.hpp"
#include "support.hpp"

using namespace puiseux;
using namespace testing_support;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

bool has_line(const Run& r, const std::string& line) { return r.out.find(line + "\n") != std::string::npos; }

} // namespace

TEST_CASE("monoid grammar") {
    const MonoidSpec a = parse_monoid("powers: 2, 3");
    REQUIRE(a.is<PrimePowerPair>());
    CHECK(a.as<PrimePowerPair>().p == 2);
    CHECK(a.as<PrimePowerPair>().q == 3);

    const MonoidSpec b = parse_monoid("pr: 1/2, 1/3; tail");
    REQUIRE(b.is<PrimeReciprocal>());
    CHECK(b.as<PrimeReciprocal>().tail);
    CHECK(b.as<PrimeReciprocal>().pairs.size() == 2);

    const MonoidSpec c = parse_monoid("fg: 2/3, 3/4, 17/12");
    REQUIRE(c.is<FinitelyGenerated>());
    CHECK(c.as<FinitelyGenerated>().generators.size() == 3);
    CHECK(parse_monoid("fg: 4/6").as<FinitelyGenerated>().generators[0] == rr(2, 3));

    CHECK(parse_monoid("qplus").is<QNonneg>());
    CHECK(parse_monoid("ppr: 7").as<PrimePowerReciprocal>().p == 7);
    CHECK(parse_monoid("biprime:2,3").is<BiPrimeDivisible>());
    CHECK(parse_monoid("pr: tail").as<PrimeReciprocal>().tail);
    CHECK(parse_monoid("pr: ; tail").as<PrimeReciprocal>().pairs.empty());
    CHECK_FALSE(parse_monoid("pr: 1/5").as<PrimeReciprocal>().tail);
}

TEST_CASE("monoid grammar errors") {
    try {
        parse_monoid("powers: 2; 3");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 9);
    }
    CHECK_THROWS_AS(parse_monoid("rationals"), ParseError);
    CHECK_THROWS_AS(parse_monoid("ppr: 2 extra"), ParseError);
    CHECK_THROWS_AS(parse_monoid("fg: 1/0"), ParseError);
    CHECK_THROWS_AS(parse_monoid("powers: 4, 3"), ValidationError);
    CHECK_THROWS_AS(parse_monoid("pr: 1/2, 1/2"), ValidationError);
}

TEST_CASE("polynomial grammar") {
    const Field Q = Field::rationals();
    const PuiseuxPoly f = parse_poly("X^(3/2) + 2*X^(1/2) + 2", Q);
    CHECK(f.size() == 3);
    CHECK(f.degree() == rr(3, 2));
    CHECK(parse_poly("X^(1/3) + 1", Field::prime(2)).size() == 2);
    CHECK(parse_poly("X + X", Field::prime(2)).is_zero());
    CHECK(parse_poly("-X^2 + 1/2*X - 3", Q).to_string() == "-X^2 + 1/2*X - 3");
    CHECK(parse_poly("X + -1", Q).to_string() == "X - 1");
    CHECK_THROWS_AS(parse_poly("X - -1", Q), ParseError);
    CHECK(parse_poly("0", Q).is_zero());
    CHECK(parse_poly("X^(4/6)", Q).degree() == rr(2, 3));
    CHECK(parse_poly("5", Field::prime(3)).to_string() == "2");
}

TEST_CASE("polynomial grammar errors") {
    const Field Q = Field::rationals();
    try {
        parse_poly("X^(-1/2) + 1", Q);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 3);
    }
    CHECK_THROWS_AS(parse_poly("X^-2", Q), ParseError);
    CHECK_THROWS_AS(parse_poly("", Q), ParseError);
    CHECK_THROWS_AS(parse_poly("X +", Q), ParseError);
    CHECK_THROWS_AS(parse_poly("2 X", Q), ParseError);
    CHECK_THROWS_AS(parse_poly("Y", Q), ParseError);
}

TEST_CASE("print and parse round trip") {
    Rng rng(0x7e47);
    for (const Field& field : {Field::rationals(), Field::prime(2), Field::prime(7)}) {
        for (int i = 0; i < 300; ++i) {
            std::vector<Term> terms;
            for (int k = 0; k < rng.range(0, 5); ++k)
                terms.push_back({rr(rng.range(0, 20), rng.range(1, 9)), Rational(rng.range(-30, 30), field.is_prime_field() ? 1 : rng.range(1, 6))});
            const PuiseuxPoly f = PuiseuxPoly::canonicalize(std::move(terms), field);
            CHECK(parse_poly(f.to_string(), field) == f);
        }
    }
}

TEST_CASE("documented command examples") {
    const Run member = run({"member", "powers: 2, 3", "1/6"});
    CHECK(member.code == 1);
    CHECK(has_line(member, "member: false"));

    const Run irr = run({"irreducible", "--field", "Q", "qplus", "X^(1/2) - 1", "--bound", "4"});
    CHECK(irr.code == 1);
    CHECK(has_line(irr, "status: reducible"));
    CHECK(has_line(irr, "witness_left: X^(1/4) - 1"));
    CHECK(has_line(irr, "witness_right: X^(1/4) + 1"));

    const Run eis = run({"eisenstein", "--p", "2", "X^(5/7) + 2"});
    CHECK(eis.code == 0);
    CHECK(has_line(eis, "applies: true"));
}

TEST_CASE("exit-code contract") {
    CHECK(run({"member", "powers: 2, 3", "5/6"}).code == 0);
    CHECK(run({"divides", "powers: 2, 3", "1/2", "5/6"}).code == 0);
    CHECK(run({"member", "powers: 2, 3"}).code == 2);
    CHECK(run({"nonsense"}).code == 2);
    CHECK(run({"member", "powers: 4, 3", "1/2"}).code == 2);
    CHECK(run({"member", "powers: 2, 3", "x"}).code == 2);
    CHECK(run({"content", "--field", "F7", "X"}).code == 2);
    CHECK(run({"divides", "powers: 2, 3", "1/6", "5/6"}).code == 3);
    CHECK(run({"decompose", "qplus", "1/6"}).code == 3);
    CHECK(run({"factor", "ppr: 2", "X - 1", "--depth", "3"}).code == 4);
    CHECK(run({"irreducible", "fg: 2, 3", "X^2 - 1"}).code == 4);
    CHECK(run({"irreducible", "qplus", "X^(1/3) + 2"}).code == 0);
    CHECK(run({"primitive", "2*X + 4"}).code == 1);
    CHECK(run({"chain-verify", "fg: 2, 3", "7", "3", "2"}).code == 1);
}

TEST_CASE("commands produce their keys") {
    const Run f = run({"factor", "--field", "Fp:2", "--depth", "5", "biprime: 2, 3", "X^(1/3) + 1"});
    CHECK(f.code == 0);
    CHECK(has_line(f, "status: no_atomic_factorization"));
    CHECK(has_line(f, "frobenius_certificate: true"));

    const Run z = run({"factorizations", "fg: 2, 3", "6"});
    CHECK(has_line(z, "lengths: {2, 3}"));
    CHECK(has_line(z, "factorization: 3 + 3"));
    CHECK(has_line(z, "factorization: 2 + 2 + 2"));

    const Run d = run({"decompose", "pr: 1/2, 1/3; tail", "13/6"});
    CHECK(has_line(d, "integer_part: 1"));
    CHECK(has_line(d, "digit: 2 * 1/3 (mod 3)"));

    const Run info = run({"monoid-info", "powers: 2, 3"});
    CHECK(has_line(info, "root_closed: false"));
    CHECK(has_line(info, "antimatter: true"));
    CHECK(has_line(info, "gp_generator: DenseBiPrime(2,3)"));

    CHECK(has_line(run({"inflate", "--m", "6", "X^(1/2) + X^(1/3)"}), "inflated: X^3 + X^2"));
    CHECK(has_line(run({"frobenius-root", "--field", "Fp:3", "biprime: 3, 5", "X + 1"}), "root: X^(1/3) + 1"));
    CHECK(has_line(run({"content", "6*X^(1/2) + 4*X^(1/3) + 2"}), "content: 2"));
    CHECK(has_line(run({"atoms", "fg: 2/3, 3/4, 17/12"}), "atom: 3/4"));

    const Run u = run({"uufd-check", "X - 1", "--z1", "X^(1/2) - 1; X^(1/2) + 1", "--z2", "2*X^(1/2) + 2; X^(1/2) - 1"});
    CHECK(u.code == 0);
    CHECK(has_line(u, "uufd: true"));
}

TEST_CASE("stdin and structured output") {
    const Run r = run({"content", "-"}, "6*X^(1/2) + 4\n");
    CHECK(has_line(r, "content: 2"));

    const Run s = run({"--structured", "member", "powers: 2, 3", "1/6"});
    CHECK(s.code == 1);
    const auto j = nlohmann::json::parse(s.out);
    CHECK(j["member"] == false);

    const Run e = run({"member", "--structured", "powers: 4, 3", "1/2"});
    CHECK(nlohmann::json::parse(e.out)["error"] == "validation");

    // Stable across runs.
    const std::vector<std::string> args{"--structured", "--depth", "2", "--bound", "4", "factor", "qplus", "X^2 - 1"};
    CHECK(run(args).out == run(args).out);
}
