#include <catch2/catch_amalgamated.hpp>

#include "rlp/mpoly.hpp"
#include "rlp/rational.hpp"
#include "rlp/rng.hpp"

using namespace rlp;

namespace {

MPoly randomPoly(Rng& rng, const std::vector<std::string>& syms) {
    MPoly p(syms);
    long terms = rng.randInt(1, 5);
    for (long t = 0; t < terms; ++t) {
        std::vector<int> e(syms.size());
        for (auto& x : e) x = static_cast<int>(rng.randInt(0, 3));
        p.addTerm(e, Rat(rng.randInt(-6, 6), rng.randInt(1, 4)));
    }
    return p;
}

}  // namespace

TEST_CASE("rational parsing and printing") {
    CHECK(rat_to_string(parse_rat("3/6")) == "1/2");
    CHECK(rat_to_string(parse_rat("-4/2")) == "-2");
    CHECK(rat_to_string(Rat(0)) == "0");
    CHECK(parse_rat("7") == Rat(7));
    CHECK_THROWS_AS(parse_rat("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rat("x"), ParseError);
}

TEST_CASE("rational powers with 0^0 = 1") {
    CHECK(rat_pow(Rat(0), 0) == Rat(1));
    CHECK(rat_pow(Rat(2, 3), -2) == Rat(9, 4));
    CHECK(rat_pow(Rat(-2), 3) == Rat(-8));
    CHECK_THROWS_AS(rat_pow(Rat(0), -1), ZeroBase);
}

TEST_CASE("binomial and multinomial coefficients") {
    CHECK(binomial(5, 2) == BigInt(10));
    CHECK(binomial(3, 5) == BigInt(0));
    CHECK(multinomial({2, 1, 1}) == BigInt(12));
    CHECK(multinomial({0, 0}) == BigInt(1));
    // large enough to overflow 64-bit machine arithmetic
    CHECK(binomial(64, 32) == BigInt("1832624140942590534"));
    CHECK(binomial(100, 50) > BigInt("100000000000000000000000000"));
}

TEST_CASE("polynomial addition identities") {
    MPoly s0 = MPoly::variable("s0"), s1 = MPoly::variable("s1");
    MPoly s2 = MPoly::variable("s2"), s3 = MPoly::variable("s3");
    CHECK((s0 + s1) + MPoly::constant(Rat(0)) == s0 + s1);
    CHECK((s2 + s3) + (s2 - s3) == Rat(2) * s2);
}

TEST_CASE("trapezoid generating polynomial expands to the known weights") {
    MPoly s = MPoly::variable("s"), t = MPoly::variable("t");
    MPoly one = MPoly::constant(Rat(1));
    MPoly f = (one + s) * (one + s + t).pow(2);

    const std::vector<std::pair<std::vector<int>, int>> expected = {
        {{0, 2}, 1}, {{1, 2}, 1}, {{0, 1}, 2}, {{1, 1}, 4}, {{2, 1}, 2},
        {{0, 0}, 1}, {{1, 0}, 3}, {{2, 0}, 3}, {{3, 0}, 1}};
    CHECK(f.terms().size() == expected.size());
    MPoly g({"s", "t"});
    for (const auto& [e, c] : expected) g.addTerm(e, Rat(c));
    CHECK(f == g);

    CHECK(f.eval({{"s", Rat(1)}, {"t", Rat(1)}}) == Rat(18));
}

TEST_CASE("multiplication and powers") {
    MPoly s2 = MPoly::variable("s2"), s3 = MPoly::variable("s3");
    MPoly sq = (s2 + s3).pow(2);
    MPoly manual({"s2", "s3"});
    manual.addTerm({2, 0}, Rat(1));
    manual.addTerm({1, 1}, Rat(2));
    manual.addTerm({0, 2}, Rat(1));
    CHECK(sq == manual);

    MPoly s0 = MPoly::variable("s0"), s1 = MPoly::variable("s1");
    MPoly lin = s0 + s1 + s2;
    CHECK(lin.pow(1) == lin);
    CHECK(lin.pow(0) == MPoly::constant(Rat(1)));

    // (1+s)((1+s)+t) expanded matches the small trapezoid polynomial
    MPoly s = MPoly::variable("s"), t = MPoly::variable("t");
    MPoly one = MPoly::constant(Rat(1));
    MPoly f111 = (one + s).pow(1) * ((one + s).pow(1) + t).pow(1);
    MPoly byHand({"s", "t"});
    byHand.addTerm({0, 0}, Rat(1));
    byHand.addTerm({1, 0}, Rat(2));
    byHand.addTerm({2, 0}, Rat(1));
    byHand.addTerm({0, 1}, Rat(1));
    byHand.addTerm({1, 1}, Rat(1));
    CHECK(f111 == byHand);
    CHECK(f111.terms().size() == 5);
}

TEST_CASE("evaluation") {
    MPoly s0 = MPoly::variable("s0"), s1 = MPoly::variable("s1");
    CHECK((s0 + s1).eval({{"s0", Rat(1, 3)}, {"s1", Rat(2, 3)}}) == Rat(1));
    CHECK(MPoly::constant(Rat(1)).eval({}) == Rat(1));
    // 0^0 = 1 inside monomials
    MPoly m = MPoly::monomial(Rat(5), {"x"}, {0});
    CHECK(m.eval({{"x", Rat(0)}}) == Rat(5));
}

TEST_CASE("ring laws on random polynomials") {
    Rng rng(7);
    std::vector<std::string> syms = {"x", "y"};
    for (int trial = 0; trial < 30; ++trial) {
        MPoly p = randomPoly(rng, syms), q = randomPoly(rng, syms), r = randomPoly(rng, syms);
        CHECK((p + q) * r == p * r + q * r);
        CHECK(p * q == q * p);
        CHECK((p * q) * r == p * (q * r));
    }
}

TEST_CASE("power additivity") {
    Rng rng(11);
    std::vector<std::string> syms = {"x", "y"};
    for (int trial = 0; trial < 8; ++trial) {
        MPoly p = randomPoly(rng, syms);
        for (long a = 0; a <= 5; ++a)
            for (long b = 0; a + b <= 5; ++b)
                CHECK(p.pow(a + b) == p.pow(a) * p.pow(b));
    }
}

TEST_CASE("canonical form: equal maps serialize identically") {
    Rng rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        MPoly p = randomPoly(rng, {"x", "y", "z"});
        // rebuild with permuted symbol order
        MPoly q({"z", "x", "y"});
        for (const auto& [e, c] : p.terms()) q.addTerm({e[2], e[0], e[1]}, c);
        CHECK(p == q);
        CHECK(p.toString() == q.toString());
    }
    MPoly a({"x", "y"});
    a.addTerm({1, 0}, Rat(1));
    MPoly b({"x", "y"});
    b.addTerm({1, 0}, Rat(1));
    b.addTerm({0, 1}, Rat(1));
    CHECK(a.toString() != b.toString());
}

TEST_CASE("substitution expands exactly") {
    MPoly x = MPoly::variable("x"), y = MPoly::variable("y");
    MPoly p = x * x - y;  // x^2 - y
    std::map<std::string, MPoly> sub = {{"x", MPoly::variable("u") + MPoly::constant(Rat(1))},
                                        {"y", MPoly::variable("u")}};
    MPoly got = p.substitute(sub);
    MPoly expected({"u"});
    expected.addTerm({2}, Rat(1));
    expected.addTerm({1}, Rat(1));
    expected.addTerm({0}, Rat(1));
    CHECK(got == expected);
}
