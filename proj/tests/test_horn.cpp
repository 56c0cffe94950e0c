#include <catch2/catch_amalgamated.hpp>

#include "rlp/horn.hpp"

using namespace rlp;

namespace {

// Minimal Horn pair of the two-binary-independents model.
HornPair independencePair() {
    HornPair pair;
    pair.H = IntMatrix::fromRows({{1, 1, 0, 0},
                                  {0, 0, 1, 1},
                                  {1, 0, 1, 0},
                                  {0, 1, 0, 1},
                                  {-2, -2, -2, -2}});
    pair.lambda = {Rat(4), Rat(4), Rat(4), Rat(4)};
    return pair;
}

// The same map before row reduction: separate -1 rows per factor, unit lambda.
HornPair independenceRaw() {
    HornPair pair;
    pair.H = IntMatrix::fromRows({{1, 1, 0, 0},
                                  {0, 0, 1, 1},
                                  {1, 0, 1, 0},
                                  {0, 1, 0, 1},
                                  {-1, -1, -1, -1},
                                  {-1, -1, -1, -1}});
    pair.lambda = {Rat(1), Rat(1), Rat(1), Rat(1)};
    return pair;
}

std::vector<Rat> rats(std::initializer_list<long> xs) {
    std::vector<Rat> v;
    for (long x : xs) v.push_back(Rat(x));
    return v;
}

}  // namespace

TEST_CASE("horn_eval on the independence pair") {
    auto pair = independencePair();
    CHECK(horn_eval(pair, rats({1, 1, 1, 1})) ==
          std::vector<Rat>{Rat(1, 4), Rat(1, 4), Rat(1, 4), Rat(1, 4)});
    CHECK(horn_eval(pair, rats({2, 1, 1, 2})) ==
          std::vector<Rat>{Rat(1, 4), Rat(1, 4), Rat(1, 4), Rat(1, 4)});
    CHECK(horn_eval(pair, rats({3, 1, 1, 1})) ==
          std::vector<Rat>{Rat(4, 9), Rat(2, 9), Rat(2, 9), Rat(1, 9)});
}

TEST_CASE("horn_eval flags vanishing linear forms") {
    HornPair pair;
    pair.H = IntMatrix::fromRows({{1, -1}, {-1, 1}});
    pair.lambda = {Rat(1), Rat(1)};
    CHECK_THROWS_AS(horn_eval(pair, rats({2, 2})), ZeroBase);
}

TEST_CASE("validator accepts the independence pair") {
    auto result = validate_horn_pair(independencePair(), 100, 0);
    CHECK(result.ok);
    CHECK(result.samplesRun == 100);
}

TEST_CASE("validator rejects a rescaled lambda") {
    auto pair = independencePair();
    for (auto& l : pair.lambda) l *= 2;
    auto result = validate_horn_pair(pair, 20, 0);
    CHECK(!result.ok);
    CHECK(result.counterexample.has_value());
    CHECK(result.failure.find("sum") != std::string::npos);
}

TEST_CASE("minimality certificates") {
    auto pair = independencePair();
    CHECK(is_minimal(pair.H).isMinimal);

    IntMatrix withZero = pair.H;
    withZero.appendRow({0, 0, 0, 0});
    auto certZ = is_minimal(withZero);
    CHECK(!certZ.isMinimal);
    REQUIRE(certZ.zeroRow.has_value());
    CHECK(*certZ.zeroRow == 5);

    auto raw = independenceRaw();
    auto certR = is_minimal(raw.H);
    CHECK(!certR.isMinimal);
    REQUIRE(certR.dependentRows.has_value());
    CHECK(*certR.dependentRows == std::make_pair<std::size_t, std::size_t>(4, 5));
}

TEST_CASE("minimize merges the duplicated negative rows") {
    auto reduced = minimize(independenceRaw());
    auto target = independencePair();
    CHECK(reduced.H.rowSorted() == target.H.rowSorted());
    CHECK(reduced.lambda == target.lambda);
    CHECK(is_minimal(reduced.H).isMinimal);
}

TEST_CASE("minimize is idempotent and preserves the map") {
    auto pair = independencePair();
    auto once = minimize(pair);
    CHECK(once.H == pair.H);
    CHECK(once.lambda == pair.lambda);

    auto raw = independenceRaw();
    auto reduced = minimize(raw);
    CHECK(minimize(reduced).H == reduced.H);

    Rng rng(42);
    for (int trial = 0; trial < 50; ++trial) {
        auto u = random_positive_counts(4, 1, 100, rng);
        std::vector<Rat> ur(u.begin(), u.end());
        CHECK(horn_eval(raw, ur) == horn_eval(reduced, ur));
    }
}

TEST_CASE("minimize drops cancelling collinear rows and keeps column sums zero") {
    // append +r and -r for a fresh direction; they must cancel away
    HornPair pair = independencePair();
    IntMatrix H = pair.H;
    H.appendRow({5, 1, 2, 0});
    H.appendRow({-5, -1, -2, 0});
    HornPair padded{H, pair.lambda};
    auto reduced = minimize(padded);
    CHECK(reduced.H.rowSorted() == pair.H.rowSorted());
    CHECK(reduced.H.columnSumsZero());
    Rng rng(9);
    for (int trial = 0; trial < 20; ++trial) {
        auto u = random_positive_counts(4, 1, 60, rng);
        std::vector<Rat> ur(u.begin(), u.end());
        CHECK(horn_eval(padded, ur) == horn_eval(reduced, ur));
    }
}

TEST_CASE("positive part") {
    auto pair = independencePair();
    auto pos = positive_part(pair.H);
    REQUIRE(pos.rows() == 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) CHECK(pos.at(i, j) == pair.H.at(i, j));

    auto neg = negative_part(pair.H);
    REQUIRE(neg.rows() == 1);
    CHECK(neg.at(0, 0) == BigInt(-2));

    IntMatrix mixed = IntMatrix::fromRows({{1, -1}, {-1, 1}});
    CHECK_THROWS_AS(positive_part(mixed), MixedSignRow);
}

TEST_CASE("validated pairs sum to one on every sample") {
    auto pair = independencePair();
    Rng rng(123);
    for (int trial = 0; trial < 50; ++trial) {
        auto u = random_positive_counts(4, 1, 100, rng);
        std::vector<Rat> ur(u.begin(), u.end());
        auto p = horn_eval(pair, ur);
        Rat total(0);
        for (const auto& x : p) {
            CHECK(x.sign() > 0);
            total += x;
        }
        CHECK(total == Rat(1));
    }
}
