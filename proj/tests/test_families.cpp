#include <catch2/catch_amalgamated.hpp>

#include <map>

#include "rlp/families.hpp"
#include "rlp/tree_geometry.hpp"

using namespace rlp;

namespace {

Point pt(std::initializer_list<long> xs) {
    Point p;
    for (long x : xs) p.push_back(BigInt(x));
    return p;
}

std::map<std::vector<int>, BigInt> coefficientMap(const MPoly& f,
                                                  const std::vector<std::string>& symbols) {
    MPoly g = f.reindexed(symbols);
    std::map<std::vector<int>, BigInt> m;
    for (const auto& [e, c] : g.terms()) {
        REQUIRE(denom(c) == 1);
        m[e] = numer(c);
    }
    return m;
}

/// Permutes the columns of `pair` so they follow `targetPoints`.
HornPair alignColumns(const HornPair& pair, const std::vector<Point>& atomPoints,
                      const std::vector<Point>& targetPoints) {
    REQUIRE(atomPoints.size() == targetPoints.size());
    std::map<Point, std::size_t> where;
    for (std::size_t j = 0; j < atomPoints.size(); ++j) where[atomPoints[j]] = j;
    std::vector<std::size_t> order;
    for (const auto& p : targetPoints) order.push_back(where.at(p));
    HornPair out;
    out.H = pair.H.selectColumns(order);
    for (std::size_t j : order) out.lambda.push_back(pair.lambda[j]);
    return out;
}

std::vector<Rat> rats(std::initializer_list<long> xs) {
    std::vector<Rat> v;
    for (long x : xs) v.push_back(Rat(x));
    return v;
}

}  // namespace

TEST_CASE("trapezoid family weights match the generating polynomial") {
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b)
            for (int d = 0; d <= 3; ++d) {
                auto fam = pair_2d({a, b, d});
                auto coefs = coefficientMap(family_poly_2d({a, b, d}), {"s", "t"});
                REQUIRE(fam.points.size() == fam.weights.size());
                REQUIRE(fam.points.size() == coefs.size());
                for (std::size_t m = 0; m < fam.points.size(); ++m) {
                    std::vector<int> e;
                    for (const auto& x : fam.points[m]) e.push_back(static_cast<int>(x));
                    CHECK(coefs.at(e) == fam.weights[m]);
                }
            }

    auto trapex = pair_2d({1, 2, 1});
    std::vector<BigInt> expected = {1, 1, 2, 4, 2, 1, 3, 3, 1};
    CHECK(trapex.weights == expected);
    CHECK(trapex.points.front() == pt({0, 2}));
    CHECK(trapex.points.back() == pt({3, 0}));
}

TEST_CASE("prismatoid family weights match the generating polynomial") {
    std::vector<Params3D> sweep = {{1, 1, 1, 1, 1, 1}, {1, 0, 1, 0, 1, 1}, {2, 1, 2, 0, 1, 1},
                                   {2, 2, 1, 1, 0, 2}, {0, 0, 2, 1, 2, 1}, {1, 1, 1, 1, 1, 2}};
    for (const auto& p : sweep) {
        auto fam = pair_3d(p);
        auto coefs = coefficientMap(family_poly_3d(p), {"s", "t", "v"});
        REQUIRE(fam.points.size() == coefs.size());
        for (std::size_t m = 0; m < fam.points.size(); ++m) {
            std::vector<int> e;
            for (const auto& x : fam.points[m]) e.push_back(static_cast<int>(x));
            auto it = coefs.find(e);
            REQUIRE(it != coefs.end());
            CHECK(it->second == fam.weights[m]);
        }
    }
}

TEST_CASE("trapezoid Horn pair: shape, golden column, validity") {
    auto pair = horn_2d({1, 2, 1});
    REQUIRE(pair.H.rows() == 6);
    REQUIRE(pair.H.cols() == 9);
    // column of the lattice point (0,0), sixth in the family order
    std::vector<BigInt> col;
    for (std::size_t i = 0; i < 6; ++i) col.push_back(pair.H.at(i, 5));
    CHECK(col == std::vector<BigInt>{0, 0, 3, 2, -3, -2});
    CHECK(validate_horn_pair(pair, 100, 1).ok);
}

TEST_CASE("trapezoid Horn pair coincides with the tree pair") {
    for (auto [a, b, d] : {std::array<int, 3>{1, 2, 1}, {2, 1, 2}, {1, 1, 0}, {0, 2, 1},
                           {3, 1, 1}, {2, 0, 1}}) {
        auto fam = horn_2d({a, b, d});
        auto tree = tree_horn_pair(tree_2d({a, b, d}));
        CHECK(minimize(fam).H.rowSorted() == minimize(tree).H.rowSorted());
        CHECK(minimize(fam).lambda == minimize(tree).lambda);
    }
}

TEST_CASE("2D reduction matches the collection-extended distance matrix") {
    // equality of the reduced Horn matrix and reduced M over a parameter sweep
    for (auto [a, b, d] : {std::array<int, 3>{1, 1, 1}, {1, 2, 1}, {2, 1, 2}, {2, 3, 0},
                           {0, 2, 1}, {3, 0, 0}, {0, 3, 1}}) {
        auto fam = pair_2d({a, b, d});
        auto pp = family_polytope(fam.points);
        auto mm = matrix_M(pp.poly);
        CHECK(mm.isHorn);
        CHECK(minimize(horn_2d({a, b, d})).H.rowSorted() == reduce_rows(mm.M).rowSorted());
    }
}

TEST_CASE("triangles with slope >= 2 separate the two matrices") {
    // For a = 0 and d >= 2 the polytope is a triangle whose collection-derived
    // matrix defines a different rational map: the reduced Horn matrix keeps a
    // negative multiple of the top-edge row that M cannot produce.
    auto fam = pair_2d({0, 1, 2});
    auto pp = family_polytope(fam.points);
    auto mm = matrix_M(pp.poly);
    CHECK(mm.isHorn);
    auto reducedHorn = minimize(horn_2d({0, 1, 2}));
    CHECK(is_minimal(reducedHorn.H).isMinimal);
    CHECK(is_minimal(mm.M).isMinimal);
    CHECK(reducedHorn.H.rows() == 5);
    CHECK(mm.M.rows() == 4);
    CHECK(reducedHorn.H.rowSorted() != reduce_rows(mm.M).rowSorted());
    // both are Horn matrices, but only the reduced pair realizes the model
    CHECK(validate_horn_pair(reducedHorn, 50, 2).ok);
}

TEST_CASE("prismatoid Horn pair validates and matches its tree") {
    std::vector<Params3D> sweep = {{1, 1, 1, 1, 1, 1}, {1, 0, 1, 1, 1, 1}, {1, 1, 1, 0, 1, 1},
                                   {1, 0, 1, 0, 1, 1}, {2, 1, 2, 0, 1, 2}, {2, 2, 1, 1, 0, 1},
                                   {0, 0, 2, 1, 1, 1}};
    for (const auto& p : sweep) {
        auto pair = horn_3d(p);
        CHECK(pair.H.columnSumsZero());
        CHECK(validate_horn_pair(pair, 30, 3).ok);

        auto tree = tree_3d(p);
        CHECK(atom_points_3d(tree) == pair_3d(p).points);
        auto treePair = tree_horn_pair(tree);
        CHECK(treePair.lambda == pair.lambda);
        CHECK(minimize(treePair).H.rowSorted() == minimize(pair).H.rowSorted());
        CHECK(minimize(treePair).lambda == minimize(pair).lambda);
    }
}

TEST_CASE("dilation: squaring the generating polynomial doubles the trapezoid") {
    MPoly f121 = family_poly_2d({1, 2, 1});
    auto sq = coefficientMap(f121 * f121, {"s", "t"});
    auto fam = pair_2d({2, 4, 1});
    REQUIRE(fam.points.size() == sq.size());
    for (std::size_t m = 0; m < fam.points.size(); ++m) {
        std::vector<int> e;
        for (const auto& x : fam.points[m]) e.push_back(static_cast<int>(x));
        CHECK(sq.at(e) == fam.weights[m]);
    }
    CHECK(validate_horn_pair(horn_2d({2, 4, 1}), 30, 4).ok);
}

TEST_CASE("strict linear precision holds exactly for simplices and boxes") {
    auto simplex = simplex_pair(2, 2);
    auto ppS = family_polytope(simplex.points);
    auto checkS = strict_linear_precision_check(ppS.poly, simplex.weights);
    CHECK(checkS.nPZero);
    CHECK(checkS.betaConstant);
    CHECK(*checkS.c == Rat(4));  // b^b for b = 2

    auto box = product_pair(segment_pair(2), segment_pair(3));
    auto ppB = family_polytope(box.points);
    auto checkB = strict_linear_precision_check(ppB.poly, box.weights);
    CHECK(checkB.nPZero);
    CHECK(checkB.betaConstant);
    CHECK(*checkB.c == Rat(4 * 27));  // a^a b^b

    auto prism = product_pair(simplex_pair(2, 2), segment_pair(1));
    auto ppP = family_polytope(prism.points);
    auto checkP = strict_linear_precision_check(ppP.poly, prism.weights);
    CHECK(checkP.nPZero);
    CHECK(checkP.betaConstant);
    CHECK(*checkP.c == Rat(4));
}

TEST_CASE("the trapezoid is not strict") {
    auto fam = pair_2d({1, 2, 1});
    auto pp = family_polytope(fam.points);
    auto check = strict_linear_precision_check(pp.poly, fam.weights);
    CHECK(!check.nPZero);
    CHECK(!check.betaConstant);
}

TEST_CASE("rational blending functions: partition of unity and linear precision") {
    Rng rng(6);
    for (auto [a, b, d] : {std::array<int, 3>{1, 2, 1}, {2, 1, 2}, {2, 2, 0}, {0, 2, 1}}) {
        auto fam = pair_2d({a, b, d});
        for (int trial = 0; trial < 20; ++trial) {
            // interior rational point: positive random mixture of lattice points
            std::vector<Rat> p(2, Rat(0));
            Rat total(0);
            for (std::size_t m = 0; m < fam.points.size(); ++m) {
                Rat w(rng.randInt(1, 9));
                total += w;
                for (int c = 0; c < 2; ++c) p[c] += w * Rat(fam.points[m][c]);
            }
            for (auto& x : p) x /= total;

            auto beta = blending_rational_2d({a, b, d}, p);
            Rat sum(0);
            std::vector<Rat> moment(2, Rat(0));
            for (std::size_t m = 0; m < beta.size(); ++m) {
                sum += beta[m];
                for (int c = 0; c < 2; ++c) moment[c] += beta[m] * Rat(fam.points[m][c]);
            }
            CHECK(sum == Rat(1));
            CHECK(moment == p);
        }
    }
}

TEST_CASE("rational blending at the sample point matches the closed form") {
    // at (s,t) = (1,1) the denominators specialize to 4 * 2^(3-j)
    auto fam = pair_2d({1, 2, 1});
    auto beta = blending_rational_2d({1, 2, 1}, {Rat(1), Rat(1)});
    for (std::size_t m = 0; m < fam.points.size(); ++m) {
        long j = static_cast<long>(fam.points[m][1]);
        CHECK(beta[m] == Rat(fam.weights[m]) / (Rat(4) * rat_pow(Rat(2), 3 - j)));
    }
}

TEST_CASE("3D blending functions: partition of unity and linear precision") {
    Rng rng(8);
    std::vector<Params3D> sweep = {{1, 1, 1, 1, 1, 1}, {1, 0, 1, 0, 1, 1}, {1, 1, 1, 0, 1, 1},
                                   {0, 0, 1, 1, 1, 1}};
    for (const auto& params : sweep) {
        auto fam = pair_3d(params);
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<Rat> p(3, Rat(0));
            Rat total(0);
            for (std::size_t m = 0; m < fam.points.size(); ++m) {
                Rat w(rng.randInt(1, 9));
                total += w;
                for (int c = 0; c < 3; ++c) p[c] += w * Rat(fam.points[m][c]);
            }
            for (auto& x : p) x /= total;

            auto beta = blending_rational_3d(params, p);
            Rat sum(0);
            std::vector<Rat> moment(3, Rat(0));
            for (std::size_t m = 0; m < beta.size(); ++m) {
                sum += beta[m];
                for (int c = 0; c < 3; ++c) moment[c] += beta[m] * Rat(fam.points[m][c]);
            }
            CHECK(sum == Rat(1));
            CHECK(moment == p);
        }
    }
}

TEST_CASE("blending hits the boundary guard when a pair form vanishes") {
    // a = 0, d = 1: the form h1+h3 = b - t vanishes on the top edge
    CHECK_THROWS_AS(blending_rational_2d({0, 2, 1}, {Rat(0), Rat(2)}), BoundaryPoint);
}

TEST_CASE("toric blending functions form a partition of unity") {
    auto fam = pair_2d({1, 2, 1});
    auto pp = family_polytope(fam.points);
    auto beta = blending_toric(pp.poly, fam.weights, {Rat(1, 2), Rat(1, 2)});
    Rat sum(0);
    for (const auto& x : beta) sum += x;
    CHECK(sum == Rat(1));

    // strict pair: toric blending itself has linear precision
    auto simplex = simplex_pair(3, 2);
    auto ppS = family_polytope(simplex.points);
    std::vector<Rat> q = {Rat(1, 3), Rat(1, 5)};
    auto betaS = blending_toric(ppS.poly, simplex.weights, q);
    std::vector<Rat> moment(2, Rat(0));
    for (std::size_t m = 0; m < betaS.size(); ++m)
        for (int c = 0; c < 2; ++c) moment[c] += betaS[m] * Rat(simplex.points[m][c]);
    CHECK(moment == q);
}

TEST_CASE("golden minimal matrix: pyramid of unit height") {
    // from the ternary-root tree; columns follow its traversal order
    auto t = tree_pyramid_b1(1, 1);
    auto reduced = minimize(tree_horn_pair(t));
    IntMatrix expected = IntMatrix::fromRows({{1, 1, 1, 0, 0, 0},
                                              {0, 0, 0, 1, 1, 0},
                                              {0, 0, 0, 0, 0, 1},
                                              {2, 1, 0, 1, 0, 0},
                                              {0, 1, 2, 0, 1, 0},
                                              {-1, -1, -1, -1, -1, -1},
                                              {-2, -2, -2, -1, -1, 0}});
    CHECK(reduced.H == expected);  // raw pair already minimal, order preserved
    CHECK(reduced.lambda == std::vector<Rat>{Rat(-1), Rat(-2), Rat(-1), Rat(1), Rat(1), Rat(-1)});

    // the binary-stage tree of the same polytope reduces to the same pair
    auto generic = tree_3d({1, 0, 1, 0, 1, 1});
    auto genericReduced = minimize(tree_horn_pair(generic));
    auto aligned = alignColumns(genericReduced, atom_points_3d(generic), atom_points_star(t));
    CHECK(aligned.H.rowSorted() == expected.rowSorted());
    CHECK(aligned.lambda == reduced.lambda);
}

TEST_CASE("golden minimal matrix: wedge of unit height") {
    auto t = tree_wedge_b1(1, 1, 1);
    auto reduced = minimize(tree_horn_pair(t));
    // frozen reference, columns keyed by lattice point
    std::vector<Point> refOrder = {pt({0, 0, 0}), pt({2, 0, 0}), pt({0, 1, 0}),
                                       pt({1, 1, 0}), pt({0, 0, 1}), pt({1, 0, 1}),
                                       pt({1, 0, 0})};
    IntMatrix expected = IntMatrix::fromRows({{1, 1, 0, 0, 0, 0, 1},
                                              {0, 0, 1, 1, 0, 0, 0},
                                              {0, 0, 0, 0, 1, 1, 0},
                                              {2, 0, 1, 0, 1, 0, 1},
                                              {0, 2, 0, 1, 0, 1, 1},
                                              {-1, -1, -1, -1, -1, -1, -1},
                                              {-2, -2, -1, -1, -1, -1, -2}});
    std::vector<Rat> expectedLambda = {Rat(-1), Rat(-1), Rat(1), Rat(1),
                                       Rat(1),  Rat(1),  Rat(-2)};
    auto aligned = alignColumns(reduced, atom_points_star(t), refOrder);
    CHECK(aligned.H.rowSorted() == expected.rowSorted());
    CHECK(aligned.lambda == expectedLambda);

    // binary-stage representation of the same wedge
    auto generic = tree_3d({1, 1, 1, 0, 1, 1});
    auto genericReduced = minimize(tree_horn_pair(generic));
    auto alignedGeneric =
        alignColumns(genericReduced, atom_points_3d(generic), refOrder);
    CHECK(alignedGeneric.H.rowSorted() == expected.rowSorted());
    CHECK(alignedGeneric.lambda == expectedLambda);
}

TEST_CASE("golden minimal matrix: pyramid of height one over the b=2 trapezoid") {
    auto t = tree_3d({1, 0, 2, 0, 1, 1});
    auto reduced = minimize(tree_horn_pair(t));
    std::vector<Point> refOrder = {pt({0, 0, 0}), pt({1, 0, 0}), pt({2, 0, 0}),
                                       pt({3, 0, 0}), pt({0, 2, 0}), pt({1, 2, 0}),
                                       pt({0, 1, 0}), pt({1, 1, 0}), pt({2, 1, 0}),
                                       pt({0, 0, 1})};
    // one frozen entry fixed up so the columns sum to zero
    IntMatrix expected = IntMatrix::fromRows({
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 1},
        {0, 0, 0, 0, 2, 2, 1, 1, 1, 0},
        {2, 2, 2, 2, 0, 0, 1, 1, 1, 0},
        {3, 2, 1, 0, 1, 0, 2, 1, 0, 0},
        {0, 1, 2, 3, 0, 1, 0, 1, 2, 0},
        {-1, -1, -1, -1, -1, -1, -1, -1, -1, -1},
        {-1, -1, -1, -1, -1, -1, -1, -1, -1, 0},
        {-3, -3, -3, -3, -1, -1, -2, -2, -2, 0}});
    CHECK(expected.columnSumsZero());
    auto aligned = alignColumns(reduced, atom_points_3d(t), refOrder);
    CHECK(aligned.H.rowSorted() == expected.rowSorted());
    CHECK(reduced.H.rows() == 8);
    CHECK(reduced.H.cols() == 10);
}

TEST_CASE("golden minimal matrix: wedge of height one over the b=2 trapezoid") {
    auto t = tree_3d({1, 1, 2, 0, 1, 1});
    auto reduced = minimize(tree_horn_pair(t));
    std::vector<Point> refOrder = {pt({0, 0, 0}), pt({1, 0, 0}), pt({2, 0, 0}),
                                       pt({3, 0, 0}), pt({0, 1, 0}), pt({1, 1, 0}),
                                       pt({2, 1, 0}), pt({0, 2, 0}), pt({1, 2, 0}),
                                       pt({0, 0, 1}), pt({1, 0, 1})};
    IntMatrix expected = IntMatrix::fromRows({
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1},
        {2, 2, 2, 2, 1, 1, 1, 0, 0, 0, 0},
        {0, 0, 0, 0, 1, 1, 1, 2, 2, 0, 0},
        {3, 2, 1, 0, 2, 1, 0, 1, 0, 1, 0},
        {0, 1, 2, 3, 0, 1, 2, 0, 1, 0, 1},
        {-1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1},
        {-1, -1, -1, -1, -1, -1, -1, -1, -1, 0, 0},
        {-3, -3, -3, -3, -2, -2, -2, -1, -1, -1, -1}});
    CHECK(expected.columnSumsZero());
    auto aligned = alignColumns(reduced, atom_points_3d(t), refOrder);
    CHECK(aligned.H.rowSorted() == expected.rowSorted());
    CHECK(reduced.H.rows() == 8);
    CHECK(reduced.H.cols() == 11);
}

TEST_CASE("catalog representatives all match their rows") {
    for (const auto& [name, params] : catalog_representatives()) {
        auto result = catalog_check(params);
        INFO(name);
        CHECK(result.subfamily == name);
        CHECK(result.match);
    }
}

TEST_CASE("catalog rejects unclassifiable parameters") {
    CHECK_THROWS_AS(catalog_check({0, 0, 2, 1, 0, 1}), UnclassifiedParams);  // a = d = 0
    CHECK_THROWS_AS(catalog_check({2, 1, 0, 0, 1, 1}), UnclassifiedParams);  // b = 0
}

TEST_CASE("tree variant validation") {
    CHECK_THROWS_AS(family_tree_3d({1, 1, 1, 1, 1, 1}, TreeVariant::A2), InvalidVariant);
    CHECK_THROWS_AS(family_tree_3d({1, 0, 2, 0, 1, 1}, TreeVariant::StarPyramid), InvalidVariant);
    CHECK_THROWS_AS(parse_tree_variant("A9"), InvalidVariant);
    CHECK(family_tree_3d({1, 0, 1, 0, 1, 1}, TreeVariant::StarPyramid).atomCount() == 6);
    CHECK(family_tree_3d({1, 1, 1, 1, 1, 1}, TreeVariant::A1).atomCount() ==
          pair_3d({1, 1, 1, 1, 1, 1}).points.size());
}

TEST_CASE("horn evaluation of the family pair equals the tree estimate") {
    Params3D p{1, 1, 1, 0, 1, 1};
    auto pair = horn_3d(p);
    auto tree = tree_3d(p);
    Rng rng(10);
    for (int trial = 0; trial < 10; ++trial) {
        auto u = random_positive_counts(tree.atomCount(), 1, 40, rng);
        std::vector<Rat> ur(u.begin(), u.end());
        CHECK(rational_mle(tree, u).probs == horn_eval(pair, ur));
    }
}

TEST_CASE("subfamilies whose collection matrix realizes the model") {
    // for these parameter patterns the reduced family pair equals the
    // collection-extended distance matrix, and the pair built from M with the
    // reduced coefficients is a valid Horn pair
    std::vector<Params3D> members = {
        {2, 1, 1, 0, 1, 1},  // trapezoidal wedge, b = 1
        {1, 0, 2, 1, 0, 1},  // tensor wedge a2 = 0 with a = 1
        {2, 1, 1, 0, 0, 1},  // tensor wedge b2 = 0 with b = 1
        {0, 0, 1, 0, 1, 1},  // 3D simplex
        {0, 0, 2, 1, 1, 1},  // triangular frustum with d = 1
        {2, 1, 3, 1, 0, 1},  // tensor product frustum, generic
        {2, 1, 2, 1, 1, 1},  // trapezoidal frustum, generic
    };
    for (const auto& p : members) {
        auto fam = pair_3d(p);
        auto mm = matrix_M(family_polytope(fam.points).poly);
        REQUIRE(mm.isHorn);
        auto reduced = minimize(horn_3d(p));
        CHECK(reduced.H.rowSorted() == reduce_rows(mm.M).rowSorted());
        // same row multiset, columns already in family order: the reduced
        // coefficients make M itself a valid pair
        HornPair viaM{reduce_rows(mm.M), reduced.lambda};
        CHECK(validate_horn_pair(viaM, 30, 11).ok);
    }

    // excluded case: wedge with b = 2 has a different minimal matrix than M
    auto fam = pair_3d({1, 1, 2, 0, 1, 1});
    auto mm = matrix_M(family_polytope(fam.points).poly);
    CHECK(mm.isHorn);
    CHECK(minimize(horn_3d({1, 1, 2, 0, 1, 1})).H.rowSorted() !=
          reduce_rows(mm.M).rowSorted());
}

TEST_CASE("positive part of the reduced 3D pair is the distance matrix") {
    std::vector<Params3D> sweep;
    for (int a = 0; a <= 1; ++a)
        for (int a2 = 0; a2 <= a; ++a2)
            for (int b = 0; b <= 1; ++b)
                for (int b2 = 0; b2 <= b; ++b2)
                    for (int d = 0; d <= 1; ++d)
                        for (int l = 1; l <= 2; ++l) sweep.push_back({a, a2, b, b2, d, l});
    sweep.push_back({2, 1, 2, 1, 1, 1});
    sweep.push_back({2, 0, 2, 0, 2, 1});
    sweep.push_back({2, 2, 2, 2, 0, 1});
    sweep.push_back({0, 0, 2, 1, 2, 1});
    for (const auto& p : sweep) {
        auto fam = pair_3d(p);
        if (fam.points.size() < 2) continue;
        auto pos = positive_part(minimize(horn_3d(p)).H);
        auto ldm = lattice_distance_matrix(family_polytope(fam.points).poly);
        INFO(p.a << p.a2 << p.b << p.b2 << p.d << p.l);
        CHECK(pos.rowSorted() == ldm.rowSorted());
    }
}

TEST_CASE("the raw trapezoid pair is the collection-extended matrix itself") {
    // for the full-dimensional trapezoid the six family rows are exactly the
    // four distance rows plus one negative row per primitive collection
    auto fam = pair_2d({1, 2, 1});
    auto mm = matrix_M(family_polytope(fam.points).poly);
    REQUIRE(mm.isHorn);
    CHECK(mm.M.rowSorted() == horn_2d({1, 2, 1}).H.rowSorted());
}
