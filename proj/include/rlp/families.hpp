#ifndef RLP_FAMILIES_HPP
#define RLP_FAMILIES_HPP

#include <array>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "rlp/horn.hpp"
#include "rlp/mpoly.hpp"
#include "rlp/polytope.hpp"
#include "rlp/staged_tree.hpp"

namespace rlp {

struct Params2D {
    int a = 0, b = 0, d = 0;
};

struct Params3D {
    int a = 0, a2 = 0, b = 0, b2 = 0, d = 0, l = 1;

    void check() const {
        if (a < 0 || a2 < 0 || b < 0 || b2 < 0 || d < 0) throw Error("params: negative entry");
        if (a2 > a || b2 > b) throw Error("params: a2 <= a and b2 <= b required");
        if (l < 1) throw Error("params: l >= 1 required");
    }
};

/// Affine form <coeffs, x> + constant on the ambient space.
struct AffineForm {
    std::vector<BigInt> coeffs;
    BigInt constant;

    BigInt evalInt(const Point& p) const {
        BigInt v = constant;
        for (std::size_t c = 0; c < coeffs.size(); ++c) v += coeffs[c] * p[c];
        return v;
    }
    Rat evalRat(const std::vector<Rat>& p) const {
        Rat v(constant);
        for (std::size_t c = 0; c < coeffs.size(); ++c) v += Rat(coeffs[c]) * p[c];
        return v;
    }
    AffineForm operator+(const AffineForm& other) const {
        AffineForm f = *this;
        for (std::size_t c = 0; c < coeffs.size(); ++c) f.coeffs[c] += other.coeffs[c];
        f.constant += other.constant;
        return f;
    }
};

/// The four edge distance functions of the trapezoid family:
/// h1 = s, h2 = t, h3 = a + db - s - dt, h4 = b - t.
inline std::array<AffineForm, 4> forms_2d(const Params2D& p) {
    return {AffineForm{{1, 0}, 0}, AffineForm{{0, 1}, 0},
            AffineForm{{-1, BigInt(-p.d)}, BigInt(p.a + p.d * p.b)},
            AffineForm{{0, -1}, BigInt(p.b)}};
}

/// The six face distance functions of the prismatoid family.
inline std::array<AffineForm, 6> forms_3d(const Params3D& p) {
    BigInt top = BigInt(p.a + p.d * p.b);
    BigInt slope = top - BigInt(p.a2 + p.d * p.b2);
    return {AffineForm{{1, 0, 0}, 0},
            AffineForm{{0, 1, 0}, 0},
            AffineForm{{0, 0, 1}, 0},
            AffineForm{{-1, BigInt(-p.d), -slope}, top * p.l},
            AffineForm{{0, -1, BigInt(-(p.b - p.b2))}, BigInt(p.b) * p.l},
            AffineForm{{0, 0, -1}, BigInt(p.l)}};
}

struct WeightedPoints {
    std::vector<Point> points;
    std::vector<BigInt> weights;
};

/// Lattice points of the trapezoid T_{a,b,d} in the standard order (second
/// coordinate descending, first ascending) with the binomial-product weights
/// of (1+s)^a ((1+s)^d + t)^b.
inline WeightedPoints pair_2d(const Params2D& p) {
    if (p.a < 0 || p.b < 0 || p.d < 0) throw Error("pair_2d: negative parameter");
    WeightedPoints out;
    for (int j = p.b; j >= 0; --j) {
        int rowLen = p.a + p.d * (p.b - j);
        for (int i = 0; i <= rowLen; ++i) {
            out.points.push_back({BigInt(i), BigInt(j)});
            out.weights.push_back(binomial(p.b, j) * binomial(rowLen, i));
        }
    }
    return out;
}

/// Lattice points and weights of the prismatoid family: coefficients of
/// (f_{a,b,d} + v f_{a2,b2,d})^l, indexed by height, then the trapezoid order
/// per layer mixed across the two generating trapezoids.
inline WeightedPoints pair_3d(const Params3D& p) {
    p.check();
    WeightedPoints out;
    long top = p.a + p.d * p.b, top2 = p.a2 + p.d * p.b2;
    for (int k = 0; k <= p.l; ++k) {
        long deg1 = static_cast<long>(p.b) * p.l - static_cast<long>(p.b - p.b2) * k;
        for (long j = deg1; j >= 0; --j) {
            long deg2 = top * p.l - (top - top2) * k - static_cast<long>(p.d) * j;
            for (long i = 0; i <= deg2; ++i) {
                out.points.push_back({BigInt(i), BigInt(j), BigInt(k)});
                out.weights.push_back(binomial(p.l, k) * binomial(deg1, j) * binomial(deg2, i));
            }
        }
    }
    return out;
}

/// f_{a,b,d}(s,t) = (1+s)^a ((1+s)^d + t)^b, expanded.
inline MPoly family_poly_2d(const Params2D& p) {
    MPoly s = MPoly::variable("s"), t = MPoly::variable("t");
    MPoly one = MPoly::constant(Rat(1));
    return (one + s).pow(p.a) * ((one + s).pow(p.d) + t).pow(p.b);
}

/// (f_{a,b,d} + v f_{a2,b2,d})^l, expanded in s, t, v.
inline MPoly family_poly_3d(const Params3D& p) {
    MPoly v = MPoly::variable("v");
    MPoly base = family_poly_2d({p.a, p.b, p.d}) +
                 v * family_poly_2d({p.a2, p.b2, p.d});
    return base.pow(p.l);
}

inline std::vector<std::string> horn_2d_row_labels() {
    return {"h1", "h2", "h3", "h4", "-(h1+h3)", "-(h2+h4)"};
}

/// Horn pair of the trapezoid family: rows h1..h4 and the two primitive
/// negative rows -(h1+h3), -(h2+h4), with signed binomial coefficients.
inline HornPair horn_2d(const Params2D& p) {
    auto pts = pair_2d(p);
    auto h = forms_2d(p);
    std::size_t n = pts.points.size();
    HornPair pair;
    pair.H = IntMatrix(6, n);
    pair.lambda.resize(n);
    for (std::size_t m = 0; m < n; ++m) {
        const Point& pt = pts.points[m];
        BigInt h13(0), h24(0);
        for (int g = 0; g < 4; ++g) pair.H.at(g, m) = h[g].evalInt(pt);
        h13 = pair.H.at(0, m) + pair.H.at(2, m);
        h24 = pair.H.at(1, m) + pair.H.at(3, m);
        pair.H.at(4, m) = -h13;
        pair.H.at(5, m) = -h24;
        bool odd = ((h13 + h24) % 2) != 0;
        pair.lambda[m] = Rat(pts.weights[m]) * (odd ? -1 : 1);
    }
    pair.check();
    return pair;
}

inline std::vector<std::string> horn_3d_row_labels() {
    return {"h1", "h2", "h3", "h4", "h5", "h6", "-(h1+h4)", "-(h2+h5)", "-(h3+h6)"};
}

/// Horn pair of the prismatoid family: rows h1..h6 and the three negative
/// rows -(h1+h4), -(h2+h5), -(h3+h6).
inline HornPair horn_3d(const Params3D& p) {
    auto pts = pair_3d(p);
    auto h = forms_3d(p);
    std::size_t n = pts.points.size();
    HornPair pair;
    pair.H = IntMatrix(9, n);
    pair.lambda.resize(n);
    for (std::size_t m = 0; m < n; ++m) {
        const Point& pt = pts.points[m];
        BigInt total(0);
        for (int g = 0; g < 6; ++g) {
            pair.H.at(g, m) = h[g].evalInt(pt);
            total += pair.H.at(g, m);
        }
        pair.H.at(6, m) = -(pair.H.at(0, m) + pair.H.at(3, m));
        pair.H.at(7, m) = -(pair.H.at(1, m) + pair.H.at(4, m));
        pair.H.at(8, m) = -(pair.H.at(2, m) + pair.H.at(5, m));
        bool odd = (total % 2) != 0;
        pair.lambda[m] = Rat(pts.weights[m]) * (odd ? -1 : 1);
    }
    pair.check();
    return pair;
}

/// Hull with facet presentation of a weighted family point set, projecting to
/// the affine hull first when the set is lower-dimensional. The given point
/// order is kept for the lattice point list.
inline ProjectedPolytope family_polytope(const std::vector<Point>& points) {
    IntMatrix diffs;
    for (std::size_t i = 1; i < points.size(); ++i)
        diffs.appendRow(detail::sub(points[i], points[0]));
    std::size_t r = points.size() > 1 ? rank_q(diffs) : 0;
    if (r == points[0].size()) {
        ProjectedPolytope pp;
        pp.poly = hull_facets(points, static_cast<int>(r), points);
        pp.embedding.origin.assign(points[0].size(), BigInt(0));
        for (std::size_t k = 0; k < points[0].size(); ++k) {
            Point e(points[0].size(), BigInt(0));
            e[k] = 1;
            pp.embedding.basis.push_back(e);
        }
        pp.projectedInput = points;
        return pp;
    }
    return project_and_hull(points, true);
}

struct StrictCheck {
    bool nPZero = false;
    bool betaConstant = false;
    std::optional<Rat> c;
};

/**
 * Decides strict linear precision of a weighted polytope: the facet normals
 * must sum to zero and the weighted distance-product polynomial
 * beta_w = sum_j w_j prod_i h_i(x)^{h_i(m_j)} must be a nonzero constant.
 */
inline StrictCheck strict_linear_precision_check(const LatticePolytope& P,
                                                 const std::vector<BigInt>& w) {
    if (w.size() != P.points.size()) throw Error("strict check: weight count mismatch");
    StrictCheck out;
    Point nSum(P.dim, BigInt(0));
    for (const auto& f : P.facets)
        for (int c = 0; c < P.dim; ++c) nSum[c] += f.normal[c];
    out.nPZero = is_zero_vector(nSum);

    std::vector<std::string> syms;
    for (int c = 0; c < P.dim; ++c) syms.push_back("x" + std::to_string(c));
    std::vector<MPoly> hPoly;
    for (const auto& f : P.facets) {
        MPoly g = MPoly::constant(Rat(f.offset), syms);
        for (int c = 0; c < P.dim; ++c) {
            std::vector<int> e(P.dim, 0);
            e[c] = 1;
            g.addTerm(e, Rat(f.normal[c]));
        }
        hPoly.push_back(g);
    }
    MPoly beta(syms);
    for (std::size_t j = 0; j < P.points.size(); ++j) {
        auto exps = lattice_distance_int(P, P.points[j]);
        MPoly term = MPoly::constant(Rat(w[j]), syms);
        for (std::size_t i = 0; i < hPoly.size(); ++i)
            if (!exps[i].is_zero()) term = term * hPoly[i].pow(static_cast<long>(exps[i]));
        beta = beta + term;
    }
    out.betaConstant = beta.isConstant() && !beta.isZero();
    if (out.betaConstant) out.c = beta.constantValue();
    return out;
}

/// Toric blending functions w_j beta_j / beta_w at an interior rational point.
inline std::vector<Rat> blending_toric(const LatticePolytope& P, const std::vector<BigInt>& w,
                                       const std::vector<Rat>& p) {
    auto h = lattice_distance(P, p);
    std::vector<Rat> beta(P.points.size());
    Rat total(0);
    for (std::size_t j = 0; j < P.points.size(); ++j) {
        auto exps = lattice_distance_int(P, P.points[j]);
        Rat value(w[j]);
        for (std::size_t i = 0; i < h.size(); ++i) {
            long e = static_cast<long>(exps[i]);
            if (e == 0) continue;
            value *= rat_pow(h[i], e);  // nonnegative exponents only
        }
        beta[j] = value;
        total += value;
    }
    if (total.is_zero()) throw BoundaryPoint("blending_toric: beta_w vanishes at the point");
    for (auto& b : beta) b /= total;
    return beta;
}

namespace detail {

/// lambda_j * prod_g bases[g]^{H[g][j]} for every column; the evaluation form
/// shared by the explicit blending functions of both families.
inline std::vector<Rat> blending_from_rows(const HornPair& pair, const std::vector<Rat>& bases) {
    std::vector<Rat> out(pair.H.cols());
    for (std::size_t j = 0; j < pair.H.cols(); ++j) {
        Rat value = pair.lambda[j];
        for (std::size_t g = 0; g < bases.size(); ++g) {
            long e = static_cast<long>(pair.H.at(g, j));
            if (e == 0) continue;
            if (bases[g].is_zero()) {
                if (e > 0) {
                    value = Rat(0);
                    continue;
                }
                throw BoundaryPoint("blending: zero distance with negative exponent");
            }
            value *= rat_pow(bases[g], e);
        }
        out[j] = value;
    }
    return out;
}

}  // namespace detail

/// The family's linear-precision blending functions at a rational point.
/// Bases are the signed row forms: the paired rows contribute negative values
/// whose signs cancel against the signs in lambda, leaving positive weights
/// on the interior.
inline std::vector<Rat> blending_rational_2d(const Params2D& params, const std::vector<Rat>& p) {
    auto pair = horn_2d(params);
    auto h = forms_2d(params);
    std::vector<Rat> bases(6);
    for (int g = 0; g < 4; ++g) bases[g] = h[g].evalRat(p);
    bases[4] = -(bases[0] + bases[2]);
    bases[5] = -(bases[1] + bases[3]);
    return detail::blending_from_rows(pair, bases);
}

inline std::vector<Rat> blending_rational_3d(const Params3D& params, const std::vector<Rat>& p) {
    auto pair = horn_3d(params);
    auto h = forms_3d(params);
    std::vector<Rat> bases(9);
    for (int g = 0; g < 6; ++g) bases[g] = h[g].evalRat(p);
    bases[6] = -(bases[0] + bases[3]);
    bases[7] = -(bases[1] + bases[4]);
    bases[8] = -(bases[2] + bases[5]);
    return detail::blending_from_rows(pair, bases);
}

// ---------------------------------------------------------------------------
// Staged tree representations
// ---------------------------------------------------------------------------

namespace detail {

/// Drops declared-but-unused stages (possible after contracting degree-0
/// florets) and builds the tree over the remaining ones.
inline StagedTree build_compact(const std::vector<std::vector<std::string>>& stageSymbols,
                                NodeSpec root) {
    std::vector<bool> used(stageSymbols.size(), false);
    auto mark = [&](auto&& self, const NodeSpec& n) -> void {
        if (n.stage >= 0) used[n.stage] = true;
        for (const auto& c : n.children) self(self, c);
    };
    mark(mark, root);
    std::vector<int> remap(stageSymbols.size(), -1);
    std::vector<std::vector<std::string>> kept;
    for (std::size_t s = 0; s < stageSymbols.size(); ++s)
        if (used[s]) {
            remap[s] = static_cast<int>(kept.size());
            kept.push_back(stageSymbols[s]);
        }
    auto rewrite = [&](auto&& self, NodeSpec& n) -> void {
        if (n.stage >= 0) n.stage = remap[n.stage];
        for (auto& c : n.children) self(self, c);
    };
    rewrite(rewrite, root);
    return StagedTree::build(kept, root);
}

}  // namespace detail

/// Saturated model on three outcomes with b trials: a single floret.
inline StagedTree tree_2d_simplex(int b) {
    if (b < 1) throw Error("tree_2d_simplex: b >= 1 required");
    return StagedTree::build({{"s0", "s1", "s2"}}, NodeSpec::floret(0, b));
}

/// Two-level binary tree of the trapezoid family: root floret of degree b on
/// {s0,s1}; the child with s0-exponent j carries a floret of degree
/// a + d(b-j) on {s2,s3} (omitted when that degree is zero).
inline StagedTree tree_2d(const Params2D& p) {
    if (p.a < 0 || p.b < 0 || p.d < 0) throw Error("tree_2d: negative parameter");
    if (p.b == 0) {
        if (p.a == 0) throw Degenerate("tree_2d: empty model");
        return detail::build_compact({{"s0", "s1"}, {"s2", "s3"}}, NodeSpec::floret(1, p.a));
    }
    NodeSpec root = NodeSpec::floret(0, p.b);
    for (int j = p.b; j >= 0; --j) {
        int deg = p.a + p.d * (p.b - j);
        root.children.push_back(deg == 0 ? NodeSpec::leaf() : NodeSpec::floret(1, deg));
    }
    return detail::build_compact({{"s0", "s1"}, {"s2", "s3"}}, root);
}

/// Two independent binary observations; the smallest trapezoid tree.
inline StagedTree tree_independence() { return tree_2d({1, 1, 0}); }

/**
 * Three-level binary tree of the prismatoid family. The root floret has
 * degree l on {s0,s1}; a child with exponents (k0,k1) carries a floret of
 * degree b*k0 + b2*k1 on {s2,s3}; a grandchild with s2-exponent j carries a
 * floret of degree (a+db)k0 + (a2+db2)k1 - dj on {s4,s5}. Degree-0 florets
 * are skipped, which specializes the shape for vanishing a2/b2.
 */
inline StagedTree tree_3d(const Params3D& p) {
    p.check();
    long top = p.a + p.d * p.b, top2 = p.a2 + p.d * p.b2;
    NodeSpec root = NodeSpec::floret(0, p.l);
    for (int k0 = p.l; k0 >= 0; --k0) {
        int k1 = p.l - k0;
        long deg1 = static_cast<long>(p.b) * k0 + static_cast<long>(p.b2) * k1;
        long base2 = top * k0 + top2 * k1;
        if (deg1 == 0) {
            root.children.push_back(base2 == 0 ? NodeSpec::leaf()
                                               : NodeSpec::floret(2, static_cast<int>(base2)));
            continue;
        }
        NodeSpec mid = NodeSpec::floret(1, static_cast<int>(deg1));
        for (long j = deg1; j >= 0; --j) {
            long deg2 = base2 - static_cast<long>(p.d) * j;
            mid.children.push_back(deg2 == 0 ? NodeSpec::leaf()
                                             : NodeSpec::floret(2, static_cast<int>(deg2)));
        }
        root.children.push_back(mid);
    }
    return detail::build_compact({{"s0", "s1"}, {"s2", "s3"}, {"s4", "s5"}}, root);
}

/// Ternary-root representation of the trapezoidal pyramid with unit height:
/// root on {s0,s1,s2}; s0 leads to a floret of degree a+d, s1 to degree a,
/// s2 directly to a leaf.
inline StagedTree tree_pyramid_b1(int a, int d) {
    if (a < 1 || d < 0) throw Error("tree_pyramid_b1: a >= 1, d >= 0 required");
    NodeSpec root = NodeSpec::floret(0, 1);
    root.children = {NodeSpec::floret(1, a + d), NodeSpec::floret(1, a), NodeSpec::leaf()};
    return detail::build_compact({{"s0", "s1", "s2"}, {"s3", "s4"}}, root);
}

/// Ternary-root representation of the trapezoidal wedge with unit height:
/// as above but s2 leads to a floret of degree a2.
inline StagedTree tree_wedge_b1(int a, int a2, int d) {
    if (a < 1 || a2 < 1 || d < 0) throw Error("tree_wedge_b1: a, a2 >= 1 required");
    NodeSpec root = NodeSpec::floret(0, 1);
    root.children = {NodeSpec::floret(1, a + d), NodeSpec::floret(1, a), NodeSpec::floret(1, a2)};
    return detail::build_compact({{"s0", "s1", "s2"}, {"s3", "s4"}}, root);
}

enum class TreeVariant { A1, A2, A3, A4, StarPyramid, StarWedge };

inline TreeVariant parse_tree_variant(const std::string& name) {
    if (name == "A1") return TreeVariant::A1;
    if (name == "A2") return TreeVariant::A2;
    if (name == "A3") return TreeVariant::A3;
    if (name == "A4") return TreeVariant::A4;
    if (name == "star-pyramid") return TreeVariant::StarPyramid;
    if (name == "star-wedge") return TreeVariant::StarWedge;
    throw InvalidVariant("unknown tree variant '" + name + "'");
}

/// Builds the requested tree representation, checking that the parameters are
/// consistent with the variant.
inline StagedTree family_tree_3d(const Params3D& p, TreeVariant variant) {
    p.check();
    switch (variant) {
        case TreeVariant::A1:
            if (p.a2 == 0 || p.b2 == 0) throw InvalidVariant("A1 requires a2 > 0 and b2 > 0");
            return tree_3d(p);
        case TreeVariant::A2:
            if (p.a2 != 0 || p.b2 == 0) throw InvalidVariant("A2 requires a2 = 0 and b2 > 0");
            return tree_3d(p);
        case TreeVariant::A3:
            if (p.a2 == 0 || p.b2 != 0) throw InvalidVariant("A3 requires a2 > 0 and b2 = 0");
            return tree_3d(p);
        case TreeVariant::A4:
            if (p.a2 != 0 || p.b2 != 0) throw InvalidVariant("A4 requires a2 = b2 = 0");
            return tree_3d(p);
        case TreeVariant::StarPyramid:
            if (p.b != 1 || p.a2 != 0 || p.b2 != 0 || p.l != 1)
                throw InvalidVariant("star-pyramid requires b = 1, a2 = b2 = 0, l = 1");
            return tree_pyramid_b1(p.a, p.d);
        case TreeVariant::StarWedge:
            if (p.b != 1 || p.b2 != 0 || p.a2 == 0 || p.l != 1)
                throw InvalidVariant("star-wedge requires b = 1, b2 = 0, a2 > 0, l = 1");
            return tree_wedge_b1(p.a, p.a2, p.d);
    }
    throw InvalidVariant("unhandled variant");
}

namespace detail {

inline int exp_of(const StagedTree& t, const Atom& atom, const std::string& name) {
    for (std::size_t i = 0; i < t.symbolNames().size(); ++i)
        if (t.symbolNames()[i] == name) return atom.exponents[i];
    return 0;
}

}  // namespace detail

/// Ambient lattice point of each atom of a trapezoid-family tree.
inline std::vector<Point> atom_points_2d(const StagedTree& t) {
    std::vector<Point> pts;
    for (const auto& atom : t.atoms())
        pts.push_back({BigInt(detail::exp_of(t, atom, "s3")), BigInt(detail::exp_of(t, atom, "s0"))});
    return pts;
}

/// Ambient lattice point of each atom of a prismatoid-family tree.
inline std::vector<Point> atom_points_3d(const StagedTree& t) {
    std::vector<Point> pts;
    for (const auto& atom : t.atoms())
        pts.push_back({BigInt(detail::exp_of(t, atom, "s5")), BigInt(detail::exp_of(t, atom, "s2")),
                       BigInt(detail::exp_of(t, atom, "s1"))});
    return pts;
}

/// Ambient lattice point of each atom of the ternary-root representations.
inline std::vector<Point> atom_points_star(const StagedTree& t) {
    std::vector<Point> pts;
    for (const auto& atom : t.atoms())
        pts.push_back({BigInt(detail::exp_of(t, atom, "s4")), BigInt(detail::exp_of(t, atom, "s1")),
                       BigInt(detail::exp_of(t, atom, "s2"))});
    return pts;
}

// ---------------------------------------------------------------------------
// Minimal-matrix catalog for the prismatoid family
// ---------------------------------------------------------------------------

struct CatalogRow {
    std::string name;
    std::function<bool(const Params3D&)> applies;
    std::vector<int> positive;               // indices 1..6 into forms_3d
    std::vector<std::vector<int>> negative;  // signed indices; {2,5,-6} = -(h2+h5-h6)
};

inline const std::vector<CatalogRow>& catalog_rows() {
    static const std::vector<CatalogRow> rows = [] {
        std::vector<CatalogRow> r;
        auto A = [](const Params3D& p) { return p.a > 0 && p.b > 0 && p.d > 0; };
        auto B = [](const Params3D& p) { return p.a > 0 && p.b > 0 && p.d == 0; };
        auto C = [](const Params3D& p) { return p.a == 0 && p.b > 0 && p.d > 0; };
        auto proportional = [](const Params3D& p) {
            return static_cast<long>(p.a2) * p.b == static_cast<long>(p.a) * p.b2;
        };

        r.push_back({"trapezoidal-frusta",
                     [=](const Params3D& p) { return A(p) && p.a2 > 0 && p.b2 > 0; },
                     {1, 2, 3, 4, 5, 6},
                     {{1, 4}, {2, 5}, {3, 6}}});
        r.push_back({"triangle-top",
                     [=](const Params3D& p) { return A(p) && p.a2 == 0 && p.b2 > 0; },
                     {1, 2, 3, 4, 5, 6},
                     {{1, 4}, {2, 5}, {3, 6}}});
        r.push_back({"trapezoidal-wedge-b1",
                     [=](const Params3D& p) { return A(p) && p.a2 > 0 && p.b2 == 0 && p.b == 1; },
                     {1, 2, 3, 4, 5},
                     {{1, 4}, {2, 3, 5}}});
        r.push_back({"trapezoidal-wedge",
                     [=](const Params3D& p) { return A(p) && p.a2 > 0 && p.b2 == 0 && p.b != 1; },
                     {1, 2, 3, 4, 5},
                     {{1, 4}, {2, 5, -6}, {3, 6}}});
        r.push_back({"trapezoidal-pyramid-b1",
                     [=](const Params3D& p) { return A(p) && p.a2 == 0 && p.b2 == 0 && p.b == 1; },
                     {1, 2, 3, 4, 5},
                     {{1, 4}, {2, 3, 5}}});
        r.push_back({"trapezoidal-pyramid",
                     [=](const Params3D& p) { return A(p) && p.a2 == 0 && p.b2 == 0 && p.b != 1; },
                     {1, 2, 3, 4, 5},
                     {{1, 4}, {2, 5, -6}, {3, 6}}});

        r.push_back({"tensor-product-3d",
                     [=](const Params3D& p) { return B(p) && p.a2 == p.a && p.b2 == p.b; },
                     {1, 2, 3, 4, 5, 6},
                     {{1, 2, 3, 4, 5, 6}}});
        r.push_back({"tensor-frusta-a2-eq-a",
                     [=](const Params3D& p) { return B(p) && p.a2 == p.a && p.b2 > 0 && p.b2 < p.b; },
                     {1, 2, 3, 4, 5, 6},
                     {{2, 5}, {1, 3, 4, 6}}});
        r.push_back({"tensor-frusta-b2-eq-b",
                     [=](const Params3D& p) { return B(p) && p.b2 == p.b && p.a2 > 0 && p.a2 < p.a; },
                     {1, 2, 3, 4, 5, 6},
                     {{1, 4}, {2, 3, 5, 6}}});
        r.push_back({"tensor-frusta-proportional",
                     [=](const Params3D& p) {
                         return B(p) && p.a2 > 0 && p.b2 > 0 && proportional(p) && p.a2 < p.a &&
                                p.b2 < p.b;
                     },
                     {1, 2, 3, 4, 5, 6},
                     {{1, 2, 4, 5}, {3, 6}}});
        r.push_back({"tensor-frusta",
                     [=](const Params3D& p) {
                         return B(p) && p.a2 > 0 && p.b2 > 0 && p.a2 < p.a && p.b2 < p.b &&
                                !proportional(p);
                     },
                     {1, 2, 3, 4, 5, 6},
                     {{1, 4}, {2, 5}, {3, 6}}});
        r.push_back({"tensor-wedge-a2-0-a1",
                     [=](const Params3D& p) { return B(p) && p.a2 == 0 && p.b2 > 0 && p.a == 1; },
                     {1, 2, 3, 4, 5},
                     {{2, 5}, {1, 3, 4}}});
        r.push_back({"tensor-wedge-a2-0",
                     [=](const Params3D& p) { return B(p) && p.a2 == 0 && p.b2 > 0 && p.a != 1; },
                     {1, 2, 3, 4, 5},
                     {{1, 4, -6}, {2, 5}, {3, 6}}});
        r.push_back({"tensor-wedge-b2-0-b1",
                     [=](const Params3D& p) { return B(p) && p.a2 > 0 && p.b2 == 0 && p.b == 1; },
                     {1, 2, 3, 4, 5},
                     {{1, 4}, {2, 3, 5}}});
        r.push_back({"tensor-wedge-b2-0",
                     [=](const Params3D& p) { return B(p) && p.a2 > 0 && p.b2 == 0 && p.b != 1; },
                     {1, 2, 3, 4, 5},
                     {{1, 4}, {2, 5, -6}, {3, 6}}});
        r.push_back({"tensor-pyramid",
                     [=](const Params3D& p) { return B(p) && p.a2 == 0 && p.b2 == 0; },
                     {1, 2, 3, 4, 5},
                     {{1, 2, 4, 5, -6}, {3, 6}}});

        r.push_back({"simplex-3d",
                     [=](const Params3D& p) { return C(p) && p.b2 == 0 && p.b == 1 && p.d == 1; },
                     {1, 2, 3, 4},
                     {{1, 2, 3, 4}}});
        r.push_back({"triangular-prism-d1",
                     [=](const Params3D& p) { return C(p) && p.b2 == p.b && p.d == 1; },
                     {1, 2, 3, 4, 6},
                     {{1, 2, 3, 4, 6}}});
        r.push_back({"triangular-prism",
                     [=](const Params3D& p) { return C(p) && p.b2 == p.b && p.d != 1; },
                     {1, 2, 3, 4, 6},
                     {{1, 4, -5}, {2, 3, 5, 6}}});
        r.push_back({"triangular-frusta-d1",
                     [=](const Params3D& p) { return C(p) && p.b2 > 0 && p.b2 < p.b && p.d == 1; },
                     {1, 2, 3, 4, 6},
                     {{1, 2, 4}, {3, 6}}});
        r.push_back({"triangular-frusta",
                     [=](const Params3D& p) { return C(p) && p.b2 > 0 && p.b2 < p.b && p.d != 1; },
                     {1, 2, 3, 4, 6},
                     {{1, 4, -5}, {2, 5}, {3, 6}}});
        r.push_back({"triangular-pyramid-b1",
                     [=](const Params3D& p) { return C(p) && p.b2 == 0 && p.b == 1 && p.d != 1; },
                     {1, 2, 3, 4},
                     {{1, 4, -5}, {2, 3, 5}}});
        r.push_back({"triangular-pyramid-d1",
                     [=](const Params3D& p) { return C(p) && p.b2 == 0 && p.b != 1 && p.d == 1; },
                     {1, 2, 3, 4},
                     {{1, 2, 4, -6}, {3, 6}}});
        r.push_back({"triangular-pyramid",
                     [=](const Params3D& p) { return C(p) && p.b2 == 0 && p.b != 1 && p.d != 1; },
                     {1, 2, 3, 4},
                     {{1, 4, -5}, {2, 5, -6}, {3, 6}}});
        return r;
    }();
    return rows;
}

struct CatalogResult {
    std::string subfamily;
    bool match = false;
    std::size_t rows = 0, cols = 0;
};

/// Classifies the parameters into a catalog row and compares the reduced Horn
/// matrix of the family pair against the row's expected shape, assembled from
/// the face distance functions. Exact comparison up to row order.
inline CatalogResult catalog_check(const Params3D& p) {
    p.check();
    const CatalogRow* row = nullptr;
    for (const auto& r : catalog_rows())
        if (r.applies(p)) {
            row = &r;
            break;
        }
    if (!row) throw UnclassifiedParams("catalog_check: parameters fit no catalog row");

    auto pts = pair_3d(p);
    auto h = forms_3d(p);
    std::size_t n = pts.points.size();

    IntMatrix expected(0, n);
    for (int g : row->positive) {
        std::vector<BigInt> r0(n);
        for (std::size_t m = 0; m < n; ++m) r0[m] = h[g - 1].evalInt(pts.points[m]);
        expected.appendRow(r0);
    }
    for (const auto& combo : row->negative) {
        std::vector<BigInt> r0(n, BigInt(0));
        for (int signedIdx : combo) {
            int g = signedIdx > 0 ? signedIdx : -signedIdx;
            for (std::size_t m = 0; m < n; ++m) {
                BigInt v = h[g - 1].evalInt(pts.points[m]);
                r0[m] += signedIdx > 0 ? -v : v;
            }
        }
        expected.appendRow(r0);
    }

    auto minimal = minimize(horn_3d(p));
    CatalogResult result;
    result.subfamily = row->name;
    result.rows = minimal.H.rows();
    result.cols = minimal.H.cols();
    result.match = minimal.H.rowSorted() == expected.rowSorted();
    return result;
}

/// One parameter choice for every catalog row; used by the verification
/// sweep. Representatives are generic within their rows (b2 < b for the
/// frustum-like rows, since b2 = b introduces further row collapses).
inline std::vector<std::pair<std::string, Params3D>> catalog_representatives() {
    return {
        {"trapezoidal-frusta", {2, 1, 2, 1, 1, 1}},
        {"triangle-top", {1, 0, 2, 1, 1, 1}},
        {"trapezoidal-wedge-b1", {1, 1, 1, 0, 1, 1}},
        {"trapezoidal-wedge", {1, 1, 2, 0, 1, 1}},
        {"trapezoidal-pyramid-b1", {1, 0, 1, 0, 1, 1}},
        {"trapezoidal-pyramid", {1, 0, 2, 0, 1, 1}},
        {"tensor-product-3d", {2, 2, 1, 1, 0, 1}},
        {"tensor-frusta-a2-eq-a", {2, 2, 3, 1, 0, 1}},
        {"tensor-frusta-b2-eq-b", {3, 1, 2, 2, 0, 1}},
        {"tensor-frusta-proportional", {2, 1, 2, 1, 0, 1}},
        {"tensor-frusta", {2, 1, 3, 1, 0, 1}},
        {"tensor-wedge-a2-0-a1", {1, 0, 2, 1, 0, 1}},
        {"tensor-wedge-a2-0", {2, 0, 2, 1, 0, 1}},
        {"tensor-wedge-b2-0-b1", {2, 1, 1, 0, 0, 1}},
        {"tensor-wedge-b2-0", {2, 1, 2, 0, 0, 1}},
        {"tensor-pyramid", {2, 0, 2, 0, 0, 1}},
        {"simplex-3d", {0, 0, 1, 0, 1, 1}},
        {"triangular-prism-d1", {0, 0, 2, 2, 1, 1}},
        {"triangular-prism", {0, 0, 2, 2, 2, 1}},
        {"triangular-frusta-d1", {0, 0, 2, 1, 1, 1}},
        {"triangular-frusta", {0, 0, 2, 1, 2, 1}},
        {"triangular-pyramid-b1", {0, 0, 1, 0, 2, 1}},
        {"triangular-pyramid-d1", {0, 0, 2, 0, 1, 1}},
        {"triangular-pyramid", {0, 0, 2, 0, 2, 1}},
    };
}

// ---------------------------------------------------------------------------
// Auxiliary weighted pairs for precision checks
// ---------------------------------------------------------------------------

/// Dilated simplex k*Delta_d with multinomial weights.
inline WeightedPoints simplex_pair(int k, int d) {
    if (d < 1 || d > 3 || k < 1) throw Error("simplex_pair: need 1 <= d <= 3, k >= 1");
    WeightedPoints out;
    std::vector<int> m(d, 0);
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == d) {
            Point pt(d);
            std::vector<int> comp{remaining};  // slack entry first
            for (int c = 0; c < d; ++c) {
                pt[c] = m[c];
                comp.push_back(m[c]);
            }
            out.points.push_back(pt);
            out.weights.push_back(multinomial(comp));
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            m[pos] = v;
            self(self, pos + 1, remaining - v);
        }
    };
    rec(rec, 0, k);
    return out;
}

/// Product of two weighted point sets (cartesian points, multiplied weights).
inline WeightedPoints product_pair(const WeightedPoints& x, const WeightedPoints& y) {
    WeightedPoints out;
    for (std::size_t i = 0; i < x.points.size(); ++i)
        for (std::size_t j = 0; j < y.points.size(); ++j) {
            Point p = x.points[i];
            p.insert(p.end(), y.points[j].begin(), y.points[j].end());
            out.points.push_back(p);
            out.weights.push_back(x.weights[i] * y.weights[j]);
        }
    return out;
}

/// Segment [0,a] with binomial weights.
inline WeightedPoints segment_pair(int a) { return simplex_pair(a, 1); }

}  // namespace rlp

#endif  // RLP_FAMILIES_HPP
