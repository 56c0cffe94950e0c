#ifndef RLP_POLYTOPE_HPP
#define RLP_POLYTOPE_HPP

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "rlp/matrix.hpp"
#include "rlp/rational.hpp"

namespace rlp {

using Point = std::vector<BigInt>;

/// One inequality <x, normal> + offset >= 0 with primitive inward normal.
struct Facet {
    Point normal;
    BigInt offset;

    bool operator<(const Facet& other) const {
        if (normal != other.normal) return normal < other.normal;
        return offset < other.offset;
    }
    bool operator==(const Facet& other) const {
        return normal == other.normal && offset == other.offset;
    }
};

/**
 * Full-dimensional lattice polytope of dimension 1..3 given by vertices,
 * facet presentation and the ordered list of its lattice points.
 */
struct LatticePolytope {
    int dim = 0;
    std::vector<Point> vertices;      // extreme points, sorted
    std::vector<Facet> facets;        // sorted lex on (normal, offset)
    std::vector<Point> points;        // all lattice points, in a fixed order

    std::size_t facetCount() const { return facets.size(); }
    std::size_t pointCount() const { return points.size(); }
};

namespace detail {

inline BigInt dot(const Point& a, const Point& b) {
    BigInt s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Point sub(const Point& a, const Point& b) {
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Point cross3(const Point& a, const Point& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

inline std::vector<Point> dedupSorted(std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

inline std::size_t affine_rank(const std::vector<Point>& pts) {
    if (pts.size() <= 1) return 0;
    IntMatrix diffs;
    for (std::size_t i = 1; i < pts.size(); ++i) diffs.appendRow(sub(pts[i], pts[0]));
    return rank_q(diffs);
}

/// Candidate facet from a spanning subset; returns true when all points lie
/// on one side, writing the inward-primitive facet.
inline bool facet_from_span(const std::vector<Point>& pts, Point normal, const Point& base,
                            Facet& out) {
    normal = primitive_direction(std::move(normal));
    if (is_zero_vector(normal)) return false;
    BigInt level = dot(base, normal);
    bool above = false, below = false;
    for (const auto& p : pts) {
        int s = (dot(p, normal) - level).sign();
        if (s > 0) above = true;
        if (s < 0) below = true;
        if (above && below) return false;
    }
    if (below) {
        for (auto& x : normal) x = -x;
        level = -level;
    }
    out = Facet{std::move(normal), -level};
    return true;
}

// Exhaustive facet enumeration. Exact and adequate for the point counts that
// occur here (tens of points); not meant for large inputs.
inline std::vector<Facet> facets_brute_force(const std::vector<Point>& pts, int dim) {
    std::set<Facet> found;
    std::size_t n = pts.size();
    Facet f;
    if (dim == 1) {
        for (std::size_t i = 0; i + 1 <= n; ++i) {
            if (facet_from_span(pts, {BigInt(1)}, pts[i], f)) found.insert(f);
            if (facet_from_span(pts, {BigInt(-1)}, pts[i], f)) found.insert(f);
        }
    } else if (dim == 2) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                Point d = sub(pts[j], pts[i]);
                if (facet_from_span(pts, {-d[1], d[0]}, pts[i], f)) found.insert(f);
            }
    } else {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                for (std::size_t k = j + 1; k < n; ++k) {
                    Point nrm = cross3(sub(pts[j], pts[i]), sub(pts[k], pts[i]));
                    if (facet_from_span(pts, nrm, pts[i], f)) found.insert(f);
                }
    }
    return std::vector<Facet>(found.begin(), found.end());
}

inline long to_long(const BigInt& x) {
    return static_cast<long>(x);
}

inline std::vector<Point> enumerate_lattice_points(const std::vector<Facet>& facets,
                                                   const std::vector<Point>& verts, int dim) {
    std::vector<long> lo(dim), hi(dim);
    for (int c = 0; c < dim; ++c) {
        lo[c] = to_long(verts[0][c]);
        hi[c] = lo[c];
        for (const auto& v : verts) {
            lo[c] = std::min(lo[c], to_long(v[c]));
            hi[c] = std::max(hi[c], to_long(v[c]));
        }
    }
    std::vector<Point> result;
    Point p(dim);
    auto inside = [&](const Point& q) {
        for (const auto& f : facets)
            if (dot(q, f.normal) + f.offset < 0) return false;
        return true;
    };
    std::vector<long> cur(lo);
    while (true) {
        for (int c = 0; c < dim; ++c) p[c] = cur[c];
        if (inside(p)) result.push_back(p);
        int c = dim - 1;
        while (c >= 0 && ++cur[c] > hi[c]) cur[c] = lo[c], --c;
        if (c < 0) break;
    }
    return result;  // lex ascending by construction
}

}  // namespace detail

inline std::vector<Rat> lattice_distance(const LatticePolytope& P, const std::vector<Rat>& p) {
    std::vector<Rat> h(P.facets.size());
    for (std::size_t i = 0; i < P.facets.size(); ++i) {
        Rat v(P.facets[i].offset);
        for (int c = 0; c < P.dim; ++c) v += Rat(P.facets[i].normal[c]) * p[c];
        h[i] = v;
    }
    return h;
}

inline std::vector<BigInt> lattice_distance_int(const LatticePolytope& P, const Point& p) {
    std::vector<BigInt> h(P.facets.size());
    for (std::size_t i = 0; i < P.facets.size(); ++i)
        h[i] = detail::dot(p, P.facets[i].normal) + P.facets[i].offset;
    return h;
}

/// Facet indices with h_i(p) = 0.
inline std::vector<int> active_facets(const LatticePolytope& P, const Point& p) {
    std::vector<int> act;
    auto h = lattice_distance_int(P, p);
    for (std::size_t i = 0; i < h.size(); ++i)
        if (h[i].is_zero()) act.push_back(static_cast<int>(i));
    return act;
}

/**
 * Convex hull with facet presentation of a full-dimensional point set.
 * `orderedPoints`, when given, fixes the order of the lattice point list and
 * must coincide with the enumerated lattice points as a set.
 *
 * Throws DimensionTooHigh when the affine span exceeds 3 and Degenerate when
 * it differs from `dim`.
 */
inline LatticePolytope hull_facets(const std::vector<Point>& inputPoints, int dim,
                                   const std::vector<Point>& orderedPoints = {}) {
    if (inputPoints.empty()) throw Degenerate("hull_facets: no points");
    if (static_cast<int>(inputPoints[0].size()) != dim)
        throw Error("hull_facets: ambient dimension must equal dim; project first");
    auto pts = detail::dedupSorted(inputPoints);
    std::size_t r = detail::affine_rank(pts);
    if (r > 3) throw DimensionTooHigh("hull_facets: affine span " + std::to_string(r));
    if (static_cast<int>(r) != dim)
        throw Degenerate("hull_facets: affine span " + std::to_string(r) + " != dim " +
                         std::to_string(dim));

    LatticePolytope P;
    P.dim = dim;
    P.facets = detail::facets_brute_force(pts, dim);

    for (const auto& p : pts) {
        auto act = active_facets(P, p);
        IntMatrix normals;
        for (int i : act) normals.appendRow(P.facets[i].normal);
        if (normals.rows() >= static_cast<std::size_t>(dim) &&
            rank_q(normals) == static_cast<std::size_t>(dim))
            P.vertices.push_back(p);
    }

    P.points = detail::enumerate_lattice_points(P.facets, P.vertices, dim);
    if (!orderedPoints.empty()) {
        auto sortedGiven = detail::dedupSorted(orderedPoints);
        if (sortedGiven != P.points)
            throw Error("hull_facets: supplied point order does not match the lattice points");
        P.points = orderedPoints;
    }
    return P;
}

/// Affine-lattice embedding: original = origin + sum_k x_k * basis[k].
struct AffineEmbedding {
    Point origin;
    std::vector<Point> basis;  // rows; basis of the saturated direction lattice

    Point toAmbient(const Point& x) const {
        Point p = origin;
        for (std::size_t k = 0; k < basis.size(); ++k)
            for (std::size_t c = 0; c < p.size(); ++c) p[c] += x[k] * basis[k][c];
        return p;
    }
};

struct ProjectedPolytope {
    LatticePolytope poly;
    AffineEmbedding embedding;
    std::vector<Point> projectedInput;  // input points in hull coordinates, input order
};

/**
 * Projects a (possibly lower-dimensional) lattice point set onto coordinates
 * for its affine hull, using a basis of the saturated lattice so lattice
 * points map onto lattice points bijectively, then builds the hull there.
 */
inline ProjectedPolytope project_and_hull(const std::vector<Point>& inputPoints,
                                          bool keepInputOrderAsPoints = false) {
    if (inputPoints.empty()) throw Degenerate("project_and_hull: no points");
    std::size_t D = inputPoints[0].size();
    IntMatrix diffs;
    for (std::size_t i = 1; i < inputPoints.size(); ++i)
        diffs.appendRow(detail::sub(inputPoints[i], inputPoints[0]));
    std::size_t r = inputPoints.size() > 1 ? rank_q(diffs) : 0;
    if (r > 3) throw DimensionTooHigh("project_and_hull: affine span " + std::to_string(r));
    if (r == 0) throw Degenerate("project_and_hull: points are all equal");

    AffineEmbedding emb;
    emb.origin = inputPoints[0];
    if (r == D) {
        emb.origin.assign(D, BigInt(0));
        for (std::size_t k = 0; k < D; ++k) {
            Point e(D, BigInt(0));
            e[k] = 1;
            emb.basis.push_back(e);
        }
    } else {
        // Saturate: basis of (affine hull directions) intersected with Z^D.
        auto ortho = q_kernel_basis(diffs);
        IntMatrix N = IntMatrix::fromRows(ortho);
        emb.basis = integer_kernel_basis(N);
        if (emb.basis.size() != r) throw Error("project_and_hull: saturation failed");
    }

    // Coordinates of each input point in the basis.
    IntMatrix bt(D, emb.basis.size());
    for (std::size_t c = 0; c < D; ++c)
        for (std::size_t k = 0; k < emb.basis.size(); ++k) bt.at(c, k) = emb.basis[k][c];
    std::vector<Point> proj;
    proj.reserve(inputPoints.size());
    for (const auto& p : inputPoints) {
        auto d = detail::sub(p, emb.origin);
        std::vector<Rat> rhs(D);
        for (std::size_t c = 0; c < D; ++c) rhs[c] = Rat(d[c]);
        auto x = solve_q(bt, rhs);
        if (!x) throw Error("project_and_hull: point outside affine hull");
        Point xi(emb.basis.size());
        for (std::size_t k = 0; k < emb.basis.size(); ++k) {
            if (denom((*x)[k]) != 1) throw Error("project_and_hull: non-integral coordinate");
            xi[k] = numer((*x)[k]);
        }
        proj.push_back(std::move(xi));
    }

    ProjectedPolytope out;
    out.embedding = emb;
    out.projectedInput = proj;
    out.poly = hull_facets(proj, static_cast<int>(r),
                           keepInputOrderAsPoints ? proj : std::vector<Point>{});
    return out;
}

inline IntMatrix lattice_distance_matrix(const LatticePolytope& P) {
    IntMatrix m(P.facets.size(), P.points.size());
    for (std::size_t i = 0; i < P.facets.size(); ++i)
        for (std::size_t j = 0; j < P.points.size(); ++j)
            m.at(i, j) = detail::dot(P.points[j], P.facets[i].normal) + P.facets[i].offset;
    return m;
}

/// Rays are identified with facet indices; one maximal cone per vertex.
struct NormalFan {
    std::size_t rayCount = 0;
    std::vector<std::vector<int>> maximalCones;
};

inline NormalFan normal_fan(const LatticePolytope& P) {
    NormalFan fan;
    fan.rayCount = P.facets.size();
    for (const auto& v : P.vertices) fan.maximalCones.push_back(active_facets(P, v));
    return fan;
}

inline bool is_simple(const LatticePolytope& P) {
    for (const auto& v : P.vertices)
        if (active_facets(P, v).size() != static_cast<std::size_t>(P.dim)) return false;
    return true;
}

/**
 * All primitive collections of the fan: subsets of rays contained in no
 * maximal cone's ray set while every proper subset is contained in some.
 * Enumerated by subset size, then lexicographically.
 */
inline std::vector<std::vector<int>> primitive_collections(const NormalFan& fan) {
    std::size_t r = fan.rayCount;
    std::vector<std::vector<int>> cones = fan.maximalCones;
    for (auto& c : cones) std::sort(c.begin(), c.end());

    auto containedInSomeCone = [&](const std::vector<int>& sub) {
        for (const auto& cone : cones)
            if (std::includes(cone.begin(), cone.end(), sub.begin(), sub.end())) return true;
        return false;
    };

    std::vector<std::vector<int>> result;
    std::vector<int> comb;
    // Size-ascending combination enumeration over ray indices.
    for (std::size_t size = 1; size <= r; ++size) {
        comb.assign(size, 0);
        for (std::size_t i = 0; i < size; ++i) comb[i] = static_cast<int>(i);
        while (true) {
            if (!containedInSomeCone(comb)) {
                bool allProperIn = true;
                for (std::size_t drop = 0; drop < size && allProperIn; ++drop) {
                    std::vector<int> sub;
                    for (std::size_t i = 0; i < size; ++i)
                        if (i != drop) sub.push_back(comb[i]);
                    if (!sub.empty() && !containedInSomeCone(sub)) allProperIn = false;
                }
                if (allProperIn) result.push_back(comb);
            }
            // next combination
            long i = static_cast<long>(size) - 1;
            while (i >= 0 && comb[i] == static_cast<int>(r - size + i)) --i;
            if (i < 0) break;
            ++comb[i];
            for (std::size_t j = i + 1; j < size; ++j) comb[j] = comb[j - 1] + 1;
        }
    }
    return result;
}

struct MMatrixResult {
    IntMatrix M;
    bool isHorn = false;
    std::size_t facetRows = 0;
    std::vector<std::vector<int>> collections;
};

/// Lattice distance matrix extended by one negative row per primitive
/// collection; a Horn matrix exactly when the collections partition the rays.
inline MMatrixResult matrix_M(const LatticePolytope& P) {
    MMatrixResult result;
    result.M = lattice_distance_matrix(P);
    result.facetRows = result.M.rows();
    result.collections = primitive_collections(normal_fan(P));
    for (const auto& coll : result.collections) {
        std::vector<BigInt> row(P.points.size(), BigInt(0));
        for (int i : coll)
            for (std::size_t j = 0; j < P.points.size(); ++j)
                row[j] -= detail::dot(P.points[j], P.facets[i].normal) + P.facets[i].offset;
        result.M.appendRow(row);
    }
    result.isHorn = result.M.columnSumsZero();
    return result;
}

}  // namespace rlp

#endif  // RLP_POLYTOPE_HPP
