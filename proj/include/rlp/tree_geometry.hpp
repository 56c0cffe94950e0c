#ifndef RLP_TREE_GEOMETRY_HPP
#define RLP_TREE_GEOMETRY_HPP

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "rlp/polytope.hpp"
#include "rlp/staged_tree.hpp"

namespace rlp {

/**
 * The lattice polytope of a staged tree: convex hull of the atom exponent
 * vectors, taken in coordinates for their affine hull (saturated lattice),
 * together with the atom <-> lattice point correspondence.
 */
struct TreePolytope {
    LatticePolytope poly;                 // full-dimensional, points in lex order
    AffineEmbedding embedding;            // back to exponent space
    std::vector<Point> atomPoints;        // projected exponent vector per atom
    std::vector<long> atomOfPoint;        // poly.points index -> atom index, -1 if none
    bool bijective = false;               // atoms <-> lattice points of the hull
};

inline TreePolytope polytope_of_tree(const StagedTree& tree) {
    std::vector<Point> exps;
    exps.reserve(tree.atomCount());
    for (const auto& atom : tree.atoms()) {
        Point p(atom.exponents.size());
        for (std::size_t i = 0; i < p.size(); ++i) p[i] = atom.exponents[i];
        exps.push_back(std::move(p));
    }
    auto projected = project_and_hull(exps);

    TreePolytope tp;
    tp.poly = projected.poly;
    tp.embedding = projected.embedding;
    tp.atomPoints = projected.projectedInput;

    std::map<Point, long> firstAtom;
    bool duplicateAtoms = false;
    for (std::size_t j = 0; j < tp.atomPoints.size(); ++j) {
        if (!firstAtom.emplace(tp.atomPoints[j], static_cast<long>(j)).second)
            duplicateAtoms = true;
    }
    tp.atomOfPoint.assign(tp.poly.points.size(), -1);
    std::size_t matched = 0;
    for (std::size_t m = 0; m < tp.poly.points.size(); ++m) {
        auto it = firstAtom.find(tp.poly.points[m]);
        if (it != firstAtom.end()) {
            tp.atomOfPoint[m] = it->second;
            ++matched;
        }
    }
    tp.bijective = !duplicateAtoms && matched == tp.poly.points.size() &&
                   tp.atomPoints.size() == tp.poly.points.size();
    return tp;
}

struct VertexPathsReport {
    std::vector<std::size_t> hullVertexLeaves;    // exact: atom point is a hull vertex
    std::vector<std::size_t> predicateLeaves;     // at most one symbol per stage divides p_j
    bool predicateMatches = false;
};

/// Which root-to-leaf paths represent vertices of the tree polytope, decided
/// exactly by the hull, alongside the divisibility heuristic.
inline VertexPathsReport vertex_representing_paths(const StagedTree& tree,
                                                   const TreePolytope& tp) {
    VertexPathsReport report;
    std::set<Point> verts(tp.poly.vertices.begin(), tp.poly.vertices.end());
    for (std::size_t j = 0; j < tree.atomCount(); ++j) {
        if (verts.count(tp.atomPoints[j])) report.hullVertexLeaves.push_back(j);
        bool ok = true;
        for (const auto& st : tree.stages()) {
            int positive = 0;
            for (int s : st.symbols)
                if (tree.atoms()[j].exponents[s] > 0) ++positive;
            if (positive > 1) ok = false;
        }
        if (ok) report.predicateLeaves.push_back(j);
    }
    report.predicateMatches = report.hullVertexLeaves == report.predicateLeaves;
    return report;
}

struct StarReport {
    bool ldMatch = false;          // symbol rows == lattice distance matrix (up to row order)
    bool vertexCharMatch = false;  // hull vertices == divisibility predicate
    bool holds = false;
    std::map<int, int> symbolToFacet;  // defined when ldMatch
    std::string note;
};

/**
 * Property check for a balanced tree: (1) the nonnegative rows of its Horn
 * matrix (the symbol rows), with columns keyed by lattice points, coincide
 * with the lattice distance matrix of the tree polytope; (2) the vertex
 * characterization by stagewise divisibility is exact.
 */
inline StarReport property_star(const StagedTree& tree, const TreePolytope& tp) {
    StarReport report;
    report.vertexCharMatch = vertex_representing_paths(tree, tp).predicateMatches;

    if (!tp.bijective) {
        report.note = "atoms do not biject with the lattice points of the hull";
        return report;
    }
    std::size_t nSym = tree.symbolCount(), nFacet = tp.poly.facets.size();
    if (nSym != nFacet) {
        report.note = "symbol count " + std::to_string(nSym) + " != facet count " +
                      std::to_string(nFacet);
        return report;
    }

    // Facet rows in atom-column order.
    std::vector<std::vector<BigInt>> facetRows(nFacet,
                                               std::vector<BigInt>(tree.atomCount()));
    for (std::size_t f = 0; f < nFacet; ++f)
        for (std::size_t j = 0; j < tree.atomCount(); ++j)
            facetRows[f][j] = detail::dot(tp.atomPoints[j], tp.poly.facets[f].normal) +
                              tp.poly.facets[f].offset;

    std::vector<std::vector<BigInt>> symbolRows(nSym, std::vector<BigInt>(tree.atomCount()));
    for (std::size_t i = 0; i < nSym; ++i)
        for (std::size_t j = 0; j < tree.atomCount(); ++j)
            symbolRows[i][j] = tree.atoms()[j].exponents[i];

    std::vector<bool> facetUsed(nFacet, false);
    for (std::size_t i = 0; i < nSym; ++i) {
        bool found = false;
        for (std::size_t f = 0; f < nFacet && !found; ++f) {
            if (facetUsed[f] || facetRows[f] != symbolRows[i]) continue;
            facetUsed[f] = true;
            report.symbolToFacet[static_cast<int>(i)] = static_cast<int>(f);
            found = true;
        }
        if (!found) {
            report.symbolToFacet.clear();
            report.note = "symbol " + tree.symbolNames()[i] + " matches no facet row";
            return report;
        }
    }
    report.ldMatch = true;
    report.holds = report.ldMatch && report.vertexCharMatch;
    return report;
}

struct SimplenessReport {
    bool viaTree = false;  // equal path lengths and symbol-count criterion
    bool direct = false;   // every hull vertex lies on exactly dim facets
    bool consistent = false;
};

/// Combinatorial simplicity test: all root-to-leaf paths have length equal to
/// the number of stages and sum |S_l| - m = dim. Requires the star property;
/// cross-checked against the polytope.
inline SimplenessReport simpleness_via_tree(const StagedTree& tree, const TreePolytope& tp,
                                            const StarReport& star) {
    if (!star.holds) throw StarRequired("simpleness_via_tree: star property not verified");
    SimplenessReport report;
    std::size_t m = tree.stages().size();
    bool equalLengths = true;
    for (const auto& atom : tree.atoms())
        if (static_cast<std::size_t>(tree.node(atom.leaf).level) != m) equalLengths = false;
    long symbolTotal = 0;
    for (const auto& st : tree.stages()) symbolTotal += static_cast<long>(st.symbols.size());
    report.viaTree = equalLengths && (symbolTotal - static_cast<long>(m) == tp.poly.dim);
    report.direct = is_simple(tp.poly);
    report.consistent = report.viaTree == report.direct;
    return report;
}

struct CollectionsReport {
    bool stagesMatchCollections = false;
    bool minimalEqualsM = false;
    // stage id -> facet index set, via the star matching
    std::vector<std::vector<int>> stageFacetSets;
    std::vector<std::vector<int>> collections;
};

/**
 * For a simple tree polytope with the star property, compares the stage
 * partition of the symbols (transported to facets through the star matching)
 * with the primitive collections of the normal fan, and checks that the
 * reduced tree Horn matrix equals the collection-extended distance matrix.
 */
inline CollectionsReport stages_equal_primitive_collections(const StagedTree& tree,
                                                            const TreePolytope& tp,
                                                            const StarReport& star) {
    if (!star.holds) throw PreconditionFailed("stages_equal_primitive_collections: star required");
    if (!is_simple(tp.poly))
        throw PreconditionFailed("stages_equal_primitive_collections: polytope not simple");

    CollectionsReport report;
    for (const auto& st : tree.stages()) {
        std::vector<int> facetSet;
        for (int s : st.symbols) facetSet.push_back(star.symbolToFacet.at(s));
        std::sort(facetSet.begin(), facetSet.end());
        report.stageFacetSets.push_back(facetSet);
    }
    report.collections = primitive_collections(normal_fan(tp.poly));

    auto sortedSets = [](std::vector<std::vector<int>> sets) {
        for (auto& s : sets) std::sort(s.begin(), s.end());
        std::sort(sets.begin(), sets.end());
        return sets;
    };
    report.stagesMatchCollections =
        sortedSets(report.stageFacetSets) == sortedSets(report.collections);

    // Column order of matrix_M follows poly.points; remap to atom order.
    auto mm = matrix_M(tp.poly);
    std::vector<std::size_t> perm(tree.atomCount());
    std::map<Point, std::size_t> pointIndex;
    for (std::size_t m = 0; m < tp.poly.points.size(); ++m) pointIndex[tp.poly.points[m]] = m;
    for (std::size_t j = 0; j < tree.atomCount(); ++j) perm[j] = pointIndex.at(tp.atomPoints[j]);
    IntMatrix mAtomOrder(mm.M.rows(), tree.atomCount());
    for (std::size_t i = 0; i < mm.M.rows(); ++i)
        for (std::size_t j = 0; j < tree.atomCount(); ++j)
            mAtomOrder.at(i, j) = mm.M.at(i, perm[j]);

    auto minimal = minimize(tree_horn_pair(tree));
    report.minimalEqualsM = minimal.H.rowSorted() == mAtomOrder.rowSorted();
    return report;
}

}  // namespace rlp

#endif  // RLP_TREE_GEOMETRY_HPP
