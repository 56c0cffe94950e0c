#ifndef RLP_JSON_IO_HPP
#define RLP_JSON_IO_HPP

#include <string>
#include <vector>

#include "json.hpp"

#include "rlp/horn.hpp"
#include "rlp/mpoly.hpp"
#include "rlp/polytope.hpp"
#include "rlp/staged_tree.hpp"

namespace rlp {

using Json = nlohmann::ordered_json;

namespace detail {

inline long long json_int(const BigInt& x) {
    if (x > BigInt(9'000'000'000'000'000'000LL) || x < BigInt(-9'000'000'000'000'000'000LL))
        throw Error("json: integer entry too large for the wire format");
    return static_cast<long long>(x);
}

inline Json point_to_json(const Point& p) {
    Json arr = Json::array();
    for (const auto& x : p) arr.push_back(json_int(x));
    return arr;
}

inline Point point_from_json(const Json& arr) {
    Point p;
    for (const auto& x : arr) p.push_back(BigInt(x.get<long long>()));
    return p;
}

}  // namespace detail

// ---- MPoly: {"symbols":[...], "terms":[{"exp":[...], "coef":"p/q"}]} ------

inline Json mpoly_to_json(const MPoly& poly) {
    MPoly c = poly.canonicalized();
    Json j;
    j["symbols"] = c.symbols();
    Json terms = Json::array();
    for (const auto& [e, coef] : c.terms()) {
        Json term;
        term["exp"] = e;
        term["coef"] = rat_to_string(coef);
        terms.push_back(term);
    }
    j["terms"] = terms;
    return j;
}

inline MPoly mpoly_from_json(const Json& j) {
    MPoly poly(j.at("symbols").get<std::vector<std::string>>());
    for (const auto& term : j.at("terms"))
        poly.addTerm(term.at("exp").get<std::vector<int>>(),
                     parse_rat(term.at("coef").get<std::string>()));
    return poly;
}

// ---- Polytope: {"dim":d,"vertices":[[..]],"facets":[{"n":[..],"a":int}],"points":[[..]]} ----

inline Json polytope_to_json(const LatticePolytope& P) {
    Json j;
    j["dim"] = P.dim;
    Json verts = Json::array();
    for (const auto& v : P.vertices) verts.push_back(detail::point_to_json(v));
    j["vertices"] = verts;
    Json facets = Json::array();
    for (const auto& f : P.facets) {
        Json fj;
        fj["n"] = detail::point_to_json(f.normal);
        fj["a"] = detail::json_int(f.offset);
        facets.push_back(fj);
    }
    j["facets"] = facets;
    Json pts = Json::array();
    for (const auto& p : P.points) pts.push_back(detail::point_to_json(p));
    j["points"] = pts;
    return j;
}

inline LatticePolytope polytope_from_json(const Json& j) {
    LatticePolytope P;
    P.dim = j.at("dim").get<int>();
    for (const auto& v : j.at("vertices")) P.vertices.push_back(detail::point_from_json(v));
    for (const auto& f : j.at("facets"))
        P.facets.push_back(
            Facet{detail::point_from_json(f.at("n")), BigInt(f.at("a").get<long long>())});
    for (const auto& p : j.at("points")) P.points.push_back(detail::point_from_json(p));
    return P;
}

// ---- Horn pair: {"H":[[int]], "lambda":["p/q"]} ---------------------------

inline Json horn_to_json(const HornPair& pair) {
    Json j;
    Json rows = Json::array();
    for (std::size_t i = 0; i < pair.H.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t c = 0; c < pair.H.cols(); ++c)
            row.push_back(detail::json_int(pair.H.at(i, c)));
        rows.push_back(row);
    }
    j["H"] = rows;
    Json lam = Json::array();
    for (const auto& l : pair.lambda) lam.push_back(rat_to_string(l));
    j["lambda"] = lam;
    return j;
}

inline HornPair horn_from_json(const Json& j) {
    HornPair pair;
    const auto& rows = j.at("H");
    std::size_t nRows = rows.size();
    std::size_t nCols = nRows ? rows[0].size() : 0;
    pair.H = IntMatrix(nRows, nCols);
    for (std::size_t i = 0; i < nRows; ++i) {
        if (rows[i].size() != nCols) throw ParseError("horn_from_json: ragged matrix");
        for (std::size_t c = 0; c < nCols; ++c)
            pair.H.at(i, c) = BigInt(rows[i][c].get<long long>());
    }
    for (const auto& l : j.at("lambda")) pair.lambda.push_back(parse_rat(l.get<std::string>()));
    pair.check();
    return pair;
}

// ---- Staged tree ----------------------------------------------------------
//
// {"stages":[{"id":0,"symbols":["s0","s1"]},...],
//  "nodes":[{"id":0,"stage":0,"degree":2}, {"id":1}, ...]}
//
// Nodes are listed in depth-first order with children in lex-descending
// composition order; a node without a stage is a leaf. Edges (and their
// composition labels) are implicit in this traversal.

inline Json tree_to_json(const StagedTree& tree) {
    Json j;
    Json stages = Json::array();
    for (const auto& st : tree.stages()) {
        Json sj;
        sj["id"] = st.id;
        std::vector<std::string> names;
        for (int s : st.symbols) names.push_back(tree.symbolNames()[s]);
        sj["symbols"] = names;
        stages.push_back(sj);
    }
    j["stages"] = stages;
    Json nodes = Json::array();
    for (std::size_t v = 0; v < tree.nodes().size(); ++v) {
        Json nj;
        nj["id"] = v;
        if (!tree.node(static_cast<int>(v)).isLeaf()) {
            nj["stage"] = tree.node(static_cast<int>(v)).stage;
            nj["degree"] = tree.node(static_cast<int>(v)).degree;
        }
        nodes.push_back(nj);
    }
    j["nodes"] = nodes;
    return j;
}

inline StagedTree tree_from_json(const Json& j) {
    std::vector<std::vector<std::string>> stageSymbols;
    for (const auto& sj : j.at("stages")) {
        if (sj.at("id").get<int>() != static_cast<int>(stageSymbols.size()))
            throw ParseError("tree_from_json: stage ids must be 0,1,...");
        stageSymbols.push_back(sj.at("symbols").get<std::vector<std::string>>());
    }
    const auto& nodes = j.at("nodes");
    std::size_t cursor = 0;
    auto parse = [&](auto&& self) -> NodeSpec {
        if (cursor >= nodes.size()) throw ParseError("tree_from_json: truncated node list");
        const auto& nj = nodes[cursor++];
        if (!nj.contains("stage")) return NodeSpec::leaf();
        NodeSpec spec;
        spec.stage = nj.at("stage").get<int>();
        spec.degree = nj.at("degree").get<int>();
        if (spec.stage < 0 || spec.stage >= static_cast<int>(stageSymbols.size()))
            throw ParseError("tree_from_json: stage id out of range");
        auto comps = compositions_desc(spec.degree,
                                       static_cast<int>(stageSymbols[spec.stage].size()));
        for (std::size_t c = 0; c < comps.size(); ++c) spec.children.push_back(self(self));
        return spec;
    };
    NodeSpec root = parse(parse);
    if (cursor != nodes.size()) throw ParseError("tree_from_json: trailing nodes");
    return StagedTree::build(stageSymbols, root);
}

inline std::vector<BigInt> counts_from_json(const Json& j) {
    std::vector<BigInt> u;
    for (const auto& x : j) u.push_back(BigInt(x.get<long long>()));
    return u;
}

}  // namespace rlp

#endif  // RLP_JSON_IO_HPP
