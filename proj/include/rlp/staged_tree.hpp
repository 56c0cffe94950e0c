#ifndef RLP_STAGED_TREE_HPP
#define RLP_STAGED_TREE_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rlp/horn.hpp"
#include "rlp/mpoly.hpp"
#include "rlp/rational.hpp"
#include "rlp/rng.hpp"

namespace rlp {

/// All compositions K in N^parts with |K| = total, lexicographically descending.
inline std::vector<std::vector<int>> compositions_desc(int total, int parts) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(parts);
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == parts - 1) {
            cur[pos] = remaining;
            out.push_back(cur);
            return;
        }
        for (int k = remaining; k >= 0; --k) {
            cur[pos] = k;
            self(self, pos + 1, remaining - k);
        }
    };
    if (parts > 0) rec(rec, 0, total);
    return out;
}

struct Stage {
    int id = 0;
    std::vector<int> symbols;  // global symbol indices
};

/// Recursive build description. stage < 0 marks a leaf. A non-leaf either
/// lists no children (all children are leaves) or exactly one child per
/// composition, in lex-descending composition order.
struct NodeSpec {
    int stage = -1;
    int degree = 0;
    std::vector<NodeSpec> children;

    static NodeSpec leaf() { return NodeSpec{}; }
    static NodeSpec floret(int stage, int degree, std::vector<NodeSpec> children = {}) {
        return NodeSpec{stage, degree, std::move(children)};
    }
};

struct TreeNode {
    int stage = -1;
    int degree = 0;
    int parent = -1;
    int level = 0;
    std::vector<int> children;               // node ids
    std::vector<std::vector<int>> comps;     // composition per child, lex-descending
    std::size_t atomLo = 0, atomHi = 0;      // atoms of the subtree (contiguous in DFS order)

    bool isLeaf() const { return stage < 0; }
};

/// One root-to-leaf path: multinomial coefficient and symbol exponent vector.
struct Atom {
    int leaf = -1;
    BigInt coeff;
    std::vector<int> exponents;  // over all symbols
};

/**
 * A multinomial staged tree: a rooted plane tree whose non-leaf vertices
 * carry a stage and a degree, with one outgoing edge per composition of the
 * degree over the stage's symbols. Edge labels are the multinomial terms
 * (degree choose K) * prod s_i^{K_i}. Immutable after build.
 */
class StagedTree {
  public:
    static StagedTree build(const std::vector<std::vector<std::string>>& stageSymbols,
                            const NodeSpec& root) {
        StagedTree t;
        for (const auto& names : stageSymbols) {
            if (names.empty()) throw EmptyStage("build: stage with no symbols");
            Stage st;
            st.id = static_cast<int>(t.stages_.size());
            for (const auto& name : names) {
                if (std::find(t.symbolNames_.begin(), t.symbolNames_.end(), name) !=
                    t.symbolNames_.end())
                    throw Error("build: duplicate symbol " + name);
                st.symbols.push_back(static_cast<int>(t.symbolNames_.size()));
                t.symbolNames_.push_back(name);
            }
            t.stages_.push_back(st);
        }
        if (root.stage < 0) throw Error("build: root must carry a floret");
        std::vector<bool> onPath(t.stages_.size(), false);
        t.addNode(root, -1, 0, onPath);
        t.computeAtoms();
        return t;
    }

    const std::vector<std::string>& symbolNames() const { return symbolNames_; }
    const std::vector<Stage>& stages() const { return stages_; }
    const std::vector<TreeNode>& nodes() const { return nodes_; }
    const TreeNode& node(int id) const { return nodes_[id]; }
    const std::vector<Atom>& atoms() const { return atoms_; }

    std::size_t symbolCount() const { return symbolNames_.size(); }
    std::size_t atomCount() const { return atoms_.size(); }

    int stageOfSymbol(int symbol) const {
        for (const auto& st : stages_)
            for (int s : st.symbols)
                if (s == symbol) return st.id;
        throw Error("stageOfSymbol: unknown symbol");
    }

    bool isBinary() const {
        for (const auto& st : stages_)
            if (st.symbols.size() != 2) return false;
        return true;
    }

    /// Child of `v` reached by composition K.
    int child(int v, const std::vector<int>& comp) const {
        const auto& nd = nodes_[v];
        for (std::size_t c = 0; c < nd.comps.size(); ++c)
            if (nd.comps[c] == comp) return nd.children[c];
        throw Error("child: no such composition");
    }

    /// Sum of atom quantities over the subtree below `v` (the event [v]).
    template <typename T>
    T subtreeSum(int v, const std::vector<T>& perAtom) const {
        T total{};
        for (std::size_t a = nodes_[v].atomLo; a < nodes_[v].atomHi; ++a) total += perAtom[a];
        return total;
    }

  private:
    int addNode(const NodeSpec& spec, int parent, int level, std::vector<bool>& stagesOnPath) {
        int id = static_cast<int>(nodes_.size());
        nodes_.push_back(TreeNode{});
        nodes_[id].parent = parent;
        nodes_[id].level = level;
        if (spec.stage < 0) return id;

        if (spec.stage >= static_cast<int>(stages_.size()))
            throw Error("build: stage id out of range");
        if (spec.degree < 1) throw Error("build: floret degree must be >= 1");
        if (stagesOnPath[spec.stage])
            throw StageReuseOnPath("build: stage " + std::to_string(spec.stage) +
                                   " repeated along a root-to-leaf path");
        nodes_[id].stage = spec.stage;
        nodes_[id].degree = spec.degree;

        auto comps = compositions_desc(spec.degree,
                                       static_cast<int>(stages_[spec.stage].symbols.size()));
        if (!spec.children.empty() && spec.children.size() != comps.size())
            throw NonBijectiveLabelling("build: node needs " + std::to_string(comps.size()) +
                                        " children, got " + std::to_string(spec.children.size()));

        stagesOnPath[spec.stage] = true;
        for (std::size_t c = 0; c < comps.size(); ++c) {
            const NodeSpec& childSpec = spec.children.empty() ? NodeSpec{} : spec.children[c];
            int cid = addNode(childSpec, id, level + 1, stagesOnPath);
            nodes_[id].children.push_back(cid);
            nodes_[id].comps.push_back(comps[c]);
        }
        stagesOnPath[spec.stage] = false;
        return id;
    }

    void computeAtoms() {
        std::vector<int> exps(symbolNames_.size(), 0);
        BigInt coeff(1);
        dfsAtoms(0, exps, coeff);
    }

    void dfsAtoms(int v, std::vector<int>& exps, BigInt& coeff) {
        nodes_[v].atomLo = atoms_.size();
        if (nodes_[v].isLeaf()) {
            atoms_.push_back(Atom{v, coeff, exps});
        } else {
            const auto& syms = stages_[nodes_[v].stage].symbols;
            for (std::size_t c = 0; c < nodes_[v].children.size(); ++c) {
                const auto& comp = nodes_[v].comps[c];
                BigInt mult = multinomial(comp);
                for (std::size_t q = 0; q < syms.size(); ++q) exps[syms[q]] += comp[q];
                coeff *= mult;
                dfsAtoms(nodes_[v].children[c], exps, coeff);
                coeff /= mult;
                for (std::size_t q = 0; q < syms.size(); ++q) exps[syms[q]] -= comp[q];
            }
        }
        nodes_[v].atomHi = atoms_.size();
    }

    std::vector<std::string> symbolNames_;
    std::vector<Stage> stages_;
    std::vector<TreeNode> nodes_;
    std::vector<Atom> atoms_;
};

/// Checks the stagewise sum-to-one and positivity constraints on theta.
inline void check_theta(const StagedTree& tree, const std::vector<Rat>& theta) {
    if (theta.size() != tree.symbolCount()) throw Error("theta: size mismatch");
    for (const auto& t : theta)
        if (t.sign() <= 0 || t >= Rat(1)) throw Error("theta: entries must lie in (0,1)");
    for (const auto& st : tree.stages()) {
        Rat sum(0);
        for (int s : st.symbols) sum += theta[s];
        if (sum != Rat(1)) throw Error("theta: stage " + std::to_string(st.id) + " does not sum to 1");
    }
}

/// p_j = c_j * prod_i theta_i^{a_ij}; exact, sums to 1 over all atoms.
inline std::vector<Rat> parametrize(const StagedTree& tree, const std::vector<Rat>& theta) {
    check_theta(tree, theta);
    std::vector<Rat> p(tree.atomCount());
    for (std::size_t j = 0; j < tree.atomCount(); ++j) {
        const auto& atom = tree.atoms()[j];
        Rat value(atom.coeff);
        for (std::size_t i = 0; i < theta.size(); ++i)
            if (atom.exponents[i] != 0) value *= rat_pow(theta[i], atom.exponents[i]);
        p[j] = value;
    }
    return p;
}

struct MleResult {
    std::vector<Rat> probs;
    std::vector<Rat> theta;
    bool boundary = false;  // some estimated parameter is 0 (input had zero blocks)
};

/**
 * Closed-form maximum likelihood estimate: per stage, theta_i is the fraction
 * of exponent-weighted counts landing on symbol i; probabilities follow by
 * substitution. Exact in the counts.
 */
inline MleResult rational_mle(const StagedTree& tree, const std::vector<BigInt>& u) {
    if (u.size() != tree.atomCount()) throw Error("rational_mle: count size mismatch");
    bool anyPositive = false;
    for (const auto& x : u) {
        if (x < 0) throw Error("rational_mle: negative count");
        if (x > 0) anyPositive = true;
    }
    if (!anyPositive) throw Error("rational_mle: all counts zero");

    std::vector<BigInt> symbolTotals(tree.symbolCount(), BigInt(0));
    for (std::size_t j = 0; j < u.size(); ++j)
        for (std::size_t i = 0; i < tree.symbolCount(); ++i)
            symbolTotals[i] += u[j] * tree.atoms()[j].exponents[i];

    MleResult result;
    result.theta.assign(tree.symbolCount(), Rat(0));
    for (const auto& st : tree.stages()) {
        BigInt denom(0);
        for (int s : st.symbols) denom += symbolTotals[s];
        if (denom.is_zero())
            throw EmptyStageData("rational_mle: stage " + std::to_string(st.id) +
                                 " receives no data");
        for (int s : st.symbols) {
            result.theta[s] = Rat(symbolTotals[s], denom);
            if (result.theta[s].is_zero()) result.boundary = true;
        }
    }
    result.probs.resize(tree.atomCount());
    for (std::size_t j = 0; j < tree.atomCount(); ++j) {
        const auto& atom = tree.atoms()[j];
        Rat value(atom.coeff);
        for (std::size_t i = 0; i < tree.symbolCount(); ++i)
            if (atom.exponents[i] != 0) value *= rat_pow(result.theta[i], atom.exponents[i]);
        result.probs[j] = value;
    }
    return result;
}

/**
 * The Horn pair realizing the closed-form MLE: one row per symbol (exponent
 * counts) and one negative row per stage (minus the stage's exponent total),
 * with lambda_j = (-1)^{sum_i a_ij} c_j. Columns follow the atom order.
 */
inline HornPair tree_horn_pair(const StagedTree& tree) {
    std::size_t n = tree.atomCount(), s = tree.symbolCount();
    HornPair pair;
    pair.H = IntMatrix(s + tree.stages().size(), n);
    pair.lambda.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        const auto& atom = tree.atoms()[j];
        long totalDeg = 0;
        for (std::size_t i = 0; i < s; ++i) {
            pair.H.at(i, j) = atom.exponents[i];
            totalDeg += atom.exponents[i];
        }
        for (const auto& st : tree.stages()) {
            BigInt stageSum(0);
            for (int sym : st.symbols) stageSum += atom.exponents[sym];
            pair.H.at(s + st.id, j) = -stageSum;
        }
        pair.lambda[j] = Rat(atom.coeff) * ((totalDeg % 2 == 0) ? 1 : -1);
    }
    pair.check();
    return pair;
}

/// Interpolating polynomial of a vertex: sum over descending paths of the
/// products of edge labels; 1 at leaves. Evaluates to 1 on the parameter space.
inline MPoly interpolating_poly(const StagedTree& tree, int v) {
    const auto& nd = tree.node(v);
    if (nd.isLeaf()) return MPoly::constant(Rat(1), tree.symbolNames());
    const auto& syms = tree.stages()[nd.stage].symbols;
    MPoly total(tree.symbolNames());
    for (std::size_t c = 0; c < nd.children.size(); ++c) {
        const auto& comp = nd.comps[c];
        std::vector<int> exps(tree.symbolCount(), 0);
        for (std::size_t q = 0; q < syms.size(); ++q) exps[syms[q]] = comp[q];
        MPoly label = MPoly::monomial(Rat(multinomial(comp)), tree.symbolNames(), exps);
        total = total + label * interpolating_poly(tree, nd.children[c]);
    }
    return total;
}

struct BalanceReport {
    bool balanced = true;
    std::string witness;  // human-readable description of the first violated identity
};

namespace detail {

inline std::string comp_str(const std::vector<int>& k) {
    std::string s = "(";
    for (std::size_t i = 0; i < k.size(); ++i) s += (i ? "," : "") + std::to_string(k[i]);
    return s + ")";
}

inline std::vector<int> comp_sum(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> s(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
    return s;
}

}  // namespace detail

/**
 * Exact polynomial balance test: at every vertex, products of interpolating
 * polynomials of children agree across compositions with equal sums, and the
 * analogous identities hold across every pair of vertices in the same stage.
 * Non-binary florets are handled up to degree 4.
 */
inline BalanceReport is_balanced(const StagedTree& tree) {
    BalanceReport report;
    std::vector<MPoly> tpoly(tree.nodes().size());
    for (std::size_t v = 0; v < tree.nodes().size(); ++v)
        tpoly[v] = interpolating_poly(tree, static_cast<int>(v));

    // Vertex condition: sum-grouped pairs of children have equal t-products.
    for (std::size_t v = 0; v < tree.nodes().size(); ++v) {
        const auto& nd = tree.node(static_cast<int>(v));
        if (nd.isLeaf()) continue;
        std::size_t q = tree.stages()[nd.stage].symbols.size();
        if (q > 2 && nd.degree > 4)
            throw UnsupportedSize("is_balanced: floret of size " + std::to_string(q) +
                                  " and degree " + std::to_string(nd.degree));
        std::map<std::vector<int>, std::vector<std::pair<std::size_t, std::size_t>>> groups;
        for (std::size_t c1 = 0; c1 < nd.children.size(); ++c1)
            for (std::size_t c2 = c1; c2 < nd.children.size(); ++c2)
                groups[detail::comp_sum(nd.comps[c1], nd.comps[c2])].push_back({c1, c2});
        for (const auto& [sum, pairs] : groups) {
            if (pairs.size() < 2) continue;
            MPoly ref = tpoly[nd.children[pairs[0].first]] * tpoly[nd.children[pairs[0].second]];
            for (std::size_t t = 1; t < pairs.size(); ++t) {
                MPoly other =
                    tpoly[nd.children[pairs[t].first]] * tpoly[nd.children[pairs[t].second]];
                if (other != ref) {
                    report.balanced = false;
                    report.witness = "vertex " + std::to_string(v) + ": t(v" +
                                     detail::comp_str(nd.comps[pairs[0].first]) + ")t(v" +
                                     detail::comp_str(nd.comps[pairs[0].second]) + ") != t(v" +
                                     detail::comp_str(nd.comps[pairs[t].first]) + ")t(v" +
                                     detail::comp_str(nd.comps[pairs[t].second]) + ")";
                    return report;
                }
            }
        }
    }

    // Stage condition: same for mixed pairs of children across two vertices
    // in the same stage.
    for (std::size_t v = 0; v < tree.nodes().size(); ++v) {
        for (std::size_t w = v + 1; w < tree.nodes().size(); ++w) {
            const auto& nv = tree.node(static_cast<int>(v));
            const auto& nw = tree.node(static_cast<int>(w));
            if (nv.isLeaf() || nw.isLeaf() || nv.stage != nw.stage) continue;
            std::size_t q = tree.stages()[nv.stage].symbols.size();
            if (q > 2 && std::max(nv.degree, nw.degree) > 4)
                throw UnsupportedSize("is_balanced: stage pair with floret degree > 4");
            std::map<std::vector<int>, std::vector<std::pair<std::size_t, std::size_t>>> groups;
            for (std::size_t cv = 0; cv < nv.children.size(); ++cv)
                for (std::size_t cw = 0; cw < nw.children.size(); ++cw)
                    groups[detail::comp_sum(nv.comps[cv], nw.comps[cw])].push_back({cv, cw});
            for (const auto& [sum, pairs] : groups) {
                if (pairs.size() < 2) continue;
                MPoly ref = tpoly[nv.children[pairs[0].first]] * tpoly[nw.children[pairs[0].second]];
                for (std::size_t t = 1; t < pairs.size(); ++t) {
                    MPoly other =
                        tpoly[nv.children[pairs[t].first]] * tpoly[nw.children[pairs[t].second]];
                    if (other != ref) {
                        report.balanced = false;
                        report.witness =
                            "stage pair (" + std::to_string(v) + "," + std::to_string(w) +
                            "): t(v" + detail::comp_str(nv.comps[pairs[0].first]) + ")t(w" +
                            detail::comp_str(nw.comps[pairs[0].second]) + ") != t(v" +
                            detail::comp_str(nv.comps[pairs[t].first]) + ")t(w" +
                            detail::comp_str(nw.comps[pairs[t].second]) + ")";
                        return report;
                    }
                }
            }
        }
    }
    return report;
}

/// Indeterminate names P0..P{n-1}, one per atom.
inline std::vector<std::string> outcome_symbols(const StagedTree& tree) {
    std::vector<std::string> names;
    names.reserve(tree.atomCount());
    for (std::size_t j = 0; j < tree.atomCount(); ++j) names.push_back("P" + std::to_string(j));
    return names;
}

namespace detail {

/// P_[v] = sum of outcome indeterminates over paths through v.
inline MPoly outcome_event(const StagedTree& tree, int v,
                           const std::vector<std::string>& names) {
    MPoly p(names);
    for (std::size_t a = tree.node(v).atomLo; a < tree.node(v).atomHi; ++a) {
        std::vector<int> e(names.size(), 0);
        e[a] = 1;
        p.addTerm(e, Rat(1));
    }
    return p;
}

}  // namespace detail

/**
 * Generators of the ideal of model invariants in the outcome indeterminates:
 * the cross-vertex stage relations, the per-vertex quadratic relations among
 * children with equal composition sums, and 1 - sum P_j.
 */
inline std::vector<MPoly> model_invariant_generators(const StagedTree& tree) {
    auto names = outcome_symbols(tree);
    std::vector<MPoly> gens;

    // Stage relations: for v, w in the same stage and each symbol slot q,
    //   deg(w) P_[w] (sum_{K: k_q>=1} k_q P_[v(K)]) = deg(v) P_[v] (...same for w...)
    for (std::size_t v = 0; v < tree.nodes().size(); ++v) {
        for (std::size_t w = v + 1; w < tree.nodes().size(); ++w) {
            const auto& nv = tree.node(static_cast<int>(v));
            const auto& nw = tree.node(static_cast<int>(w));
            if (nv.isLeaf() || nw.isLeaf() || nv.stage != nw.stage) continue;
            std::size_t q = tree.stages()[nv.stage].symbols.size();
            MPoly pv = detail::outcome_event(tree, static_cast<int>(v), names);
            MPoly pw = detail::outcome_event(tree, static_cast<int>(w), names);
            for (std::size_t slot = 0; slot < q; ++slot) {
                MPoly sv(names), sw(names);
                for (std::size_t c = 0; c < nv.children.size(); ++c)
                    if (nv.comps[c][slot] >= 1)
                        sv = sv + Rat(nv.comps[c][slot]) *
                                      detail::outcome_event(tree, nv.children[c], names);
                for (std::size_t c = 0; c < nw.children.size(); ++c)
                    if (nw.comps[c][slot] >= 1)
                        sw = sw + Rat(nw.comps[c][slot]) *
                                      detail::outcome_event(tree, nw.children[c], names);
                gens.push_back(Rat(nw.degree) * pw * sv - Rat(nv.degree) * pv * sw);
            }
        }
    }

    // Vertex relations: C_{(K3,K4)} P_[v(K1)]P_[v(K2)] - C_{(K1,K2)} P_[v(K3)]P_[v(K4)]
    // whenever K1+K2 = K3+K4.
    for (std::size_t v = 0; v < tree.nodes().size(); ++v) {
        const auto& nd = tree.node(static_cast<int>(v));
        if (nd.isLeaf()) continue;
        std::map<std::vector<int>, std::vector<std::pair<std::size_t, std::size_t>>> groups;
        for (std::size_t c1 = 0; c1 < nd.children.size(); ++c1)
            for (std::size_t c2 = c1; c2 < nd.children.size(); ++c2)
                groups[detail::comp_sum(nd.comps[c1], nd.comps[c2])].push_back({c1, c2});
        for (const auto& [sum, pairs] : groups) {
            for (std::size_t t1 = 0; t1 < pairs.size(); ++t1)
                for (std::size_t t2 = t1 + 1; t2 < pairs.size(); ++t2) {
                    auto [a1, a2] = pairs[t1];
                    auto [b1, b2] = pairs[t2];
                    Rat cA(multinomial(nd.comps[a1]) * multinomial(nd.comps[a2]));
                    Rat cB(multinomial(nd.comps[b1]) * multinomial(nd.comps[b2]));
                    MPoly pa = detail::outcome_event(tree, nd.children[a1], names) *
                               detail::outcome_event(tree, nd.children[a2], names);
                    MPoly pb = detail::outcome_event(tree, nd.children[b1], names) *
                               detail::outcome_event(tree, nd.children[b2], names);
                    gens.push_back(cB * pa - cA * pb);
                }
        }
    }

    // Sum-to-one.
    MPoly one = MPoly::constant(Rat(1), names);
    MPoly total(names);
    for (std::size_t j = 0; j < tree.atomCount(); ++j) {
        std::vector<int> e(names.size(), 0);
        e[j] = 1;
        total.addTerm(e, Rat(1));
    }
    gens.push_back(one - total);
    return gens;
}

/**
 * Quadratic generators whose vanishing under the monomial substitution
 * characterizes toricness: the per-vertex family above plus the cross-vertex
 * family C_{(K',Q)} P_[v(K)]P_[w(Q')] - C_{(K,Q')} P_[v(K')]P_[w(Q)] over
 * same-stage pairs with K + Q' = K' + Q.
 */
inline std::vector<MPoly> toric_generators_J(const StagedTree& tree) {
    auto names = outcome_symbols(tree);
    std::vector<MPoly> gens;

    for (std::size_t v = 0; v < tree.nodes().size(); ++v) {
        for (std::size_t w = v + 1; w < tree.nodes().size(); ++w) {
            const auto& nv = tree.node(static_cast<int>(v));
            const auto& nw = tree.node(static_cast<int>(w));
            if (nv.isLeaf() || nw.isLeaf() || nv.stage != nw.stage) continue;
            std::map<std::vector<int>, std::vector<std::pair<std::size_t, std::size_t>>> groups;
            for (std::size_t cv = 0; cv < nv.children.size(); ++cv)
                for (std::size_t cw = 0; cw < nw.children.size(); ++cw)
                    groups[detail::comp_sum(nv.comps[cv], nw.comps[cw])].push_back({cv, cw});
            for (const auto& [sum, pairs] : groups) {
                for (std::size_t t1 = 0; t1 < pairs.size(); ++t1)
                    for (std::size_t t2 = t1 + 1; t2 < pairs.size(); ++t2) {
                        auto [k, qp] = pairs[t1];   // (K, Q')
                        auto [kp, qq] = pairs[t2];  // (K', Q)
                        Rat cKQp(multinomial(nv.comps[k]) * multinomial(nw.comps[qp]));
                        Rat cKpQ(multinomial(nv.comps[kp]) * multinomial(nw.comps[qq]));
                        MPoly lhs = detail::outcome_event(tree, nv.children[k], names) *
                                    detail::outcome_event(tree, nw.children[qp], names);
                        MPoly rhs = detail::outcome_event(tree, nv.children[kp], names) *
                                    detail::outcome_event(tree, nw.children[qq], names);
                        gens.push_back(cKpQ * lhs - cKQp * rhs);
                    }
            }
        }
    }

    for (std::size_t v = 0; v < tree.nodes().size(); ++v) {
        const auto& nd = tree.node(static_cast<int>(v));
        if (nd.isLeaf()) continue;
        std::map<std::vector<int>, std::vector<std::pair<std::size_t, std::size_t>>> groups;
        for (std::size_t c1 = 0; c1 < nd.children.size(); ++c1)
            for (std::size_t c2 = c1; c2 < nd.children.size(); ++c2)
                groups[detail::comp_sum(nd.comps[c1], nd.comps[c2])].push_back({c1, c2});
        for (const auto& [sum, pairs] : groups) {
            for (std::size_t t1 = 0; t1 < pairs.size(); ++t1)
                for (std::size_t t2 = t1 + 1; t2 < pairs.size(); ++t2) {
                    auto [a1, a2] = pairs[t1];
                    auto [b1, b2] = pairs[t2];
                    Rat cA(multinomial(nd.comps[a1]) * multinomial(nd.comps[a2]));
                    Rat cB(multinomial(nd.comps[b1]) * multinomial(nd.comps[b2]));
                    MPoly pa = detail::outcome_event(tree, nd.children[a1], names) *
                               detail::outcome_event(tree, nd.children[a2], names);
                    MPoly pb = detail::outcome_event(tree, nd.children[b1], names) *
                               detail::outcome_event(tree, nd.children[b2], names);
                    gens.push_back(cB * pa - cA * pb);
                }
        }
    }
    return gens;
}

/// Samples theta with numerators over a fixed prime denominator, the last
/// coordinate of each stage set by difference (rejecting non-positive picks).
inline std::vector<Rat> random_theta(const StagedTree& tree, Rng& rng, long denominator = 97) {
    std::vector<Rat> theta(tree.symbolCount());
    for (const auto& st : tree.stages()) {
        while (true) {
            long used = 0;
            bool ok = true;
            for (std::size_t q = 0; q + 1 < st.symbols.size(); ++q) {
                long pick = rng.randInt(1, denominator - 1);
                theta[st.symbols[q]] = Rat(pick, denominator);
                used += pick;
            }
            long last = denominator - used;
            if (last <= 0) ok = false;
            if (ok) {
                theta[st.symbols.back()] = Rat(last, denominator);
                break;
            }
        }
    }
    return theta;
}

/// Evaluates every polynomial at sampleCount random model points; true when
/// all vanish exactly.
inline bool vanishing_check(const std::vector<MPoly>& polys, const StagedTree& tree,
                            long sampleCount, std::uint64_t seed = 0) {
    Rng rng(seed);
    for (long s = 0; s < sampleCount; ++s) {
        auto theta = random_theta(tree, rng);
        auto probs = parametrize(tree, theta);
        std::map<std::string, Rat> point;
        for (std::size_t j = 0; j < probs.size(); ++j) point["P" + std::to_string(j)] = probs[j];
        for (const auto& poly : polys)
            if (!poly.eval(point).is_zero()) return false;
    }
    return true;
}

/// Substitutes P_j -> c_j prod s_i^{a_ij} and expands; returns the index of
/// the first polynomial that does not vanish identically, if any. This is a
/// complete membership decision for the monomial parametrisation.
inline std::optional<std::size_t> symbolic_vanishing_failure(const std::vector<MPoly>& polys,
                                                             const StagedTree& tree) {
    std::map<std::string, MPoly> sub;
    for (std::size_t j = 0; j < tree.atomCount(); ++j) {
        const auto& atom = tree.atoms()[j];
        sub["P" + std::to_string(j)] =
            MPoly::monomial(Rat(atom.coeff), tree.symbolNames(), atom.exponents);
    }
    for (std::size_t g = 0; g < polys.size(); ++g)
        if (!polys[g].substitute(sub).isZero()) return g;
    return std::nullopt;
}

/**
 * Exact identity checks relating a vertex's local floret to the model
 * probabilities, evaluated at random interior parameter points: transition
 * ratios, the quadratic child relations, parameter recovery, the cross-vertex
 * stage relation, and (for binary florets) the power identities on the
 * weighted child sums l1, l2.
 */
inline bool floret_identities(const StagedTree& tree, int v, long sampleCount,
                              std::uint64_t seed = 0) {
    const auto& nd = tree.node(v);
    if (nd.isLeaf()) throw Error("floret_identities: v must be a non-leaf");
    const auto& syms = tree.stages()[nd.stage].symbols;
    std::size_t q = syms.size();
    long a = nd.degree;
    Rng rng(seed);

    for (long s = 0; s < sampleCount; ++s) {
        auto theta = random_theta(tree, rng);
        auto probs = parametrize(tree, theta);
        auto pOf = [&](int node) { return tree.subtreeSum(node, probs); };
        Rat pv = pOf(v);

        // (1) transition ratios p_[v(K)]/p_[v] = (a choose K) theta^K
        for (std::size_t c = 0; c < nd.children.size(); ++c) {
            Rat expected(multinomial(nd.comps[c]));
            for (std::size_t t = 0; t < q; ++t)
                expected *= rat_pow(theta[syms[t]], nd.comps[c][t]);
            if (pOf(nd.children[c]) != pv * expected) return false;
        }

        // (2) quadratic relations among children with equal composition sums
        std::map<std::vector<int>, std::vector<std::pair<std::size_t, std::size_t>>> groups;
        for (std::size_t c1 = 0; c1 < nd.children.size(); ++c1)
            for (std::size_t c2 = c1; c2 < nd.children.size(); ++c2)
                groups[detail::comp_sum(nd.comps[c1], nd.comps[c2])].push_back({c1, c2});
        for (const auto& [sum, pairs] : groups)
            for (std::size_t t = 1; t < pairs.size(); ++t) {
                auto [a1, a2] = pairs[0];
                auto [b1, b2] = pairs[t];
                Rat cA(multinomial(nd.comps[a1]) * multinomial(nd.comps[a2]));
                Rat cB(multinomial(nd.comps[b1]) * multinomial(nd.comps[b2]));
                if (cB * pOf(nd.children[a1]) * pOf(nd.children[a2]) !=
                    cA * pOf(nd.children[b1]) * pOf(nd.children[b2]))
                    return false;
            }

        // (3) parameter recovery theta_q = sum_{K, k_q>=1} k_q p_[v(K)] / (a p_[v])
        for (std::size_t slot = 0; slot < q; ++slot) {
            Rat acc(0);
            for (std::size_t c = 0; c < nd.children.size(); ++c)
                if (nd.comps[c][slot] >= 1) acc += Rat(nd.comps[c][slot]) * pOf(nd.children[c]);
            if (acc != Rat(a) * pv * theta[syms[slot]]) return false;
        }

        // (4) cross relation against every other vertex in the same stage
        for (std::size_t w = 0; w < tree.nodes().size(); ++w) {
            const auto& nw = tree.node(static_cast<int>(w));
            if (static_cast<int>(w) == v || nw.isLeaf() || nw.stage != nd.stage) continue;
            Rat pw = pOf(static_cast<int>(w));
            for (std::size_t slot = 0; slot < q; ++slot) {
                Rat accV(0), accW(0);
                for (std::size_t c = 0; c < nd.children.size(); ++c)
                    if (nd.comps[c][slot] >= 1)
                        accV += Rat(nd.comps[c][slot]) * pOf(nd.children[c]);
                for (std::size_t c = 0; c < nw.children.size(); ++c)
                    if (nw.comps[c][slot] >= 1)
                        accW += Rat(nw.comps[c][slot]) * pOf(nw.children[c]);
                if (Rat(nw.degree) * pw * accV != Rat(a) * pv * accW) return false;
            }
        }

        // (5) binary power identities in l1, l2
        if (q == 2) {
            auto childAt = [&](int k) {  // child with composition (k, a-k)
                return tree.child(v, {k, static_cast<int>(a) - k});
            };
            Rat l1(0), l2(0);
            for (int k = 1; k <= a; ++k) {
                l1 += Rat(k) * pOf(childAt(k));
                l2 += Rat(k) * pOf(childAt(static_cast<int>(a) - k));
            }
            if (l1 + l2 != Rat(a) * pv) return false;
            for (int k0 = 0; k0 <= a; ++k0) {
                Rat pk0 = pOf(childAt(k0));
                for (int k = 1; k <= a - k0; ++k) {
                    Rat lhs = Rat(binomial(a, k0 + k)) * pk0 * rat_pow(l1, k0 + k) *
                              rat_pow(l2, a - (k0 + k));
                    Rat rhs = Rat(binomial(a, k0)) * pOf(childAt(k0 + k)) * rat_pow(l1, k0) *
                              rat_pow(l2, a - k0);
                    if (lhs != rhs) return false;
                }
                for (int k = 1; k <= k0; ++k) {
                    Rat lhs = Rat(binomial(a, k0 - k)) * pk0 * rat_pow(l1, k0 - k) *
                              rat_pow(l2, a - (k0 - k));
                    Rat rhs = Rat(binomial(a, k0)) * pOf(childAt(k0 - k)) * rat_pow(l1, k0) *
                              rat_pow(l2, a - k0);
                    if (lhs != rhs) return false;
                }
                // closed form: (a choose k0) (l1/(a p_v))^{k0} (l2/(a p_v))^{a-k0}
                Rat lhs = Rat(binomial(a, k0)) * rat_pow(l1 / (Rat(a) * pv), k0) *
                          rat_pow(l2 / (Rat(a) * pv), a - k0);
                if (lhs != pk0 / pv) return false;
            }
        }
    }
    return true;
}

}  // namespace rlp

#endif  // RLP_STAGED_TREE_HPP
