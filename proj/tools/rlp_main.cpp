// Command-line interface: family constructors, Horn pair utilities, staged
// tree checks, and the minimal-matrix catalog report.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "rlp/rlp.hpp"

namespace {

using namespace rlp;

struct GlobalOptions {
    std::string format = "tsv";
    std::uint64_t seed = 0;
    long samples = 100;
};

Json loadJson(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    Json j;
    in >> j;
    return j;
}

std::string matrixTsv(const IntMatrix& m, const std::vector<std::string>& rowLabels) {
    std::ostringstream out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (!rowLabels.empty()) out << rowLabels[i] << '\t';
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out << '\t';
            out << m.at(i, j);
        }
        out << '\n';
    }
    return out.str();
}

std::string hornTsv(const HornPair& pair, const std::vector<std::string>& rowLabels) {
    std::ostringstream out;
    out << matrixTsv(pair.H, rowLabels);
    if (!rowLabels.empty()) out << "lambda\t";
    for (std::size_t j = 0; j < pair.lambda.size(); ++j) {
        if (j) out << '\t';
        out << rat_to_string(pair.lambda[j]);
    }
    out << '\n';
    return out.str();
}

void emitHorn(const HornPair& pair, const std::vector<std::string>& rowLabels,
              const GlobalOptions& opts) {
    if (opts.format == "json")
        std::cout << horn_to_json(pair).dump(2) << '\n';
    else
        std::cout << hornTsv(pair, rowLabels);
}

std::vector<std::string> treeRowLabels(const StagedTree& tree) {
    std::vector<std::string> labels = tree.symbolNames();
    for (const auto& st : tree.stages()) {
        std::string lab = "-(";
        for (std::size_t q = 0; q < st.symbols.size(); ++q)
            lab += (q ? "+" : "") + tree.symbolNames()[st.symbols[q]];
        labels.push_back(lab + ")");
    }
    return labels;
}

std::vector<std::string> indexLabels(std::size_t n, const std::string& prefix) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(i + 1));
    return labels;
}

int runFamily2d(const std::string& action, const Params2D& p, const GlobalOptions& opts) {
    if (action == "horn") {
        emitHorn(horn_2d(p), horn_2d_row_labels(), opts);
        return 0;
    }
    if (action == "tree") {
        std::cout << tree_to_json(tree_2d(p)).dump(2) << '\n';
        return 0;
    }
    if (action == "check-strict") {
        auto fam = pair_2d(p);
        auto pp = family_polytope(fam.points);
        auto check = strict_linear_precision_check(pp.poly, fam.weights);
        Json j;
        j["nP_zero"] = check.nPZero;
        j["betaw_constant"] = check.betaConstant;
        if (check.c) j["c"] = rat_to_string(*check.c);
        j["strict"] = check.nPZero && check.betaConstant;
        std::cout << j.dump(2) << '\n';
        return 0;
    }
    if (action == "check-M") {
        auto fam = pair_2d(p);
        auto mm = matrix_M(family_polytope(fam.points).poly);
        auto lhs = minimize(horn_2d(p)).H.rowSorted();
        auto rhs = reduce_rows(mm.M).rowSorted();
        bool equal = mm.isHorn && lhs == rhs;
        std::cout << "M_is_horn\t" << (mm.isHorn ? "true" : "false") << '\n';
        std::cout << "minimal_equals_reduced_M\t" << (lhs == rhs ? "true" : "false") << '\n';
        if (!equal) {
            std::cout << "# reduced Horn matrix\n" << matrixTsv(lhs, {});
            std::cout << "# reduced M\n" << matrixTsv(rhs, {});
        }
        return equal ? 0 : 1;
    }
    throw CLI::ValidationError("family2d: unknown action " + action);
}

int runPrismatoid(const std::string& action, const Params3D& p, const std::string& variant,
                  const GlobalOptions& opts) {
    if (action == "horn") {
        emitHorn(horn_3d(p), horn_3d_row_labels(), opts);
        return 0;
    }
    if (action == "tree") {
        StagedTree t = variant.empty() ? tree_3d(p)
                                       : family_tree_3d(p, parse_tree_variant(variant));
        std::cout << tree_to_json(t).dump(2) << '\n';
        return 0;
    }
    if (action == "catalog") {
        auto result = catalog_check(p);
        std::cout << result.subfamily << '\t' << (result.match ? "match" : "MISMATCH") << '\t'
                  << result.rows << 'x' << result.cols << '\n';
        return result.match ? 0 : 1;
    }
    throw CLI::ValidationError("prismatoid: unknown action " + action);
}

int runTree(const std::string& action, const std::string& inPath, const std::string& countsPath,
            const GlobalOptions& opts) {
    StagedTree tree = tree_from_json(loadJson(inPath));
    if (action == "horn") {
        emitHorn(tree_horn_pair(tree), treeRowLabels(tree), opts);
        return 0;
    }
    if (action == "mle") {
        if (countsPath.empty()) throw CLI::ValidationError("tree mle requires --counts");
        auto u = counts_from_json(loadJson(countsPath));
        auto fit = rational_mle(tree, u);
        if (opts.format == "json") {
            Json j;
            Json probs = Json::array(), theta = Json::array();
            for (const auto& x : fit.probs) probs.push_back(rat_to_string(x));
            for (const auto& x : fit.theta) theta.push_back(rat_to_string(x));
            j["probs"] = probs;
            j["theta"] = theta;
            j["boundary"] = fit.boundary;
            std::cout << j.dump(2) << '\n';
        } else {
            std::cout << "probs";
            for (const auto& x : fit.probs) std::cout << '\t' << rat_to_string(x);
            std::cout << "\ntheta";
            for (const auto& x : fit.theta) std::cout << '\t' << rat_to_string(x);
            std::cout << "\nboundary\t" << (fit.boundary ? "true" : "false") << '\n';
        }
        return 0;
    }
    if (action == "balanced") {
        auto report = is_balanced(tree);
        std::cout << (report.balanced ? "balanced" : "unbalanced") << '\n';
        if (!report.balanced) std::cout << report.witness << '\n';
        return report.balanced ? 0 : 1;
    }
    if (action == "invariants") {
        auto gens = model_invariant_generators(tree);
        bool ok = vanishing_check(gens, tree, opts.samples, opts.seed);
        std::cout << gens.size() << " generators\t"
                  << (ok ? "all vanish" : "NON-VANISHING generator found") << '\n';
        return ok ? 0 : 1;
    }
    if (action == "star" || action == "simple" || action == "collections") {
        auto tp = polytope_of_tree(tree);
        auto star = property_star(tree, tp);
        if (action == "star") {
            std::cout << "ld_match\t" << (star.ldMatch ? "true" : "false") << '\n';
            std::cout << "vertex_char_match\t" << (star.vertexCharMatch ? "true" : "false")
                      << '\n';
            if (!star.note.empty()) std::cout << "note\t" << star.note << '\n';
            for (const auto& [sym, facet] : star.symbolToFacet)
                std::cout << tree.symbolNames()[sym] << "\th" << (facet + 1) << '\n';
            return star.holds ? 0 : 1;
        }
        if (action == "simple") {
            auto rep = simpleness_via_tree(tree, tp, star);
            std::cout << "via_tree\t" << (rep.viaTree ? "true" : "false") << '\n';
            std::cout << "direct\t" << (rep.direct ? "true" : "false") << '\n';
            std::cout << "consistent\t" << (rep.consistent ? "true" : "false") << '\n';
            return rep.consistent ? 0 : 1;
        }
        auto rep = stages_equal_primitive_collections(tree, tp, star);
        for (std::size_t s = 0; s < rep.stageFacetSets.size(); ++s) {
            std::cout << "stage" << s;
            for (int f : rep.stageFacetSets[s]) std::cout << "\th" << (f + 1);
            std::cout << '\n';
        }
        std::cout << "stages_match_collections\t"
                  << (rep.stagesMatchCollections ? "true" : "false") << '\n';
        std::cout << "minimal_equals_M\t" << (rep.minimalEqualsM ? "true" : "false") << '\n';
        return rep.stagesMatchCollections ? 0 : 1;
    }
    if (action == "appendixB") {
        bool all = true;
        for (std::size_t v = 0; v < tree.nodes().size(); ++v) {
            if (tree.node(static_cast<int>(v)).isLeaf()) continue;
            bool ok = floret_identities(tree, static_cast<int>(v), opts.samples, opts.seed);
            std::cout << "vertex " << v << '\t' << (ok ? "pass" : "FAIL") << '\n';
            all = all && ok;
        }
        return all ? 0 : 1;
    }
    throw CLI::ValidationError("tree: unknown action " + action);
}

int runPolytope(const std::string& action, const std::string& inPath,
                const GlobalOptions& opts) {
    auto P = polytope_from_json(loadJson(inPath));
    if (action == "ldm") {
        auto m = lattice_distance_matrix(P);
        if (opts.format == "json") {
            Json rows = Json::array();
            for (std::size_t i = 0; i < m.rows(); ++i) {
                Json row = Json::array();
                for (std::size_t j = 0; j < m.cols(); ++j)
                    row.push_back(static_cast<long long>(m.at(i, j)));
                rows.push_back(row);
            }
            std::cout << rows.dump(2) << '\n';
        } else {
            std::cout << matrixTsv(m, indexLabels(m.rows(), "h"));
        }
        return 0;
    }
    if (action == "primitive") {
        for (const auto& coll : primitive_collections(normal_fan(P))) {
            for (std::size_t i = 0; i < coll.size(); ++i)
                std::cout << (i ? "\t" : "") << "n" << (coll[i] + 1);
            std::cout << '\n';
        }
        return 0;
    }
    if (action == "M") {
        auto mm = matrix_M(P);
        std::vector<std::string> labels = indexLabels(mm.facetRows, "h");
        for (const auto& coll : mm.collections) {
            std::string lab = "-(";
            for (std::size_t i = 0; i < coll.size(); ++i)
                lab += (i ? "+h" : "h") + std::to_string(coll[i] + 1);
            labels.push_back(lab + ")");
        }
        std::cout << matrixTsv(mm.M, labels);
        std::cout << "is_horn\t" << (mm.isHorn ? "true" : "false") << '\n';
        return 0;
    }
    throw CLI::ValidationError("polytope: unknown action " + action);
}

int runHorn(const std::string& action, const std::string& inPath, const std::string& uPath,
            const GlobalOptions& opts) {
    auto pair = horn_from_json(loadJson(inPath));
    if (action == "validate") {
        auto result = validate_horn_pair(pair, opts.samples, opts.seed);
        if (result.ok) {
            std::cout << "valid\t" << result.samplesRun << " samples\n";
            return 0;
        }
        std::cout << "INVALID\t" << result.failure << "\nu";
        for (const auto& x : *result.counterexample) std::cout << '\t' << x;
        std::cout << '\n';
        return 1;
    }
    if (action == "minimize") {
        emitHorn(minimize(pair), {}, opts);
        return 0;
    }
    if (action == "eval") {
        if (uPath.empty()) throw CLI::ValidationError("horn eval requires --u");
        auto u = counts_from_json(loadJson(uPath));
        std::vector<Rat> ur(u.begin(), u.end());
        auto p = horn_eval(pair, ur);
        for (std::size_t j = 0; j < p.size(); ++j)
            std::cout << (j ? "\t" : "") << rat_to_string(p[j]);
        std::cout << '\n';
        return 0;
    }
    throw CLI::ValidationError("horn: unknown action " + action);
}

int runReport(int maxParam, const std::string& outPath) {
    std::ostringstream out;
    out << "a\ta2\tb\tb2\td\tl\tsubfamily\tmatch\trows\tcols\n";
    std::map<std::string, std::pair<long, long>> perRow;  // row -> (matched, total)
    for (int a = 0; a <= maxParam; ++a)
        for (int a2 = 0; a2 <= a; ++a2)
            for (int b = 0; b <= maxParam; ++b)
                for (int b2 = 0; b2 <= b; ++b2)
                    for (int d = 0; d <= maxParam; ++d)
                        for (int l = 1; l <= std::max(1, maxParam); ++l) {
                            Params3D p{a, a2, b, b2, d, l};
                            try {
                                auto result = catalog_check(p);
                                auto& tally = perRow[result.subfamily];
                                ++tally.second;
                                if (result.match) ++tally.first;
                                out << a << '\t' << a2 << '\t' << b << '\t' << b2 << '\t' << d
                                    << '\t' << l << '\t' << result.subfamily << '\t'
                                    << (result.match ? "match" : "MISMATCH") << '\t'
                                    << result.rows << '\t' << result.cols << '\n';
                            } catch (const UnclassifiedParams&) {
                                // outside every catalog row; skip
                            }
                        }
    // one line per catalog row: pass when some swept member matches; rows
    // with no members under the bound are reported as untested
    bool allRowsPass = true;
    out << "#row\tmatched\ttotal\tverdict\n";
    for (const auto& row : catalog_rows()) {
        auto it = perRow.find(row.name);
        long matched = it == perRow.end() ? 0 : it->second.first;
        long total = it == perRow.end() ? 0 : it->second.second;
        if (total > 0 && matched == 0) allRowsPass = false;
        out << row.name << '\t' << matched << '\t' << total << '\t'
            << (total == 0 ? "untested" : (matched > 0 ? "pass" : "FAIL")) << '\n';
    }
    if (outPath.empty()) {
        std::cout << out.str();
    } else {
        std::ofstream f(outPath);
        f << out.str();
        std::cout << "report written to " << outPath << '\n';
    }
    return allRowsPass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for Horn pairs, lattice polytopes and staged tree models"};
    app.require_subcommand(1);

    GlobalOptions opts;
    app.fallthrough();  // allow the global flags after a subcommand
    app.add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"tsv", "json"}));
    app.add_option("--seed", opts.seed, "random seed");
    app.add_option("--samples", opts.samples, "sample count for randomized checks");

    Params2D p2;
    std::string action2;
    auto* fam2 = app.add_subcommand("family2d", "trapezoid family (2D)");
    fam2->add_option("--a", p2.a)->required();
    fam2->add_option("--b", p2.b)->required();
    fam2->add_option("--d", p2.d)->required();
    fam2->add_option("action", action2, "horn | tree | check-strict | check-M")->required();

    Params3D p3;
    std::string action3, variant3;
    auto* fam3 = app.add_subcommand("prismatoid", "prismatoid family (3D)");
    fam3->add_option("--a", p3.a)->required();
    fam3->add_option("--a2", p3.a2)->required();
    fam3->add_option("--b", p3.b)->required();
    fam3->add_option("--b2", p3.b2)->required();
    fam3->add_option("--d", p3.d)->required();
    fam3->add_option("--l", p3.l)->required();
    fam3->add_option("--variant", variant3, "A1..A4 | star-pyramid | star-wedge");
    fam3->add_option("action", action3, "horn | tree | catalog")->required();

    std::string treeAction, treeIn, treeCounts;
    auto* treeCmd = app.add_subcommand("tree", "staged tree checks");
    treeCmd->add_option("action", treeAction,
                        "horn | mle | balanced | invariants | star | simple | collections | "
                        "appendixB")
        ->required();
    treeCmd->add_option("--in", treeIn, "tree JSON file")->required();
    treeCmd->add_option("--counts", treeCounts, "counts JSON file (for mle)");

    std::string polyAction, polyIn;
    auto* polyCmd = app.add_subcommand("polytope", "lattice polytope utilities");
    polyCmd->add_option("action", polyAction, "ldm | primitive | M")->required();
    polyCmd->add_option("--in", polyIn, "polytope JSON file")->required();

    std::string hornAction, hornIn, hornU;
    auto* hornCmd = app.add_subcommand("horn", "Horn pair utilities");
    hornCmd->add_option("action", hornAction, "validate | minimize | eval")->required();
    hornCmd->add_option("--in", hornIn, "Horn pair JSON file")->required();
    hornCmd->add_option("--u", hornU, "counts JSON file (for eval)");

    std::string reportKind, reportOut;
    int reportMax = 2;
    auto* reportCmd = app.add_subcommand("report", "batch reports");
    reportCmd->add_option("kind", reportKind, "appendixA")->required();
    reportCmd->add_option("--max-param", reportMax, "parameter bound for the sweep");
    reportCmd->add_option("--out", reportOut, "output TSV path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (fam2->parsed()) return runFamily2d(action2, p2, opts);
        if (fam3->parsed()) return runPrismatoid(action3, p3, variant3, opts);
        if (treeCmd->parsed()) return runTree(treeAction, treeIn, treeCounts, opts);
        if (polyCmd->parsed()) return runPolytope(polyAction, polyIn, opts);
        if (hornCmd->parsed()) return runHorn(hornAction, hornIn, hornU, opts);
        if (reportCmd->parsed()) {
            if (reportKind != "appendixA")
                throw CLI::ValidationError("report: unknown kind " + reportKind);
            return runReport(reportMax, reportOut);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const rlp::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
