#ifndef RLP_ORACLE_HPP
#define RLP_ORACLE_HPP

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "rlp/rational.hpp"
#include "rlp/staged_tree.hpp"
#include "rlp/tree_geometry.hpp"

// Floating-point verification of the exact pipeline. Nothing in the rational
// code depends on this header.

namespace rlp::oracle {

struct OptimizerConfig {
    double tolerance = 1e-10;  // on the projected gradient norm
    long maxIters = 20000;
    int restarts = 5;
    std::uint64_t seed = 0;
};

struct NumericMle {
    std::vector<double> theta;
    double logLik = 0.0;
    long iterations = 0;
};

namespace detail {

inline double log_likelihood(const StagedTree& tree, const std::vector<double>& u,
                             const std::vector<double>& theta) {
    double ll = 0.0;
    for (std::size_t j = 0; j < tree.atomCount(); ++j) {
        if (u[j] == 0.0) continue;
        const auto& atom = tree.atoms()[j];
        double lp = std::log(static_cast<double>(atom.coeff));
        for (std::size_t i = 0; i < theta.size(); ++i)
            if (atom.exponents[i] != 0) lp += atom.exponents[i] * std::log(theta[i]);
        ll += u[j] * lp;
    }
    return ll;
}

/// d logL / d x for the stage-wise softmax parametrisation theta = exp(x)/Z,
/// accumulated per observation.
inline std::vector<double> softmax_gradient(const StagedTree& tree, const std::vector<double>& u,
                                            const std::vector<double>& theta) {
    std::vector<double> grad(theta.size(), 0.0);
    for (std::size_t j = 0; j < tree.atomCount(); ++j) {
        if (u[j] == 0.0) continue;
        const auto& atom = tree.atoms()[j];
        for (const auto& st : tree.stages()) {
            long stageDeg = 0;
            for (int s : st.symbols) stageDeg += atom.exponents[s];
            if (stageDeg == 0) continue;
            for (int s : st.symbols)
                grad[s] += u[j] * (atom.exponents[s] - theta[s] * stageDeg);
        }
    }
    return grad;
}

}  // namespace detail

/**
 * Numerical maximum likelihood by multiplicative (softmax mirror-ascent)
 * updates per stage with adaptive step size and multi-start. Independent of
 * the closed form: only evaluates the likelihood and its gradient.
 */
inline NumericMle numeric_mle(const StagedTree& tree, const std::vector<BigInt>& counts,
                              const OptimizerConfig& config = {}) {
    std::vector<double> u(counts.size());
    for (std::size_t j = 0; j < counts.size(); ++j) u[j] = static_cast<double>(counts[j]);

    std::mt19937_64 eng(config.seed);
    NumericMle best;
    best.logLik = -1e300;
    double bestGnorm = 1e300;

    // Per-stage gradient scale: total exponent mass the data places on the
    // stage. The ascent direction is divided by it before exponentiating.
    std::vector<double> stageScale(tree.stages().size(), 1.0);
    for (const auto& st : tree.stages()) {
        double mass = 0.0;
        for (std::size_t j = 0; j < tree.atomCount(); ++j) {
            long deg = 0;
            for (int s : st.symbols) deg += tree.atoms()[j].exponents[s];
            mass += u[j] * deg;
        }
        stageScale[st.id] = std::max(mass, 1.0);
    }

    for (int attempt = 0; attempt < config.restarts; ++attempt) {
        std::vector<double> theta(tree.symbolCount(), 0.0);
        for (const auto& st : tree.stages()) {
            double total = 0.0;
            for (int s : st.symbols) {
                theta[s] = 0.1 + 0.8 * (static_cast<double>(eng() >> 11) * 0x1.0p-53);
                total += theta[s];
            }
            for (int s : st.symbols) theta[s] /= total;
        }

        double step = 1.0;
        double ll = detail::log_likelihood(tree, u, theta);
        long iter = 0;
        double gnorm = 1e300;
        for (; iter < config.maxIters; ++iter) {
            auto grad = detail::softmax_gradient(tree, u, theta);
            gnorm = 0.0;
            for (double g : grad) gnorm += g * g;
            gnorm = std::sqrt(gnorm);
            if (gnorm <= config.tolerance) break;

            std::vector<double> trial(theta.size());
            double trialLl = -1e300;
            bool accepted = false;
            while (step > 1e-14) {
                for (const auto& st : tree.stages()) {
                    double total = 0.0;
                    for (int s : st.symbols) {
                        trial[s] = theta[s] * std::exp(step * grad[s] / stageScale[st.id]);
                        total += trial[s];
                    }
                    for (int s : st.symbols) trial[s] = std::max(trial[s] / total, 1e-300);
                }
                trialLl = detail::log_likelihood(tree, u, trial);
                // accept flat moves: near the optimum the likelihood is at
                // machine precision while the iteration still contracts theta
                if (trialLl >= ll - 1e-12 * (std::fabs(ll) + 1.0)) {
                    accepted = true;
                    break;
                }
                step *= 0.5;
            }
            if (!accepted) break;
            theta = trial;
            ll = std::max(ll, trialLl);
            step = std::min(step * 1.5, 1.0);
        }
        if (ll > best.logLik || (ll == best.logLik && gnorm < bestGnorm)) {
            best.logLik = ll;
            best.theta = theta;
            best.iterations = iter;
            bestGnorm = gnorm;
        }
    }
    if (bestGnorm > config.tolerance)
        throw NonConvergence("numeric_mle: gradient norm " + std::to_string(bestGnorm) +
                             " after " + std::to_string(best.iterations) + " iterations");
    return best;
}

inline double log_likelihood_at(const StagedTree& tree, const std::vector<BigInt>& counts,
                                const std::vector<Rat>& theta) {
    std::vector<double> u(counts.size()), th(theta.size());
    for (std::size_t j = 0; j < counts.size(); ++j) u[j] = static_cast<double>(counts[j]);
    for (std::size_t i = 0; i < theta.size(); ++i)
        th[i] = static_cast<double>(numer(theta[i])) / static_cast<double>(denom(theta[i]));
    return detail::log_likelihood(tree, u, th);
}

struct GridMle {
    std::vector<double> theta;
    double logLik = -1e300;
};

/**
 * Brute-force likelihood maximization over a parameter grid. Only available
 * for models with at most two free parameters.
 */
inline GridMle grid_mle(const StagedTree& tree, const std::vector<BigInt>& counts,
                        double resolution) {
    long freeParams = 0;
    for (const auto& st : tree.stages()) freeParams += static_cast<long>(st.symbols.size()) - 1;
    if (freeParams > 2)
        throw TooManyParams("grid_mle: " + std::to_string(freeParams) + " free parameters");
    if (!tree.isBinary()) throw TooManyParams("grid_mle: implemented for binary stages");

    std::vector<double> u(counts.size());
    for (std::size_t j = 0; j < counts.size(); ++j) u[j] = static_cast<double>(counts[j]);

    long steps = static_cast<long>(1.0 / resolution) - 1;
    GridMle best;
    std::vector<double> theta(tree.symbolCount(), 0.0);
    auto scan = [&](auto&& self, std::size_t stageIdx) -> void {
        if (stageIdx == tree.stages().size()) {
            double ll = detail::log_likelihood(tree, u, theta);
            if (ll > best.logLik) {
                best.logLik = ll;
                best.theta = theta;
            }
            return;
        }
        const auto& st = tree.stages()[stageIdx];
        for (long k = 1; k <= steps; ++k) {
            theta[st.symbols[0]] = k * resolution;
            theta[st.symbols[1]] = 1.0 - k * resolution;
            self(self, stageIdx + 1);
        }
    };
    scan(scan, 0);
    return best;
}

/**
 * Exact moment-matching check for the estimate of a balanced tree: the
 * exponent-weighted average of the fitted distribution must equal that of the
 * empirical distribution.
 */
inline bool birch_check(const StagedTree& tree, const std::vector<BigInt>& u) {
    if (!is_balanced(tree).balanced) throw NotToric("birch_check: tree is not balanced");
    auto fit = rational_mle(tree, u);
    BigInt total(0);
    for (const auto& x : u) total += x;

    for (std::size_t i = 0; i < tree.symbolCount(); ++i) {
        Rat lhs(0), rhs(0);
        for (std::size_t j = 0; j < tree.atomCount(); ++j) {
            int e = tree.atoms()[j].exponents[i];
            if (e == 0) continue;
            lhs += fit.probs[j] * e;
            rhs += Rat(u[j] * e, total);
        }
        if (lhs != rhs) return false;
    }
    return true;
}

}  // namespace rlp::oracle

#endif  // RLP_ORACLE_HPP
