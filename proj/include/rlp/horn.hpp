#ifndef RLP_HORN_HPP
#define RLP_HORN_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rlp/matrix.hpp"
#include "rlp/rational.hpp"
#include "rlp/rng.hpp"

namespace rlp {

/**
 * Integer matrix with zero column sums together with one nonzero rational
 * coefficient per column. Induces the rational map
 *   u |-> (lambda_j * prod_i (Hu)_i ^ H_ij)_j .
 */
struct HornPair {
    IntMatrix H;
    std::vector<Rat> lambda;

    void check() const {
        if (lambda.size() != H.cols()) throw Error("HornPair: lambda size mismatch");
        if (!H.columnSumsZero()) throw Error("HornPair: column sums not zero");
        for (const auto& l : lambda)
            if (l.is_zero()) throw Error("HornPair: zero lambda entry");
    }
};

/// Coordinate j of the Horn map: lambda_j * prod_i (Hu)_i^{H_ij}, 0^0 = 1.
/// Throws ZeroBase when some (Hu)_i vanishes against a nonzero exponent.
inline std::vector<Rat> horn_eval(const HornPair& pair, const std::vector<Rat>& u) {
    std::vector<Rat> hu = pair.H.apply(u);
    std::vector<Rat> out(pair.H.cols());
    for (std::size_t j = 0; j < pair.H.cols(); ++j) {
        Rat value = pair.lambda[j];
        for (std::size_t i = 0; i < pair.H.rows(); ++i) {
            long e = static_cast<long>(pair.H.at(i, j));
            if (e == 0) continue;
            if (hu[i].is_zero())
                throw ZeroBase("horn_eval: zero linear form at row " + std::to_string(i));
            value *= rat_pow(hu[i], e);
        }
        out[j] = value;
    }
    return out;
}

struct ValidationResult {
    bool ok = false;
    long samplesRun = 0;
    std::optional<std::vector<BigInt>> counterexample;
    std::string failure;
};

/**
 * Samples random positive integer count vectors (entries 1..100) and checks
 * that the Horn map sends each to a strictly positive vector summing to 1.
 * Each individual check is exact; a failing sample refutes the pair.
 */
inline ValidationResult validate_horn_pair(const HornPair& pair, long sampleCount,
                                           std::uint64_t seed = 0) {
    ValidationResult result;
    Rng rng(seed);
    std::size_t n = pair.H.cols(), r = pair.H.rows();
    for (long s = 0; s < sampleCount; ++s) {
        auto u = random_positive_counts(n, 1, 100, rng);
        std::vector<Rat> ur(n);
        for (std::size_t j = 0; j < n; ++j) ur[j] = Rat(u[j]);
        std::vector<Rat> hu = pair.H.apply(ur);

        // Per-row power cache; exponents repeat heavily across columns.
        std::vector<std::map<long, Rat>> powCache(r);
        Rat total(0);
        bool bad = false;
        std::string why;
        for (std::size_t j = 0; j < n && !bad; ++j) {
            Rat value = pair.lambda[j];
            for (std::size_t i = 0; i < r; ++i) {
                long e = static_cast<long>(pair.H.at(i, j));
                if (e == 0) continue;
                if (hu[i].is_zero()) {
                    bad = true;
                    why = "zero linear form against nonzero exponent";
                    break;
                }
                auto it = powCache[i].find(e);
                if (it == powCache[i].end())
                    it = powCache[i].emplace(e, rat_pow(hu[i], e)).first;
                value *= it->second;
            }
            if (bad) break;
            if (value.sign() <= 0) {
                bad = true;
                why = "non-positive coordinate " + std::to_string(j) + " = " + rat_to_string(value);
            }
            total += value;
        }
        if (!bad && total != Rat(1)) {
            bad = true;
            why = "coordinates sum to " + rat_to_string(total);
        }
        result.samplesRun = s + 1;
        if (bad) {
            result.counterexample = u;
            result.failure = why;
            return result;
        }
    }
    result.ok = true;
    return result;
}

struct MinimalityCertificate {
    bool isMinimal = false;
    std::optional<std::size_t> zeroRow;
    std::optional<std::pair<std::size_t, std::size_t>> dependentRows;
};

/// Minimal = no zero rows and no two rows linearly dependent over Q.
inline MinimalityCertificate is_minimal(const IntMatrix& H) {
    MinimalityCertificate cert;
    std::vector<std::vector<BigInt>> dirs(H.rows());
    for (std::size_t i = 0; i < H.rows(); ++i) {
        auto row = H.row(i);
        if (is_zero_vector(row)) {
            cert.zeroRow = i;
            return cert;
        }
        dirs[i] = primitive_direction(row);
    }
    for (std::size_t i = 0; i < H.rows(); ++i)
        for (std::size_t j = i + 1; j < H.rows(); ++j)
            if (dirs[i] == dirs[j]) {
                cert.dependentRows = {i, j};
                return cert;
            }
    cert.isMinimal = true;
    return cert;
}

namespace detail {

struct RowClass {
    std::vector<BigInt> dir;       // primitive direction, positive leading entry
    std::vector<BigInt> multipliers;  // row_t = multipliers[t] * dir
};

inline std::vector<RowClass> collinearity_classes(const IntMatrix& H) {
    std::vector<RowClass> classes;
    for (std::size_t i = 0; i < H.rows(); ++i) {
        auto row = H.row(i);
        if (is_zero_vector(row)) continue;  // zero rows drop with no adjustment
        auto dir = primitive_direction(row);
        // multiplier is integral: dir divides the row entrywise
        BigInt c(0);
        for (std::size_t j = 0; j < row.size(); ++j)
            if (!dir[j].is_zero()) {
                c = row[j] / dir[j];
                break;
            }
        bool found = false;
        for (auto& cls : classes)
            if (cls.dir == dir) {
                cls.multipliers.push_back(c);
                found = true;
                break;
            }
        if (!found) classes.push_back(RowClass{dir, {c}});
    }
    return classes;
}

}  // namespace detail

/// Collinear-row merging on the bare matrix: each collinearity class with a
/// nonzero multiplier sum becomes one row, zero rows and cancelling classes
/// are dropped. Used for reducing matrices that carry no coefficient vector.
inline IntMatrix reduce_rows(const IntMatrix& H) {
    IntMatrix out(0, H.cols());
    for (const auto& cls : detail::collinearity_classes(H)) {
        BigInt total(0);
        for (const auto& c : cls.multipliers) total += c;
        if (total.is_zero()) continue;
        std::vector<BigInt> row(cls.dir.size());
        for (std::size_t j = 0; j < row.size(); ++j) row[j] = total * cls.dir[j];
        out.appendRow(row);
    }
    return out;
}

/**
 * Reduces a Horn pair to its minimal form: rows are grouped into collinearity
 * classes row_t = c_t * v with v primitive, each class is replaced by
 * (sum c_t) * v (dropped when the sum vanishes), and lambda is rescaled per
 * column by prod_t c_t^{c_t v_j} / (sum c_t)^{(sum c_t) v_j} so the induced
 * map is unchanged. The identity is re-checked on sample points.
 */
inline HornPair minimize(const HornPair& pair) {
    pair.check();
    auto classes = detail::collinearity_classes(pair.H);

    HornPair out;
    out.H = IntMatrix(0, pair.H.cols());
    out.lambda = pair.lambda;
    for (const auto& cls : classes) {
        BigInt total(0);
        for (const auto& c : cls.multipliers) total += c;
        if (cls.multipliers.size() == 1 && !total.is_zero()) {
            // Bare singleton class: row survives unchanged, lambda untouched.
            std::vector<BigInt> row(cls.dir.size());
            for (std::size_t j = 0; j < row.size(); ++j) row[j] = total * cls.dir[j];
            out.H.appendRow(row);
            continue;
        }
        for (std::size_t j = 0; j < pair.H.cols(); ++j) {
            long vj = static_cast<long>(cls.dir[j]);
            if (vj == 0) continue;
            Rat factor(1);
            for (const auto& c : cls.multipliers)
                factor *= rat_pow(Rat(c), static_cast<long>(c) * vj);
            factor /= rat_pow(Rat(total), static_cast<long>(total) * vj);
            out.lambda[j] *= factor;
        }
        if (!total.is_zero()) {
            std::vector<BigInt> row(cls.dir.size());
            for (std::size_t j = 0; j < row.size(); ++j) row[j] = total * cls.dir[j];
            out.H.appendRow(row);
        }
    }
    out.check();

    // The reduction must not change the map; spot-check a few points.
    Rng rng(0x5eed);
    for (int s = 0; s < 5; ++s) {
        auto u = random_positive_counts(pair.H.cols(), 1, 50, rng);
        std::vector<Rat> ur(u.size());
        for (std::size_t j = 0; j < u.size(); ++j) ur[j] = Rat(u[j]);
        try {
            if (horn_eval(pair, ur) != horn_eval(out, ur))
                throw Error("minimize: reduction changed the Horn map");
        } catch (const ZeroBase&) {
            // original map undefined at this sample; the merged pair is its continuation
        }
    }
    return out;
}

/// Submatrix of rows with all entries >= 0. Rows mixing strict signs signal a
/// non-minimal input and are rejected.
inline IntMatrix positive_part(const IntMatrix& H) {
    IntMatrix out(0, H.cols());
    for (std::size_t i = 0; i < H.rows(); ++i) {
        auto row = H.row(i);
        bool hasPos = false, hasNeg = false;
        for (const auto& x : row) {
            if (x > 0) hasPos = true;
            if (x < 0) hasNeg = true;
        }
        if (hasPos && hasNeg)
            throw MixedSignRow("positive_part: row " + std::to_string(i) + " mixes signs");
        if (!hasNeg) out.appendRow(row);
    }
    return out;
}

/// Complement of positive_part: rows with all entries <= 0 and not all zero.
inline IntMatrix negative_part(const IntMatrix& H) {
    IntMatrix out(0, H.cols());
    for (std::size_t i = 0; i < H.rows(); ++i) {
        auto row = H.row(i);
        bool hasPos = false, hasNeg = false;
        for (const auto& x : row) {
            if (x > 0) hasPos = true;
            if (x < 0) hasNeg = true;
        }
        if (hasPos && hasNeg)
            throw MixedSignRow("negative_part: row " + std::to_string(i) + " mixes signs");
        if (hasNeg) out.appendRow(row);
    }
    return out;
}

}  // namespace rlp

#endif  // RLP_HORN_HPP
