#ifndef RLP_MATRIX_HPP
#define RLP_MATRIX_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rlp/rational.hpp"

namespace rlp {

/**
 * Dense integer matrix with exact entries, row-major storage.
 */
class IntMatrix {
  public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, BigInt(0)) {}

    static IntMatrix fromRows(const std::vector<std::vector<BigInt>>& rows) {
        if (rows.empty()) return IntMatrix();
        IntMatrix m(rows.size(), rows[0].size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols_) throw Error("IntMatrix::fromRows: ragged rows");
            for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    BigInt& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const BigInt& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<BigInt> row(std::size_t i) const {
        return std::vector<BigInt>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
    }

    void appendRow(const std::vector<BigInt>& r) {
        if (rows_ == 0 && cols_ == 0) cols_ = r.size();
        if (r.size() != cols_) throw Error("IntMatrix::appendRow: size mismatch");
        data_.insert(data_.end(), r.begin(), r.end());
        ++rows_;
    }

    std::vector<BigInt> columnSums() const {
        std::vector<BigInt> s(cols_, BigInt(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) s[j] += at(i, j);
        return s;
    }

    bool columnSumsZero() const {
        for (const auto& s : columnSums())
            if (!s.is_zero()) return false;
        return true;
    }

    /// Matrix-vector product with exact rational input.
    std::vector<Rat> apply(const std::vector<Rat>& u) const {
        if (u.size() != cols_) throw Error("IntMatrix::apply: size mismatch");
        std::vector<Rat> out(rows_, Rat(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!at(i, j).is_zero()) out[i] += Rat(at(i, j)) * u[j];
        return out;
    }

    /// Rows sorted lexicographically; used to compare matrices up to row order.
    IntMatrix rowSorted() const {
        std::vector<std::vector<BigInt>> rs;
        rs.reserve(rows_);
        for (std::size_t i = 0; i < rows_; ++i) rs.push_back(row(i));
        std::sort(rs.begin(), rs.end());
        return fromRows(rs);
    }

    IntMatrix selectColumns(const std::vector<std::size_t>& order) const {
        IntMatrix m(rows_, order.size());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < order.size(); ++j) m.at(i, j) = at(i, order[j]);
        return m;
    }

    bool operator==(const IntMatrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
    }
    bool operator!=(const IntMatrix& other) const { return !(*this == other); }

  private:
    std::size_t rows_, cols_;
    std::vector<BigInt> data_;
};

/// Divides a vector by the gcd of its entries and flips sign so the first
/// nonzero entry is positive. The zero vector is returned unchanged.
inline std::vector<BigInt> primitive_direction(std::vector<BigInt> v) {
    BigInt g = vec_gcd(v);
    if (g.is_zero()) return v;
    for (auto& x : v) x /= g;
    for (const auto& x : v) {
        if (x.is_zero()) continue;
        if (x < 0)
            for (auto& y : v) y = -y;
        break;
    }
    return v;
}

inline bool is_zero_vector(const std::vector<BigInt>& v) {
    return std::all_of(v.begin(), v.end(), [](const BigInt& x) { return x.is_zero(); });
}

/// Rank over the rationals, by exact Gaussian elimination.
inline std::size_t rank_q(const IntMatrix& m) {
    std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::vector<Rat>> a(rows, std::vector<Rat>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = Rat(m.at(i, j));
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][col].is_zero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[pivot], a[rank]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || a[i][col].is_zero()) continue;
            Rat f = a[i][col] / a[rank][col];
            for (std::size_t j = col; j < cols; ++j) a[i][j] -= f * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

/**
 * Basis of the right kernel {x : A x = 0} over the rationals, returned as
 * primitive integer vectors (one per basis element).
 */
inline std::vector<std::vector<BigInt>> q_kernel_basis(const IntMatrix& m) {
    std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::vector<Rat>> a(rows, std::vector<Rat>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = Rat(m.at(i, j));

    // Reduced row echelon form, tracking pivot columns.
    std::vector<std::size_t> pivotCol;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][col].is_zero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[pivot], a[rank]);
        Rat lead = a[rank][col];
        for (std::size_t j = 0; j < cols; ++j) a[rank][j] /= lead;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || a[i][col].is_zero()) continue;
            Rat f = a[i][col];
            for (std::size_t j = 0; j < cols; ++j) a[i][j] -= f * a[rank][j];
        }
        pivotCol.push_back(col);
        ++rank;
    }

    std::vector<bool> isPivot(cols, false);
    for (auto c : pivotCol) isPivot[c] = true;

    std::vector<std::vector<BigInt>> basis;
    for (std::size_t freeCol = 0; freeCol < cols; ++freeCol) {
        if (isPivot[freeCol]) continue;
        std::vector<Rat> x(cols, Rat(0));
        x[freeCol] = Rat(1);
        for (std::size_t r = 0; r < rank; ++r) x[pivotCol[r]] = -a[r][freeCol];
        BigInt lcm(1);
        for (const auto& xi : x) lcm = boost::multiprecision::lcm(lcm, denom(xi));
        std::vector<BigInt> xi(cols);
        for (std::size_t j = 0; j < cols; ++j) xi[j] = numer(x[j] * Rat(lcm));
        basis.push_back(primitive_direction(std::move(xi)));
    }
    return basis;
}

/**
 * Basis of the integer kernel {x in Z^n : A x = 0}, computed by unimodular
 * column reduction. The result spans the full lattice of integer solutions,
 * not just a finite-index sublattice.
 */
inline std::vector<std::vector<BigInt>> integer_kernel_basis(const IntMatrix& m) {
    std::size_t rows = m.rows(), cols = m.cols();
    // Working copy and unimodular column transform.
    std::vector<std::vector<BigInt>> w(rows, std::vector<BigInt>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) w[i][j] = m.at(i, j);
    std::vector<std::vector<BigInt>> u(cols, std::vector<BigInt>(cols, BigInt(0)));
    for (std::size_t j = 0; j < cols; ++j) u[j][j] = 1;

    auto colSwap = [&](std::size_t c1, std::size_t c2) {
        for (std::size_t i = 0; i < rows; ++i) std::swap(w[i][c1], w[i][c2]);
        for (std::size_t i = 0; i < cols; ++i) std::swap(u[i][c1], u[i][c2]);
    };
    auto colAddMul = [&](std::size_t dst, std::size_t src, const BigInt& f) {
        for (std::size_t i = 0; i < rows; ++i) w[i][dst] += f * w[i][src];
        for (std::size_t i = 0; i < cols; ++i) u[i][dst] += f * u[i][src];
    };

    std::size_t lead = 0;
    for (std::size_t i = 0; i < rows && lead < cols; ++i) {
        // Euclidean reduction across columns lead..cols-1 on row i.
        while (true) {
            std::size_t best = cols;
            for (std::size_t c = lead; c < cols; ++c) {
                if (w[i][c].is_zero()) continue;
                if (best == cols || boost::multiprecision::abs(w[i][c]) <
                                        boost::multiprecision::abs(w[i][best]))
                    best = c;
            }
            if (best == cols) break;  // row is zero past lead
            if (best != lead) colSwap(best, lead);
            bool reduced = true;
            for (std::size_t c = lead + 1; c < cols; ++c) {
                if (w[i][c].is_zero()) continue;
                BigInt q = w[i][c] / w[i][lead];  // truncated division
                colAddMul(c, lead, -q);
                if (!w[i][c].is_zero()) reduced = false;
            }
            if (reduced) break;
        }
        if (lead < cols && !w[i][lead].is_zero()) ++lead;
    }

    std::vector<std::vector<BigInt>> basis;
    for (std::size_t c = lead; c < cols; ++c) {
        std::vector<BigInt> x(cols);
        for (std::size_t i = 0; i < cols; ++i) x[i] = u[i][c];
        basis.push_back(std::move(x));
    }
    return basis;
}

/// Exact solve of A x = b over the rationals; empty when inconsistent.
/// When the solution space is positive-dimensional, free variables are 0.
inline std::optional<std::vector<Rat>> solve_q(const IntMatrix& m, const std::vector<Rat>& b) {
    std::size_t rows = m.rows(), cols = m.cols();
    if (b.size() != rows) throw Error("solve_q: size mismatch");
    std::vector<std::vector<Rat>> a(rows, std::vector<Rat>(cols + 1));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = Rat(m.at(i, j));
        a[i][cols] = b[i];
    }
    std::vector<std::size_t> pivotCol;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][col].is_zero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[pivot], a[rank]);
        Rat lead = a[rank][col];
        for (std::size_t j = 0; j <= cols; ++j) a[rank][j] /= lead;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || a[i][col].is_zero()) continue;
            Rat f = a[i][col];
            for (std::size_t j = 0; j <= cols; ++j) a[i][j] -= f * a[rank][j];
        }
        pivotCol.push_back(col);
        ++rank;
    }
    for (std::size_t i = rank; i < rows; ++i)
        if (!a[i][cols].is_zero()) return std::nullopt;
    std::vector<Rat> x(cols, Rat(0));
    for (std::size_t r = 0; r < rank; ++r) x[pivotCol[r]] = a[r][cols];
    return x;
}

}  // namespace rlp

#endif  // RLP_MATRIX_HPP
