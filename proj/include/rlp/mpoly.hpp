#ifndef RLP_MPOLY_HPP
#define RLP_MPOLY_HPP

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "rlp/rational.hpp"

namespace rlp {

/// Graded lexicographic order on exponent vectors: total degree first,
/// then lexicographic. Fixes the term order for serialization and equality.
struct GradedLex {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
        long da = 0, db = 0;
        for (int x : a) da += x;
        for (int x : b) db += x;
        if (da != db) return da < db;
        return a < b;
    }
};

/**
 * Sparse multivariate polynomial with exact rational coefficients over a
 * fixed ordered list of named symbols. Zero coefficients are never stored.
 * Values are immutable in spirit: all operations return new polynomials.
 */
class MPoly {
  public:
    using TermMap = std::map<std::vector<int>, Rat, GradedLex>;

    MPoly() = default;
    explicit MPoly(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {}

    static MPoly constant(const Rat& c, std::vector<std::string> symbols = {}) {
        MPoly p(std::move(symbols));
        if (!c.is_zero()) p.terms_[std::vector<int>(p.symbols_.size(), 0)] = c;
        return p;
    }

    static MPoly variable(const std::string& name) {
        MPoly p({name});
        p.terms_[{1}] = Rat(1);
        return p;
    }

    /// Monomial c * prod(symbols[i]^exps[i]).
    static MPoly monomial(const Rat& c, std::vector<std::string> symbols, std::vector<int> exps) {
        MPoly p(std::move(symbols));
        if (exps.size() != p.symbols_.size()) throw Error("MPoly::monomial: exponent size mismatch");
        if (!c.is_zero()) p.terms_[std::move(exps)] = c;
        return p;
    }

    const std::vector<std::string>& symbols() const { return symbols_; }
    const TermMap& terms() const { return terms_; }

    bool isZero() const { return terms_.empty(); }

    bool isConstant() const {
        if (terms_.empty()) return true;
        if (terms_.size() > 1) return false;
        const auto& e = terms_.begin()->first;
        return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    }

    Rat constantValue() const {
        if (terms_.empty()) return Rat(0);
        if (!isConstant()) throw Error("MPoly::constantValue: not a constant");
        return terms_.begin()->second;
    }

    void addTerm(const std::vector<int>& exps, const Rat& c) {
        if (exps.size() != symbols_.size()) throw Error("MPoly::addTerm: exponent size mismatch");
        auto it = terms_.find(exps);
        if (it == terms_.end()) {
            if (!c.is_zero()) terms_[exps] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    MPoly operator+(const MPoly& other) const {
        auto [a, b] = aligned(*this, other);
        for (const auto& [e, c] : b.terms_) a.addTerm(e, c);
        return a;
    }

    MPoly operator-() const {
        MPoly p(*this);
        for (auto& [e, c] : p.terms_) c = -c;
        return p;
    }

    MPoly operator-(const MPoly& other) const { return *this + (-other); }

    MPoly operator*(const MPoly& other) const {
        auto [a, b] = aligned(*this, other);
        MPoly out(a.symbols_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                std::vector<int> e(ea.size());
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                out.addTerm(e, ca * cb);
            }
        }
        return out;
    }

    MPoly operator*(const Rat& c) const {
        MPoly out(symbols_);
        if (c.is_zero()) return out;
        for (const auto& [e, coef] : terms_) out.terms_[e] = coef * c;
        return out;
    }

    MPoly pow(long k) const {
        if (k < 0) throw Error("MPoly::pow: negative exponent");
        MPoly result = constant(Rat(1), symbols_);
        MPoly base = *this;
        while (k > 0) {
            if (k & 1) result = result * base;
            base = base * base;
            k >>= 1;
        }
        return result;
    }

    bool operator==(const MPoly& other) const {
        auto [a, b] = aligned(*this, other);
        return a.terms_ == b.terms_;
    }
    bool operator!=(const MPoly& other) const { return !(*this == other); }

    /// Exact evaluation; `point` must assign every symbol. 0^0 = 1.
    Rat eval(const std::map<std::string, Rat>& point) const {
        std::vector<Rat> vals(symbols_.size());
        for (std::size_t i = 0; i < symbols_.size(); ++i) {
            auto it = point.find(symbols_[i]);
            if (it == point.end()) throw Error("MPoly::eval: missing symbol " + symbols_[i]);
            vals[i] = it->second;
        }
        Rat total(0);
        for (const auto& [e, c] : terms_) {
            Rat term = c;
            for (std::size_t i = 0; i < e.size(); ++i)
                if (e[i] != 0) term *= rat_pow(vals[i], e[i]);
            total += term;
        }
        return total;
    }

    /// Substitutes a polynomial for each symbol and expands.
    MPoly substitute(const std::map<std::string, MPoly>& sub) const {
        MPoly total;
        for (const auto& [e, c] : terms_) {
            MPoly term = constant(c);
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                auto it = sub.find(symbols_[i]);
                if (it == sub.end()) throw Error("MPoly::substitute: missing symbol " + symbols_[i]);
                term = term * it->second.pow(e[i]);
            }
            total = total + term;
        }
        return total;
    }

    /// Same polynomial over unused-symbol-free, lexicographically sorted symbols.
    MPoly canonicalized() const {
        std::vector<bool> used(symbols_.size(), false);
        for (const auto& [e, c] : terms_)
            for (std::size_t i = 0; i < e.size(); ++i)
                if (e[i] != 0) used[i] = true;
        std::vector<std::string> syms;
        for (std::size_t i = 0; i < symbols_.size(); ++i)
            if (used[i]) syms.push_back(symbols_[i]);
        std::sort(syms.begin(), syms.end());
        return reindexed(syms);
    }

    std::string toString() const {
        MPoly c = canonicalized();
        if (c.terms_.empty()) return "0";
        std::string out;
        for (const auto& [e, coef] : c.terms_) {
            if (!out.empty()) out += " + ";
            out += rat_to_string(coef);
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                out += "*" + c.symbols_[i];
                if (e[i] != 1) out += "^" + std::to_string(e[i]);
            }
        }
        return out;
    }

    long totalDegree() const {
        long deg = 0;
        for (const auto& [e, c] : terms_) {
            long d = 0;
            for (int x : e) d += x;
            deg = std::max(deg, d);
        }
        return deg;
    }

    /// Re-expresses the polynomial over a given symbol list, which must
    /// contain every symbol that occurs with a nonzero exponent.
    MPoly reindexed(const std::vector<std::string>& symbols) const {
        std::vector<long> pos(symbols_.size(), -1);
        for (std::size_t i = 0; i < symbols_.size(); ++i) {
            auto it = std::find(symbols.begin(), symbols.end(), symbols_[i]);
            if (it != symbols.end()) pos[i] = it - symbols.begin();
        }
        MPoly out(symbols);
        for (const auto& [e, c] : terms_) {
            std::vector<int> ne(symbols.size(), 0);
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (pos[i] < 0) throw Error("MPoly::reindexed: symbol " + symbols_[i] + " dropped");
                ne[pos[i]] = e[i];
            }
            out.addTerm(ne, c);
        }
        return out;
    }

  private:
    /// Brings two polynomials onto the union of their symbol lists.
    static std::pair<MPoly, MPoly> aligned(const MPoly& a, const MPoly& b) {
        if (a.symbols_ == b.symbols_) return {a, b};
        std::vector<std::string> syms = a.symbols_;
        for (const auto& s : b.symbols_)
            if (std::find(syms.begin(), syms.end(), s) == syms.end()) syms.push_back(s);
        return {a.reindexed(syms), b.reindexed(syms)};
    }

    std::vector<std::string> symbols_;
    TermMap terms_;
};

inline MPoly operator*(const Rat& c, const MPoly& p) { return p * c; }

}  // namespace rlp

#endif  // RLP_MPOLY_HPP
