#ifndef RLP_RNG_HPP
#define RLP_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "rlp/rational.hpp"

namespace rlp {

/**
 * Seeded random source. Draws go through explicit modular reduction rather
 * than std::uniform_int_distribution so that sequences are identical across
 * standard library implementations.
 */
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    /// Uniform-ish integer in [lo, hi].
    long randInt(long lo, long hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<long>(eng_() % span);
    }

    std::uint64_t raw() { return eng_(); }

  private:
    std::mt19937_64 eng_;
};

inline std::vector<BigInt> random_positive_counts(std::size_t n, long lo, long hi, Rng& rng) {
    std::vector<BigInt> u(n);
    for (auto& x : u) x = rng.randInt(lo, hi);
    return u;
}

}  // namespace rlp

#endif  // RLP_RNG_HPP
