#ifndef CABINET_RNG_HPP
#define CABINET_RNG_HPP

#include <cstdint>
#include <random>

namespace cabinet {

/**
 * Seedable 64-bit stream. Distributions are derived from the raw engine
 * output here rather than through <random> distributions so that a given
 * seed yields the same run on every standard library.
 */
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, 1) with 53 bits of resolution.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Uniform integer in [0, bound); bound must be > 0.
    std::uint64_t below(std::uint64_t bound) {
        // Rejection keeps the draw unbiased.
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % bound;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace cabinet

#endif  // CABINET_RNG_HPP
