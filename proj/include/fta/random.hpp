#pragma once

#include <cstdint>

#include "fta/complex.hpp"

namespace fta {

/// SplitMix64 (Steele, Lea, Flood). Each call advances the state by the
/// golden-ratio increment 0x9E3779B97F4A7C15 and returns the mixed value
///   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   z =  z ^ (z >> 31)
/// Reproducible across implementations given the same 64-bit seed.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform integer in [lo, hi] (modulo reduction; bias is irrelevant here).
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(next() % span);
    }

    /// Uniform double in [0, 1) from the top 53 bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  private:
    std::uint64_t state_;
};

/// num/den with num uniform in [-max_num, max_num] and den uniform in [1, max_den].
inline Rational random_rational(SplitMix64& rng, std::int64_t max_num = 1000, std::int64_t max_den = 1000) {
    Rational q(mpz_class(static_cast<long>(rng.uniform_int(-max_num, max_num))),
               mpz_class(static_cast<long>(rng.uniform_int(1, max_den))));
    q.canonicalize();
    return q;
}

inline Complex<Rational> random_complex_rational(SplitMix64& rng, std::int64_t max_num = 1000,
                                                 std::int64_t max_den = 1000) {
    Rational re = random_rational(rng, max_num, max_den);
    Rational im = random_rational(rng, max_num, max_den);
    return {re, im};
}

}  // namespace fta
