#pragma once

// Exact-arithmetic certification harnesses for the norm inequalities and the
// Estermann lemma.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace fta {

enum class NormMutation {
    none,
    /// Replaces |zw|₁ by 0.49 |z|₁|w|₁; the harness must then report failures.
    shrink_product,
};

struct NormCheckReport {
    std::size_t samples = 0;
    std::size_t lower_failures = 0;
    std::size_t upper_failures = 0;
    std::size_t conjugate_failures = 0;
    std::vector<std::string> first_failures;

    std::size_t failures() const { return lower_failures + upper_failures + conjugate_failures; }
    bool passed() const { return failures() == 0; }
};

/// Checks |z|₁|w|₁/2 <= |zw|₁ <= |z|₁|w|₁ and |conj z|₁ = |z|₁ on `samples`
/// exact pairs drawn from SplitMix64(seed). Sample 0 is always z = 0.
NormCheckReport run_norm_checks(std::size_t samples, std::uint64_t seed,
                                NormMutation mutation = NormMutation::none);

struct LemmaSweepReport {
    std::vector<std::string> lines;  // ascending k
    bool all_passed = true;
};

/// Direct and term-wise verification for every even k in [2, max_k]. Work is
/// spread over `threads` workers (0 = hardware concurrency); output order is
/// always ascending k.
LemmaSweepReport run_lemma_sweep(unsigned max_k, unsigned threads = 0);

}  // namespace fta
