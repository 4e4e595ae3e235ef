#pragma once

/// Exhaustive checks of the descent lemma, the bad-pair reduction and the
/// sorting bound, plus the per-n distance checks from check_bounds.

#include "blocksort/exact.hpp"

#include <cstddef>
#include <vector>

namespace blocksort {

/// Every block move changes the descent count by at most two.
CheckResult lemma_check(std::size_t n, unsigned threads = 1);

/// find_reducing_move removes at least two bad pairs on every non-identity p.
CheckResult proposition_check(std::size_t n, unsigned threads = 1);

/// Constructive and greedy traces reach the identity within floor((n+1)/2)
/// moves, each removing at least two bad pairs.
CheckResult theorem_check(std::size_t n, unsigned threads = 1);

struct VerifyCaps {
    std::size_t lemma = 6;
    std::size_t proposition = 8;
    std::size_t distance = 10;
};

struct VerificationReport {
    std::size_t max_n = 0;
    std::vector<BoundsReport> per_n;
    bool passed() const noexcept;
};

VerificationReport run_verification(std::size_t max_n, TableCache& cache, const VerifyCaps& caps = {});

}  // namespace blocksort
