#pragma once

#include "blocksort/permutation.hpp"

#include <cstddef>
#include <string_view>
#include <vector>

namespace blocksort {

enum class SortAlgorithm { constructive, greedy };

std::string_view to_string(SortAlgorithm algorithm);
SortAlgorithm parse_sort_algorithm(std::string_view text);

/// Decreasing subsequence anchored at position 1 that ends as far right as
/// possible, has no left refinement, and admits no inserted entry.
struct DecreasingAnchor {
    std::vector<std::size_t> positions;  ///< 1-based, strictly increasing, positions[0] == 1
    std::vector<int> values;             ///< strictly decreasing
};

/// Requires q non-empty with q[0] >= 3; throws ContractError otherwise.
DecreasingAnchor select_pdec(const Permutation& q);

/// Which branch of the reduction produced a reducing move.
enum class ReductionCase { two_first, two_before_one, anchor_adjacent, anchor_gap };

struct ReducingMove {
    BlockMove move;          ///< original coordinates
    BlockMove reduced_move;  ///< coordinates in the contracted permutation
    ReductionCase reduction;
};

/// A move lowering the bad-pair count by at least two, found through the
/// contraction and case analysis. Throws ContractError on the identity.
ReducingMove find_reducing_move_detailed(const Permutation& p);
inline BlockMove find_reducing_move(const Permutation& p) { return find_reducing_move_detailed(p).move; }

struct SortTrace {
    Permutation input;
    std::vector<BlockMove> moves;
    std::vector<Permutation> intermediates;
    std::vector<int> bad_pair_counts;  ///< b after each move
    SortAlgorithm algorithm = SortAlgorithm::constructive;

    std::size_t length() const noexcept { return moves.size(); }
    const Permutation& result() const noexcept { return intermediates.empty() ? input : intermediates.back(); }
    bool complete() const noexcept { return result().is_identity(); }
};

SortTrace sort_constructive(const Permutation& p);

/// At every step applies a move with the largest bad-pair decrease; ties go
/// to the lexicographically smallest move.
SortTrace sort_greedy(const Permutation& p);

SortTrace sort_with(const Permutation& p, SortAlgorithm algorithm);

/// Number of moves only, skipping trace bookkeeping.
int constructive_length(const Permutation& p);
int greedy_length(const Permutation& p);

/// Singleton swaps (i, n+1-i) for i = 1..ceil((n-1)/2), sorting n(n-1)...1.
std::vector<BlockMove> decreasing_schedule(std::size_t n);

}  // namespace blocksort
