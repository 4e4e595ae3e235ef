#pragma once

/// \file
/// Permutations in one-line notation, block moves, and the statistics
/// (descents, good/bad pairs) used for the sorting bounds.
///
/// Entries are stored 0-based (`p[0]` is the first entry) but every
/// BlockMove position is 1-based and inclusive, matching how moves are
/// written down and serialized.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace blocksort {

enum class MoveKind : std::uint8_t { block_move = 0, block_transposition = 1 };

std::string_view to_string(MoveKind kind);
MoveKind parse_move_kind(std::string_view text);

/// A permutation of {1..n}. The bijection invariant is established at
/// construction and never broken afterwards.
class Permutation {
public:
    using value_type = int;

    Permutation() = default;

    /// Validates that `entries` is a bijection onto {1..n}; throws InputError.
    explicit Permutation(std::vector<int> entries);

    static Permutation identity(std::size_t n);
    static Permutation decreasing(std::size_t n);

    /// Skips validation. Only for callers that already hold a bijection.
    static Permutation from_trusted(std::vector<int> entries) noexcept;

    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }
    int operator[](std::size_t i) const noexcept { return entries_[i]; }
    std::span<const int> entries() const noexcept { return entries_; }
    auto begin() const noexcept { return entries_.begin(); }
    auto end() const noexcept { return entries_.end(); }

    bool is_identity() const noexcept;

    /// 1-based position of `value`.
    std::size_t position_of(int value) const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> entries_;
};

std::string to_string(const Permutation& p);
std::ostream& operator<<(std::ostream& os, const Permutation& p);

/// Interchange of block A = [a_start, a_end] with block B = [b_start, b_end].
/// Canonical form keeps A strictly left of B.
struct BlockMove {
    std::size_t a_start = 1;
    std::size_t a_end = 1;
    std::size_t b_start = 2;
    std::size_t b_end = 2;

    std::size_t length_a() const noexcept { return a_end - a_start + 1; }
    std::size_t length_b() const noexcept { return b_end - b_start + 1; }
    bool is_transposition() const noexcept { return a_end + 1 == b_start; }

    /// True when the move is well formed for a permutation of length n.
    bool valid_for(std::size_t n) const noexcept;

    friend bool operator==(const BlockMove&, const BlockMove&) = default;
    friend auto operator<=>(const BlockMove&, const BlockMove&) = default;
};

std::string to_string(const BlockMove& m);
std::ostream& operator<<(std::ostream& os, const BlockMove& m);

/// Parses integers separated by whitespace and/or commas.
Permutation parse_permutation(std::string_view text);

/// prefix . B . middle . A . suffix. Throws InvalidMoveError.
Permutation apply_block_move(const Permutation& p, const BlockMove& m);

/// Writes the result of `m` on `src` into `dst` (same length, no checks).
void apply_block_move_unchecked(std::span<const int> src, const BlockMove& m, std::span<int> dst) noexcept;

/// The move undoing `m`, given the block lengths of `m`.
BlockMove inverse_move(const BlockMove& m, std::size_t length_a, std::size_t length_b);
inline BlockMove inverse_move(const BlockMove& m) { return inverse_move(m, m.length_a(), m.length_b()); }

/// All valid moves of the given kind, lexicographic in (a_start, a_end, b_start, b_end).
std::vector<BlockMove> enumerate_block_moves(std::size_t n, MoveKind kind);

/// Number of moves enumerate_block_moves would return.
std::size_t block_move_count(std::size_t n, MoveKind kind) noexcept;

int descent_count(const Permutation& p) noexcept;
int descent_count(std::span<const int> entries) noexcept;

/// Good/bad status of the n+1 boundary-extended pairs (i, i+1), 0 <= i <= n,
/// with virtual sentinels 0 and n+1.
struct PairClassification {
    std::vector<bool> good;
    int good_count = 0;
    int bad_count = 0;
};

PairClassification classify_pairs(const Permutation& p);
int bad_pair_count(std::span<const int> entries) noexcept;
inline int bad_pair_count(const Permutation& p) noexcept { return bad_pair_count(p.entries()); }

/// Change in bad-pair count caused by `m`, evaluated on the affected
/// boundaries only (no copy of the permutation).
int bad_pair_delta(std::span<const int> entries, const BlockMove& m) noexcept;

/// ceil(d(p) / 2).
int descent_lower_bound(const Permutation& p) noexcept;

/// max(ceil(d(p) / 2), ceil(b(p) / 4)).
int combined_lower_bound(const Permutation& p) noexcept;

/// Inclusive 1-based range of original positions.
struct PositionSpan {
    std::size_t first = 0;
    std::size_t last = 0;
    friend bool operator==(const PositionSpan&, const PositionSpan&) = default;
};

struct Contraction {
    Permutation reduced;
    /// spans[k] is the original range represented by reduced entry k (0-based k).
    std::vector<PositionSpan> spans;
};

/// Glues good pairs and strips a sorted leading 1 / trailing n until no good
/// pair remains, relabelling survivors onto {1..m}.
Contraction contract(const Permutation& p);

/// Maps a move on `c.reduced` back to positions of the original permutation.
BlockMove lift_move(const Contraction& c, const BlockMove& reduced_move);

}  // namespace blocksort
