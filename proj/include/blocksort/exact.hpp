#pragma once

/// \file
/// Exact sorting distances by breadth-first search over all of S_n.
///
/// Permutations are indexed by their Lehmer rank (factorial base, identity
/// is rank 0, rank order equals lexicographic order). Both move sets are
/// closed under inverse_move, so the BFS distance from the identity equals
/// the sorting distance.

#include "blocksort/permutation.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace blocksort {

std::uint64_t factorial(std::size_t n) noexcept;

std::uint64_t rank_of(std::span<const int> entries) noexcept;
inline std::uint64_t rank_of(const Permutation& p) noexcept { return rank_of(p.entries()); }
void unrank_into(std::uint64_t rank, std::span<int> out) noexcept;
Permutation unrank(std::size_t n, std::uint64_t rank);

struct SearchLimits {
    std::size_t max_n_move = 10;
    std::size_t max_n_transposition = 11;

    std::size_t max_n(MoveKind kind) const noexcept {
        return kind == MoveKind::block_move ? max_n_move : max_n_transposition;
    }
};

/// Throws ResourceLimitError when n exceeds the cap for `kind`.
void require_within_cap(std::size_t n, MoveKind kind, const SearchLimits& limits);

struct BuildOptions {
    unsigned threads = 1;  ///< 0 = all hardware threads
    SearchLimits limits;
};

class DistanceTable {
public:
    static constexpr std::uint8_t unreached = 0xFF;

    DistanceTable(std::size_t n, MoveKind kind, std::vector<std::uint8_t> distances);

    std::size_t n() const noexcept { return n_; }
    MoveKind kind() const noexcept { return kind_; }
    std::uint64_t size() const noexcept { return distances_.size(); }

    int distance(std::uint64_t rank) const noexcept { return distances_[rank]; }
    /// Throws InputError if p has the wrong length.
    int distance(const Permutation& p) const;
    std::span<const std::uint8_t> distances() const noexcept { return distances_; }

    int max_distance() const noexcept;
    /// layer_counts()[d] = number of permutations at distance d.
    std::vector<std::uint64_t> layer_counts() const;

    friend bool operator==(const DistanceTable&, const DistanceTable&) = default;

private:
    std::size_t n_;
    MoveKind kind_;
    std::vector<std::uint8_t> distances_;
};

/// Level-synchronous BFS from the identity. The result is identical for any
/// thread count.
DistanceTable build_distance_table(std::size_t n, MoveKind kind, const BuildOptions& options = {});

/// Binary cache format: "BMDT", version, kind, n, 9 reserved bytes, then n!
/// distance bytes in rank order.
inline constexpr std::uint8_t table_format_version = 1;
void write_table(const DistanceTable& table, std::ostream& out);
DistanceTable read_table(std::istream& in);
void save_table(const DistanceTable& table, const std::filesystem::path& path);
DistanceTable load_table(const std::filesystem::path& path);

/// CSV rows: rank,permutation,distance.
void write_table_csv(const DistanceTable& table, std::ostream& out);

/// Thread-safe table store. With a directory, tables are read from and
/// written to disk; without, they live in memory only.
class TableCache {
public:
    explicit TableCache(std::optional<std::filesystem::path> directory = std::nullopt, BuildOptions options = {});

    /// $BLOCKSORT_CACHE_DIR, else $XDG_CACHE_HOME/blocksort, else ~/.cache/blocksort.
    static std::filesystem::path default_directory();

    const DistanceTable& get(std::size_t n, MoveKind kind);
    const BuildOptions& options() const noexcept { return options_; }
    const std::optional<std::filesystem::path>& directory() const noexcept { return directory_; }
    std::filesystem::path file_for(std::size_t n, MoveKind kind) const;

private:
    std::optional<std::filesystem::path> directory_;
    BuildOptions options_;
    std::mutex mutex_;
    std::map<std::pair<std::size_t, MoveKind>, std::unique_ptr<DistanceTable>> tables_;
};

int exact_distance(const Permutation& p, MoveKind kind, TableCache& cache);

struct CensusReport {
    std::size_t n = 0;
    MoveKind kind = MoveKind::block_move;
    int max_distance = 0;
    std::uint64_t count_at_max = 0;
    std::map<int, std::uint64_t> histogram;
    std::vector<Permutation> witnesses;  ///< rank order
};

CensusReport census(const DistanceTable& table, std::size_t witness_limit);
CensusReport census(std::size_t n, MoveKind kind, std::size_t witness_limit, TableCache& cache);

enum class CheckStatus { pass, fail, skipped };
std::string_view to_string(CheckStatus status);

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::pass;
    std::string detail;
    std::optional<Permutation> counterexample;
    std::optional<BlockMove> move;
};

struct BoundsReport {
    std::size_t n = 0;
    std::vector<CheckResult> checks;
    bool passed() const noexcept;
};

/// Exhaustive check over S_n of the descent and bad-pair lower bounds, the
/// constructive upper bound, transposition bounds on the decreasing
/// permutation and the whole group, and move/transposition dominance.
BoundsReport check_bounds(std::size_t n, TableCache& cache);

}  // namespace blocksort
