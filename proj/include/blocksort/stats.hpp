#pragma once

/// \file
/// Seeded experiments: good-pair distribution against Poisson(1), move-count
/// distributions, and per-permutation bound gaps.
///
/// Sampling is split into fixed-size blocks, each driven by its own
/// mt19937_64 substream derived from the seed, so results do not depend on
/// the thread count.

#include "blocksort/exact.hpp"
#include "blocksort/permutation.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace blocksort {

using Rng = std::mt19937_64;

/// Samples per RNG substream.
inline constexpr std::uint64_t samples_per_stream = 1024;

/// Unbiased integer in [0, bound). Portable: does not use std distributions.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

/// splitmix64 of (seed, index); seeds substream `index`.
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) noexcept;

/// Fisher-Yates shuffle of the identity.
Permutation random_permutation(std::size_t n, Rng& rng);

enum class CountAlgorithm { constructive, greedy, exact };
std::string_view to_string(CountAlgorithm algorithm);
CountAlgorithm parse_count_algorithm(std::string_view text);

struct ExperimentConfig {
    std::size_t n = 1;
    std::uint64_t samples = 1;
    std::uint64_t seed = 0;
    CountAlgorithm algorithm = CountAlgorithm::constructive;
    unsigned threads = 1;
    bool allow_exhaustive = true;  ///< enumerate S_n instead of sampling when n! <= samples
};

struct DistributionReport {
    std::string statistic;  ///< "good_pairs" or "moves"
    std::size_t n = 0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    std::string algorithm;
    bool exhaustive = false;
    std::map<int, std::uint64_t> histogram;
    double mean = 0;
    double variance = 0;
    std::optional<double> tv_distance_to_poisson1;
    std::optional<double> mean_over_n;
};

/// Total variation distance between the histogram's empirical law and
/// Poisson(lambda); the Poisson tail beyond the largest observed value is
/// folded into that bucket.
double tv_distance_to_poisson(const std::map<int, std::uint64_t>& histogram, double lambda = 1.0);

/// Exhaustive over S_n when n! <= samples, otherwise seeded sampling.
DistributionReport good_pair_distribution(const ExperimentConfig& config);

/// Trace lengths (or exact distances) over samples. `cache` is used for the
/// exact algorithm; a private in-memory cache is created when null.
DistributionReport move_count_distribution(const ExperimentConfig& config, TableCache* cache = nullptr);

/// Same statistic over an explicit input set.
DistributionReport move_count_distribution(std::span<const Permutation> inputs, CountAlgorithm algorithm,
                                           TableCache* cache = nullptr);

struct BoundGapRow {
    Permutation permutation;
    int lower_bound = 0;
    int exact = 0;
    int greedy = 0;
    int constructive = 0;
};

struct BoundGapReport {
    std::size_t n = 0;
    std::vector<BoundGapRow> rows;  ///< rank order
    std::map<int, std::uint64_t> exact_minus_lower;
    std::map<int, std::uint64_t> greedy_minus_exact;
    std::map<int, std::uint64_t> constructive_minus_exact;
    std::vector<Permutation> greedy_excess;  ///< greedy length > exact distance
};

BoundGapReport bound_gap_report(std::size_t n, TableCache& cache);

}  // namespace blocksort
