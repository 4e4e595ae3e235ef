#include "blocksort/stats.hpp"

#include "blocksort/errors.hpp"
#include "blocksort/parallel.hpp"
#include "blocksort/sorter.hpp"

#include <cmath>
#include <numeric>

namespace blocksort {

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    if (bound == 0) throw ContractError("uniform_below needs a positive bound");
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        const std::uint64_t x = rng();
        if (x >= threshold) return x % bound;
    }
}

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) noexcept {
    std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

Permutation random_permutation(std::size_t n, Rng& rng) {
    std::vector<int> e(n);
    std::iota(e.begin(), e.end(), 1);
    for (std::size_t i = n; i > 1; --i) std::swap(e[i - 1], e[uniform_below(rng, i)]);
    return Permutation::from_trusted(std::move(e));
}

std::string_view to_string(CountAlgorithm algorithm) {
    switch (algorithm) {
        case CountAlgorithm::constructive: return "constructive";
        case CountAlgorithm::greedy: return "greedy";
        case CountAlgorithm::exact: return "exact";
    }
    return "unknown";
}

CountAlgorithm parse_count_algorithm(std::string_view text) {
    if (text == "constructive") return CountAlgorithm::constructive;
    if (text == "greedy") return CountAlgorithm::greedy;
    if (text == "exact") return CountAlgorithm::exact;
    throw InputError("unknown algorithm '" + std::string(text) + "' (expected constructive|greedy|exact)");
}

double tv_distance_to_poisson(const std::map<int, std::uint64_t>& histogram, double lambda) {
    std::uint64_t total = 0;
    int top = 0;
    for (auto [k, c] : histogram) {
        total += c;
        top = std::max(top, k);
    }
    if (total == 0) return 0.0;
    double sum = 0.0;
    double pmf = std::exp(-lambda);
    double cumulative = 0.0;
    for (int k = 0; k <= top; ++k) {
        const auto it = histogram.find(k);
        const double empirical = it == histogram.end() ? 0.0 : static_cast<double>(it->second) / static_cast<double>(total);
        const double model = k == top ? 1.0 - cumulative : pmf;
        sum += std::abs(empirical - model);
        cumulative += pmf;
        pmf *= lambda / (k + 1);
    }
    return 0.5 * sum;
}

namespace {

using Histogram = std::map<int, std::uint64_t>;

void merge_into(Histogram& into, const Histogram& from) {
    for (auto [k, c] : from) into[k] += c;
}

void summarize(DistributionReport& r) {
    std::uint64_t total = 0;
    double sum = 0.0;
    for (auto [k, c] : r.histogram) {
        total += c;
        sum += static_cast<double>(k) * static_cast<double>(c);
    }
    r.samples = total;
    r.mean = total ? sum / static_cast<double>(total) : 0.0;
    double sq = 0.0;
    for (auto [k, c] : r.histogram) sq += (k - r.mean) * (k - r.mean) * static_cast<double>(c);
    r.variance = total ? sq / static_cast<double>(total) : 0.0;
}

bool use_exhaustive(const ExperimentConfig& cfg) {
    return cfg.allow_exhaustive && cfg.n <= 20 && factorial(cfg.n) <= cfg.samples;
}

// Applies `statistic` to every permutation of S_n, or to `samples` seeded
// draws, and histograms the results.
template <typename Statistic>
Histogram collect(const ExperimentConfig& cfg, bool exhaustive, Statistic statistic) {
    std::vector<Histogram> parts;
    if (exhaustive) {
        const std::uint64_t total = factorial(cfg.n);
        parts = map_chunks(total, 64, cfg.threads, [&](std::size_t begin, std::size_t end) {
            Histogram h;
            std::vector<int> e(cfg.n);
            for (std::size_t r = begin; r < end; ++r) {
                unrank_into(r, e);
                ++h[statistic(Permutation::from_trusted(e))];
            }
            return h;
        });
    } else {
        const std::uint64_t streams = (cfg.samples + samples_per_stream - 1) / samples_per_stream;
        parts = map_chunks(streams, streams, cfg.threads, [&](std::size_t begin, std::size_t end) {
            Histogram h;
            for (std::size_t s = begin; s < end; ++s) {
                Rng rng(substream_seed(cfg.seed, s));
                const std::uint64_t first = s * samples_per_stream;
                const std::uint64_t count = std::min(samples_per_stream, cfg.samples - first);
                for (std::uint64_t i = 0; i < count; ++i) ++h[statistic(random_permutation(cfg.n, rng))];
            }
            return h;
        });
    }
    Histogram merged;
    for (const auto& part : parts) merge_into(merged, part);
    return merged;
}

}  // namespace

DistributionReport good_pair_distribution(const ExperimentConfig& config) {
    if (config.samples == 0) throw InputError("samples must be at least 1");
    DistributionReport r;
    r.statistic = "good_pairs";
    r.n = config.n;
    r.seed = config.seed;
    r.algorithm = "none";
    r.exhaustive = use_exhaustive(config);
    r.histogram = collect(config, r.exhaustive, [](const Permutation& p) { return classify_pairs(p).good_count; });
    summarize(r);
    r.tv_distance_to_poisson1 = tv_distance_to_poisson(r.histogram, 1.0);
    return r;
}

namespace {

auto move_counter(CountAlgorithm algorithm, TableCache& cache) {
    return [algorithm, &cache](const Permutation& p) -> int {
        switch (algorithm) {
            case CountAlgorithm::constructive: return constructive_length(p);
            case CountAlgorithm::greedy: return greedy_length(p);
            case CountAlgorithm::exact: return exact_distance(p, MoveKind::block_move, cache);
        }
        return 0;
    };
}

}  // namespace

DistributionReport move_count_distribution(const ExperimentConfig& config, TableCache* cache) {
    if (config.samples == 0) throw InputError("samples must be at least 1");
    TableCache local(std::nullopt, BuildOptions{config.threads, {}});
    TableCache& tables = cache ? *cache : local;
    if (config.algorithm == CountAlgorithm::exact) tables.get(config.n, MoveKind::block_move);

    DistributionReport r;
    r.statistic = "moves";
    r.n = config.n;
    r.seed = config.seed;
    r.algorithm = std::string(to_string(config.algorithm));
    r.exhaustive = use_exhaustive(config);
    r.histogram = collect(config, r.exhaustive, move_counter(config.algorithm, tables));
    summarize(r);
    if (config.n > 0) r.mean_over_n = r.mean / static_cast<double>(config.n);
    return r;
}

DistributionReport move_count_distribution(std::span<const Permutation> inputs, CountAlgorithm algorithm,
                                           TableCache* cache) {
    TableCache local;
    TableCache& tables = cache ? *cache : local;
    auto count = move_counter(algorithm, tables);
    DistributionReport r;
    r.statistic = "moves";
    r.algorithm = std::string(to_string(algorithm));
    for (const auto& p : inputs) {
        ++r.histogram[count(p)];
        r.n = std::max(r.n, p.size());
    }
    summarize(r);
    if (r.n > 0) r.mean_over_n = r.mean / static_cast<double>(r.n);
    return r;
}

BoundGapReport bound_gap_report(std::size_t n, TableCache& cache) {
    const auto& table = cache.get(n, MoveKind::block_move);
    BoundGapReport report;
    report.n = n;
    auto parts = map_chunks(table.size(), 64, cache.options().threads, [&](std::size_t begin, std::size_t end) {
        std::vector<BoundGapRow> rows;
        rows.reserve(end - begin);
        std::vector<int> e(n);
        for (std::size_t r = begin; r < end; ++r) {
            unrank_into(r, e);
            auto p = Permutation::from_trusted(e);
            rows.push_back({p, combined_lower_bound(p), table.distance(r), greedy_length(p), constructive_length(p)});
        }
        return rows;
    });
    for (auto& part : parts)
        for (auto& row : part) {
            ++report.exact_minus_lower[row.exact - row.lower_bound];
            ++report.greedy_minus_exact[row.greedy - row.exact];
            ++report.constructive_minus_exact[row.constructive - row.exact];
            if (row.greedy > row.exact) report.greedy_excess.push_back(row.permutation);
            report.rows.push_back(std::move(row));
        }
    return report;
}

}  // namespace blocksort
