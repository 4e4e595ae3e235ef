#include "blocksort/exact.hpp"

#include "blocksort/errors.hpp"
#include "blocksort/parallel.hpp"
#include "blocksort/sorter.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

namespace blocksort {

std::uint64_t factorial(std::size_t n) noexcept {
    std::uint64_t f = 1;
    for (std::size_t i = 2; i <= n; ++i) f *= i;
    return f;
}

std::uint64_t rank_of(std::span<const int> entries) noexcept {
    const auto n = entries.size();
    std::uint64_t unused = n >= 63 ? ~std::uint64_t{0} : ((std::uint64_t{1} << (n + 1)) - 2);
    std::uint64_t rank = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const auto bit = std::uint64_t{1} << entries[i];
        rank = rank * (n - i) + static_cast<std::uint64_t>(std::popcount(unused & (bit - 1)));
        unused &= ~bit;
    }
    return rank;
}

void unrank_into(std::uint64_t rank, std::span<int> out) noexcept {
    const auto n = out.size();
    std::array<int, 64> available{};
    for (std::size_t i = 0; i < n; ++i) available[i] = static_cast<int>(i + 1);
    std::size_t remaining = n;
    std::uint64_t f = factorial(n);
    for (std::size_t i = 0; i < n; ++i) {
        f /= (n - i);
        const auto digit = static_cast<std::size_t>(rank / f);
        rank %= f;
        out[i] = available[digit];
        std::copy(available.begin() + digit + 1, available.begin() + remaining, available.begin() + digit);
        --remaining;
    }
}

Permutation unrank(std::size_t n, std::uint64_t rank) {
    if (n > 20 || rank >= factorial(n)) throw InputError("rank " + std::to_string(rank) + " out of range for n = " + std::to_string(n));
    std::vector<int> e(n);
    unrank_into(rank, e);
    return Permutation::from_trusted(std::move(e));
}

void require_within_cap(std::size_t n, MoveKind kind, const SearchLimits& limits) {
    const std::size_t cap = limits.max_n(kind);
    if (n <= cap) return;
    std::ostringstream msg;
    const double mib = n <= 20 ? static_cast<double>(factorial(n)) / (1024.0 * 1024.0) : 1e300;
    msg << "n = " << n << " exceeds the " << to_string(kind) << " cap of " << cap
        << "; an exact table would need about " << mib << " MiB";
    throw ResourceLimitError(msg.str());
}

DistanceTable::DistanceTable(std::size_t n, MoveKind kind, std::vector<std::uint8_t> distances)
    : n_(n), kind_(kind), distances_(std::move(distances)) {
    if (distances_.size() != factorial(n)) throw InputError("distance table for n = " + std::to_string(n) + " has wrong size");
}

int DistanceTable::distance(const Permutation& p) const {
    if (p.size() != n_)
        throw InputError("permutation of length " + std::to_string(p.size()) + " looked up in a table for n = " + std::to_string(n_));
    return distances_[rank_of(p)];
}

int DistanceTable::max_distance() const noexcept {
    int m = 0;
    for (auto d : distances_)
        if (d != unreached) m = std::max<int>(m, d);
    return m;
}

std::vector<std::uint64_t> DistanceTable::layer_counts() const {
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(max_distance()) + 1, 0);
    for (auto d : distances_)
        if (d != unreached) ++counts[d];
    return counts;
}

DistanceTable build_distance_table(std::size_t n, MoveKind kind, const BuildOptions& options) {
    require_within_cap(n, kind, options.limits);
    const std::uint64_t total = factorial(n);
    std::vector<std::uint8_t> dist(total, DistanceTable::unreached);
    dist[0] = 0;
    if (total == 1) return {n, kind, std::move(dist)};

    const auto moves = enumerate_block_moves(n, kind);
    const std::size_t chunks = static_cast<std::size_t>(std::min<std::uint64_t>(total, 256));

    std::uint64_t frontier = 1;
    for (std::uint8_t level = 0; frontier > 0; ++level) {
        map_chunks(total, chunks, options.threads, [&](std::size_t begin, std::size_t end) {
            std::vector<int> cur(n), next(n);
            for (std::size_t r = begin; r < end; ++r) {
                if (std::atomic_ref<std::uint8_t>(dist[r]).load(std::memory_order_relaxed) != level) continue;
                unrank_into(r, cur);
                for (const auto& m : moves) {
                    apply_block_move_unchecked(cur, m, next);
                    std::atomic_ref<std::uint8_t> slot(dist[rank_of(next)]);
                    if (slot.load(std::memory_order_relaxed) == DistanceTable::unreached)
                        slot.store(static_cast<std::uint8_t>(level + 1), std::memory_order_relaxed);
                }
            }
            return 0;
        });
        frontier = static_cast<std::uint64_t>(std::count(dist.begin(), dist.end(), static_cast<std::uint8_t>(level + 1)));
    }
    return {n, kind, std::move(dist)};
}

void write_table(const DistanceTable& table, std::ostream& out) {
    std::array<char, 16> header{'B', 'M', 'D', 'T'};
    header[4] = static_cast<char>(table_format_version);
    header[5] = static_cast<char>(table.kind());
    header[6] = static_cast<char>(table.n());
    out.write(header.data(), header.size());
    const auto d = table.distances();
    out.write(reinterpret_cast<const char*>(d.data()), static_cast<std::streamsize>(d.size()));
    if (!out) throw Error("failed to write distance table");
}

DistanceTable read_table(std::istream& in) {
    std::array<char, 16> header{};
    if (!in.read(header.data(), header.size())) throw InputError("distance table: truncated header");
    if (std::string_view(header.data(), 4) != "BMDT") throw InputError("distance table: bad magic");
    if (static_cast<std::uint8_t>(header[4]) != table_format_version) throw InputError("distance table: unsupported version");
    const auto kind_byte = static_cast<std::uint8_t>(header[5]);
    if (kind_byte > 1) throw InputError("distance table: unknown move kind");
    const auto n = static_cast<std::size_t>(static_cast<std::uint8_t>(header[6]));
    if (n > 20) throw InputError("distance table: n too large");
    std::vector<std::uint8_t> dist(factorial(n));
    if (!in.read(reinterpret_cast<char*>(dist.data()), static_cast<std::streamsize>(dist.size())))
        throw InputError("distance table: truncated body");
    return {n, static_cast<MoveKind>(kind_byte), std::move(dist)};
}

void save_table(const DistanceTable& table, const std::filesystem::path& path) {
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot open " + tmp.string() + " for writing");
        write_table(table, out);
    }
    std::filesystem::rename(tmp, path);
}

DistanceTable load_table(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path.string());
    return read_table(in);
}

void write_table_csv(const DistanceTable& table, std::ostream& out) {
    out << "rank,permutation,distance\n";
    std::vector<int> e(table.n());
    for (std::uint64_t r = 0; r < table.size(); ++r) {
        unrank_into(r, e);
        out << r << ',' << to_string(Permutation::from_trusted(e)) << ',' << table.distance(r) << '\n';
    }
}

TableCache::TableCache(std::optional<std::filesystem::path> directory, BuildOptions options)
    : directory_(std::move(directory)), options_(options) {}

std::filesystem::path TableCache::default_directory() {
    if (const char* dir = std::getenv("BLOCKSORT_CACHE_DIR"); dir && *dir) return dir;
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return std::filesystem::path(xdg) / "blocksort";
    if (const char* home = std::getenv("HOME"); home && *home) return std::filesystem::path(home) / ".cache" / "blocksort";
    return std::filesystem::temp_directory_path() / "blocksort";
}

std::filesystem::path TableCache::file_for(std::size_t n, MoveKind kind) const {
    const auto dir = directory_.value_or(std::filesystem::path{});
    return dir / ("bmdt-" + std::string(to_string(kind)) + "-n" + std::to_string(n) + ".bin");
}

const DistanceTable& TableCache::get(std::size_t n, MoveKind kind) {
    require_within_cap(n, kind, options_.limits);
    std::lock_guard lock(mutex_);
    auto& slot = tables_[{n, kind}];
    if (slot) return *slot;

    if (directory_) {
        const auto path = file_for(n, kind);
        std::error_code ec;
        if (std::filesystem::exists(path, ec)) {
            try {
                auto table = load_table(path);
                if (table.n() == n && table.kind() == kind) {
                    slot = std::make_unique<DistanceTable>(std::move(table));
                    return *slot;
                }
            } catch (const InputError&) {
                // unreadable cache file: rebuild below and overwrite it
            }
        }
    }

    slot = std::make_unique<DistanceTable>(build_distance_table(n, kind, options_));
    if (directory_) {
        std::error_code ec;
        std::filesystem::create_directories(*directory_, ec);
        if (!ec) {
            try {
                save_table(*slot, file_for(n, kind));
            } catch (const Error&) {
                // the cache is an optimisation; a read-only directory is not fatal
            }
        }
    }
    return *slot;
}

int exact_distance(const Permutation& p, MoveKind kind, TableCache& cache) {
    return cache.get(p.size(), kind).distance(p);
}

CensusReport census(const DistanceTable& table, std::size_t witness_limit) {
    CensusReport report;
    report.n = table.n();
    report.kind = table.kind();
    const auto layers = table.layer_counts();
    for (std::size_t d = 0; d < layers.size(); ++d)
        if (layers[d] > 0) report.histogram[static_cast<int>(d)] = layers[d];
    report.max_distance = table.max_distance();
    report.count_at_max = layers[static_cast<std::size_t>(report.max_distance)];
    for (std::uint64_t r = 0; r < table.size() && report.witnesses.size() < witness_limit; ++r)
        if (table.distance(r) == report.max_distance) report.witnesses.push_back(unrank(table.n(), r));
    return report;
}

CensusReport census(std::size_t n, MoveKind kind, std::size_t witness_limit, TableCache& cache) {
    return census(cache.get(n, kind), witness_limit);
}

std::string_view to_string(CheckStatus status) {
    switch (status) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::skipped: return "skipped";
    }
    return "unknown";
}

bool BoundsReport::passed() const noexcept {
    return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == CheckStatus::fail; });
}

namespace {

struct ChunkFindings {
    std::optional<Permutation> descent_violation;
    std::optional<Permutation> bad_pair_violation;
    std::optional<Permutation> constructive_violation;
    std::optional<Permutation> dominance_violation;
    int max_constructive = 0;
};

CheckResult make_check(std::string name, const std::optional<Permutation>& counterexample, std::string detail) {
    CheckResult c;
    c.name = std::move(name);
    c.status = counterexample ? CheckStatus::fail : CheckStatus::pass;
    c.detail = std::move(detail);
    c.counterexample = counterexample;
    return c;
}

CheckResult skipped(std::string name, std::string why) {
    return {std::move(name), CheckStatus::skipped, std::move(why), std::nullopt, std::nullopt};
}

}  // namespace

BoundsReport check_bounds(std::size_t n, TableCache& cache) {
    BoundsReport report;
    report.n = n;
    const auto& moves_table = cache.get(n, MoveKind::block_move);
    const auto& trans_table = cache.get(n, MoveKind::block_transposition);
    const int upper = static_cast<int>((n + 1) / 2);
    const std::uint64_t total = factorial(n);

    auto findings = map_chunks(total, 64, cache.options().threads, [&](std::size_t begin, std::size_t end) {
        ChunkFindings f;
        std::vector<int> e(n);
        for (std::size_t r = begin; r < end; ++r) {
            unrank_into(r, e);
            const auto p = Permutation::from_trusted(e);
            const int exact = moves_table.distance(r);
            if (!f.descent_violation && descent_lower_bound(p) > exact) f.descent_violation = p;
            if (!f.bad_pair_violation && (bad_pair_count(p) + 3) / 4 > exact) f.bad_pair_violation = p;
            const int constructive = constructive_length(p);
            f.max_constructive = std::max(f.max_constructive, constructive);
            if (!f.constructive_violation && (constructive < exact || constructive > upper)) f.constructive_violation = p;
            if (!f.dominance_violation && exact > trans_table.distance(r)) f.dominance_violation = p;
        }
        return f;
    });

    ChunkFindings merged;
    for (auto& f : findings) {
        if (!merged.descent_violation) merged.descent_violation = f.descent_violation;
        if (!merged.bad_pair_violation) merged.bad_pair_violation = f.bad_pair_violation;
        if (!merged.constructive_violation) merged.constructive_violation = f.constructive_violation;
        if (!merged.dominance_violation) merged.dominance_violation = f.dominance_violation;
        merged.max_constructive = std::max(merged.max_constructive, f.max_constructive);
    }

    report.checks.push_back(make_check("descent lower bound", merged.descent_violation,
                                       "ceil(d(p)/2) <= block-move distance for all p"));
    report.checks.push_back(make_check("bad-pair lower bound", merged.bad_pair_violation,
                                       "ceil(b(p)/4) <= block-move distance for all p"));
    report.checks.push_back(make_check(
        "constructive upper bound", merged.constructive_violation,
        "distance <= constructive length <= " + std::to_string(upper) + " (longest trace " +
            std::to_string(merged.max_constructive) + ")"));
    report.checks.push_back(make_check("move/transposition dominance", merged.dominance_violation,
                                       "block-move distance <= block-transposition distance for all p"));

    if (n >= 2) {
        const auto dec = Permutation::decreasing(n);
        const int expected = static_cast<int>(n / 2);
        Permutation cur = dec;
        const auto schedule = decreasing_schedule(n);
        for (const auto& m : schedule) cur = apply_block_move(cur, m);
        const int got = moves_table.distance(dec);
        const bool ok = got == expected && cur.is_identity() && schedule.size() == static_cast<std::size_t>(expected);
        report.checks.push_back(make_check("decreasing block-move distance", ok ? std::nullopt : std::optional(dec),
                                           "distance " + std::to_string(got) + ", expected ceil((n-1)/2) = " +
                                               std::to_string(expected) + ", schedule length " +
                                               std::to_string(schedule.size())));
    } else {
        report.checks.push_back(skipped("decreasing block-move distance", "needs n >= 2"));
    }

    if (n >= 3) {
        const auto dec = Permutation::decreasing(n);
        const int expected = static_cast<int>((n + 2) / 2);
        const int got = trans_table.distance(dec);
        report.checks.push_back(make_check("decreasing transposition distance",
                                           got == expected ? std::nullopt : std::optional(dec),
                                           "distance " + std::to_string(got) + ", expected ceil((n+1)/2) = " +
                                               std::to_string(expected)));
    } else {
        report.checks.push_back(skipped("decreasing transposition distance", "stated for n >= 3"));
    }

    if (n == 13 || n == 15) {
        report.checks.push_back(skipped("transposition diameter conjecture", "conjecture excludes n = 13, 15"));
    } else {
        const int bound = static_cast<int>((n + 2) / 2);
        const int diameter = trans_table.max_distance();
        std::optional<Permutation> witness;
        if (diameter > bound) witness = census(trans_table, 1).witnesses.front();
        report.checks.push_back(make_check("transposition diameter conjecture", witness,
                                           "max transposition distance " + std::to_string(diameter) +
                                               " <= ceil((n+1)/2) = " + std::to_string(bound)));
    }

    if (n >= 9) {
        const int bound = static_cast<int>((2 * n - 2) / 3);
        const int diameter = trans_table.max_distance();
        std::optional<Permutation> witness;
        if (diameter > bound) witness = census(trans_table, 1).witnesses.front();
        report.checks.push_back(make_check("transposition diameter upper bound", witness,
                                           "max transposition distance " + std::to_string(diameter) +
                                               " <= floor((2n-2)/3) = " + std::to_string(bound)));
    } else {
        report.checks.push_back(skipped("transposition diameter upper bound", "stated for n >= 9"));
    }
    return report;
}

}  // namespace blocksort
