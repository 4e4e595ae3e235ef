// blocksort: sort permutations by block moves, compute exact distances,
// and run the verification and statistics experiments.
//
// Exit codes: 0 success, 1 internal error or failed check, 2 input error,
// 3 resource cap exceeded.

#include "blocksort/errors.hpp"
#include "blocksort/exact.hpp"
#include "blocksort/permutation.hpp"
#include "blocksort/serialize.hpp"
#include "blocksort/sorter.hpp"
#include "blocksort/stats.hpp"
#include "blocksort/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace blocksort;
using nlohmann::json;

enum ExitCode { ok = 0, failure = 1, input_error = 2, resource_error = 3 };

struct GlobalOptions {
    unsigned threads = 0;
    std::string cache_dir;
    bool no_cache = false;
    std::size_t move_cap = SearchLimits{}.max_n_move;
    std::size_t transposition_cap = SearchLimits{}.max_n_transposition;

    TableCache make_cache() const {
        BuildOptions options{threads, {move_cap, transposition_cap}};
        if (no_cache) return TableCache(std::nullopt, options);
        return TableCache(cache_dir.empty() ? TableCache::default_directory() : std::filesystem::path(cache_dir), options);
    }
};

struct PermutationInput {
    std::string text;
    std::string file;

    std::vector<Permutation> read() const {
        std::vector<Permutation> out;
        if (!file.empty()) {
            std::ifstream in(file);
            if (!in) throw InputError("cannot open " + file);
            std::string line;
            while (std::getline(in, line)) {
                if (line.find_first_not_of(" \t\r,") == std::string::npos) continue;
                out.push_back(parse_permutation(line));
            }
        }
        if (!text.empty() || file.empty()) out.push_back(parse_permutation(text));
        return out;
    }
};

// Writes to --out when given, stdout otherwise.
class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw InputError("cannot open " + path + " for writing");
        }
    }
    std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

private:
    std::ofstream file_;
};

void print_json(std::ostream& os, const json& j) { os << j.dump(2) << '\n'; }

void print_histogram(std::ostream& os, const std::map<int, std::uint64_t>& h, std::string_view label) {
    for (auto [k, c] : h) os << "  " << label << ' ' << k << ": " << c << '\n';
}

int cmd_sort(const PermutationInput& input, const std::string& algorithm, bool as_json) {
    const auto algo = parse_sort_algorithm(algorithm);
    const auto perms = input.read();
    std::vector<SortTrace> traces;
    for (const auto& p : perms) traces.push_back(sort_with(p, algo));

    if (as_json) {
        if (traces.size() == 1) print_json(std::cout, traces.front());
        else print_json(std::cout, traces);
        return ok;
    }
    for (std::size_t t = 0; t < traces.size(); ++t) {
        const auto& trace = traces[t];
        if (t) std::cout << '\n';
        int before = bad_pair_count(trace.input);
        std::cout << "input: " << trace.input << "  (b = " << before << ")\n";
        for (std::size_t k = 0; k < trace.length(); ++k) {
            std::cout << "step " << k + 1 << ": swap " << trace.moves[k] << " -> " << trace.intermediates[k]
                      << "  (b " << before << " -> " << trace.bad_pair_counts[k] << ")\n";
            before = trace.bad_pair_counts[k];
        }
        std::cout << "sorted in " << trace.length() << (trace.length() == 1 ? " move" : " moves") << " ("
                  << to_string(trace.algorithm) << ")\n";
    }
    return ok;
}

int cmd_distance(const GlobalOptions& global, const PermutationInput& input, const std::string& kind_text, bool as_json) {
    const auto kind = parse_move_kind(kind_text);
    auto cache = global.make_cache();
    const auto perms = input.read();
    json rows = json::array();
    for (const auto& p : perms) {
        int d = 0;
        try {
            d = exact_distance(p, kind, cache);
        } catch (const ResourceLimitError& e) {
            throw ResourceLimitError(std::string(e.what()) + "; use `blocksort sort` for an upper bound");
        }
        if (as_json) rows.push_back({{"permutation", p}, {"kind", to_string(kind)}, {"distance", d}});
        else std::cout << d << '\n';
    }
    if (as_json) print_json(std::cout, rows.size() == 1 ? rows.front() : rows);
    return ok;
}

int cmd_census(const GlobalOptions& global, std::size_t n, const std::string& kind_text, std::size_t witnesses,
               const std::string& out_path, bool as_json, bool as_csv) {
    const auto kind = parse_move_kind(kind_text);
    auto cache = global.make_cache();
    const auto report = census(n, kind, witnesses, cache);
    Output out(out_path);
    auto& os = out.stream();
    if (as_json) {
        print_json(os, report);
    } else if (as_csv) {
        write_census_csv(report, os);
    } else {
        os << "n = " << report.n << ", kind = " << to_string(report.kind) << '\n';
        os << "max distance " << report.max_distance << ", count " << report.count_at_max << '\n';
        print_histogram(os, report.histogram, "distance");
        if (!report.witnesses.empty()) {
            os << "witnesses:\n";
            for (const auto& w : report.witnesses) os << "  " << w << '\n';
        }
    }
    return ok;
}

int cmd_stats(const GlobalOptions& global, const std::string& statistic, const ExperimentConfig& config,
              const std::string& out_path, bool as_json, bool as_csv) {
    DistributionReport report;
    if (statistic == "good-pairs") {
        report = good_pair_distribution(config);
    } else {
        auto cache = global.make_cache();
        report = move_count_distribution(config, &cache);
    }
    Output out(out_path);
    auto& os = out.stream();
    if (as_json) {
        print_json(os, report);
    } else if (as_csv) {
        write_distribution_csv(report, os);
    } else {
        os << report.statistic << ": n = " << report.n << ", samples = " << report.samples << ", seed = " << report.seed
           << ", algorithm = " << report.algorithm << (report.exhaustive ? " (exhaustive)" : "") << '\n';
        os << "mean " << report.mean << ", variance " << report.variance << '\n';
        if (report.tv_distance_to_poisson1) os << "TV distance to Poisson(1): " << *report.tv_distance_to_poisson1 << '\n';
        if (report.mean_over_n) os << "mean / n: " << *report.mean_over_n << '\n';
        if (!report.histogram.empty()) os << "max count " << report.histogram.rbegin()->first << '\n';
        print_histogram(os, report.histogram, "value");
    }
    return ok;
}

int cmd_verify(const GlobalOptions& global, std::size_t max_n, bool as_json) {
    auto cache = global.make_cache();
    VerifyCaps caps;
    caps.distance = global.move_cap;
    const auto report = run_verification(max_n, cache, caps);
    if (as_json) {
        print_json(std::cout, report);
    } else {
        for (const auto& entry : report.per_n) {
            for (const auto& c : entry.checks) {
                std::cout << "n=" << entry.n << "  [" << to_string(c.status) << "] " << c.name << ": " << c.detail;
                if (c.counterexample) std::cout << "  counterexample: " << *c.counterexample;
                if (c.move) std::cout << "  move: " << *c.move;
                std::cout << '\n';
            }
        }
        std::cout << (report.passed() ? "all checks passed" : "verification FAILED") << '\n';
    }
    return report.passed() ? ok : failure;
}

int cmd_table(const GlobalOptions& global, std::size_t n, const std::string& kind_text, const std::string& out_path,
              bool binary) {
    const auto kind = parse_move_kind(kind_text);
    auto cache = global.make_cache();
    const auto& table = cache.get(n, kind);
    if (binary) {
        if (out_path.empty()) throw InputError("--binary requires --out");
        save_table(table, out_path);
        return ok;
    }
    Output out(out_path);
    write_table_csv(table, out.stream());
    return ok;
}

int cmd_gaps(const GlobalOptions& global, std::size_t n, const std::string& out_path, bool as_json, bool as_csv) {
    auto cache = global.make_cache();
    const auto report = bound_gap_report(n, cache);
    Output out(out_path);
    auto& os = out.stream();
    if (as_json) {
        print_json(os, report);
    } else if (as_csv) {
        write_bound_gap_csv(report, os);
    } else {
        os << "n = " << report.n << ", " << report.rows.size() << " permutations\n";
        os << "exact - lower bound:\n";
        print_histogram(os, report.exact_minus_lower, "gap");
        os << "greedy - exact:\n";
        print_histogram(os, report.greedy_minus_exact, "gap");
        os << "constructive - exact:\n";
        print_histogram(os, report.constructive_minus_exact, "gap");
        os << "greedy exceeds exact on " << report.greedy_excess.size() << " permutations\n";
        for (std::size_t i = 0; i < report.greedy_excess.size() && i < 10; ++i) os << "  " << report.greedy_excess[i] << '\n';
    }
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sorting permutations by block moves"};
    app.require_subcommand(1);
    app.fallthrough();
    GlobalOptions global;
    app.add_option("--threads", global.threads, "Worker threads (0 = all cores)");
    app.add_option("--cache-dir", global.cache_dir, "Distance table cache directory (default $BLOCKSORT_CACHE_DIR)");
    app.add_flag("--no-cache", global.no_cache, "Keep distance tables in memory only");
    app.add_option("--move-cap", global.move_cap, "Largest n for block-move tables");
    app.add_option("--transposition-cap", global.transposition_cap, "Largest n for block-transposition tables");

    PermutationInput input;
    bool as_json = false;
    bool as_csv = false;
    std::string out_path;

    auto* sort = app.add_subcommand("sort", "Sort a permutation and print the trace");
    std::string algorithm = "constructive";
    sort->add_option("permutation", input.text, "Permutation, e.g. \"5 1 3 4 2\"");
    sort->add_option("--file", input.file, "File with one permutation per line");
    sort->add_option("--algorithm", algorithm, "constructive|greedy")->check(CLI::IsMember({"constructive", "greedy"}));
    sort->add_flag("--json", as_json, "Emit the SortTrace JSON");

    auto* distance = app.add_subcommand("distance", "Exact sorting distance");
    std::string kind = "move";
    distance->add_option("permutation", input.text, "Permutation");
    distance->add_option("--file", input.file, "File with one permutation per line");
    distance->add_option("--kind", kind, "move|transposition")->check(CLI::IsMember({"move", "transposition"}));
    distance->add_flag("--json", as_json, "JSON output");

    auto* census_cmd = app.add_subcommand("census", "Distance histogram and hardest permutations of S_n");
    std::size_t n = 0;
    std::size_t witnesses = 10;
    census_cmd->add_option("--n", n, "Permutation length")->required();
    census_cmd->add_option("--kind", kind, "move|transposition")->check(CLI::IsMember({"move", "transposition"}));
    census_cmd->add_option("--witnesses", witnesses, "Maximal-distance witnesses to list");
    census_cmd->add_option("--out", out_path, "Output file");
    census_cmd->add_flag("--json", as_json, "JSON output");
    census_cmd->add_flag("--csv", as_csv, "CSV output");

    auto* stats = app.add_subcommand("stats", "Good-pair or move-count distributions");
    std::string statistic;
    ExperimentConfig config;
    config.samples = 10000;
    std::string count_algorithm = "constructive";
    stats->add_option("statistic", statistic, "good-pairs|moves")->required()->check(CLI::IsMember({"good-pairs", "moves"}));
    stats->add_option("--n", config.n, "Permutation length")->required();
    stats->add_option("--samples", config.samples, "Sample count (exhaustive when n! <= samples)")->check(CLI::PositiveNumber);
    stats->add_option("--seed", config.seed, "RNG seed");
    stats->add_option("--algorithm", count_algorithm, "constructive|greedy|exact")
        ->check(CLI::IsMember({"constructive", "greedy", "exact"}));
    bool sample_only = false;
    stats->add_flag("--sample-only", sample_only, "Never switch to exhaustive enumeration");
    stats->add_option("--out", out_path, "Output file");
    stats->add_flag("--json", as_json, "JSON output");
    stats->add_flag("--csv", as_csv, "CSV output");

    auto* verify = app.add_subcommand("verify", "Run the exhaustive bound checks up to --max-n");
    std::size_t max_n = 6;
    verify->add_option("--max-n", max_n, "Largest n to check");
    verify->add_flag("--json", as_json, "JSON output");

    auto* table = app.add_subcommand("table", "Export a distance table");
    bool binary = false;
    table->add_option("--n", n, "Permutation length")->required();
    table->add_option("--kind", kind, "move|transposition")->check(CLI::IsMember({"move", "transposition"}));
    table->add_option("--out", out_path, "Output file");
    table->add_flag("--binary", binary, "Write the binary table format instead of CSV");

    auto* gaps = app.add_subcommand("gaps", "Lower bound, exact, greedy and constructive lengths over S_n");
    gaps->add_option("--n", n, "Permutation length")->required();
    gaps->add_option("--out", out_path, "Output file");
    gaps->add_flag("--json", as_json, "JSON output");
    gaps->add_flag("--csv", as_csv, "CSV output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return input_error;
    }

    try {
        if (*sort) return cmd_sort(input, algorithm, as_json);
        if (*distance) return cmd_distance(global, input, kind, as_json);
        if (*census_cmd) return cmd_census(global, n, kind, witnesses, out_path, as_json, as_csv);
        if (*stats) {
            config.algorithm = parse_count_algorithm(count_algorithm);
            config.threads = global.threads;
            config.allow_exhaustive = !sample_only;
            return cmd_stats(global, statistic, config, out_path, as_json, as_csv);
        }
        if (*verify) return cmd_verify(global, max_n, as_json);
        if (*table) return cmd_table(global, n, kind, out_path, binary);
        if (*gaps) return cmd_gaps(global, n, out_path, as_json, as_csv);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return input_error;
    } catch (const InvalidMoveError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return input_error;
    } catch (const ResourceLimitError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return resource_error;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return failure;
    }
    return failure;
}
