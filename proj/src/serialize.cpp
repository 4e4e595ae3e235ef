#include "blocksort/serialize.hpp"

#include "blocksort/errors.hpp"

#include <ostream>

namespace blocksort {

std::string_view library_version() noexcept { return BLOCKSORT_VERSION; }

void to_json(nlohmann::json& j, const Permutation& p) { j = std::vector<int>(p.begin(), p.end()); }

void from_json(const nlohmann::json& j, Permutation& p) {
    if (!j.is_array()) throw InputError("permutation JSON must be an array of integers");
    p = Permutation(j.get<std::vector<int>>());
}

void to_json(nlohmann::json& j, const BlockMove& m) {
    j = {{"a_start", m.a_start}, {"a_end", m.a_end}, {"b_start", m.b_start}, {"b_end", m.b_end}};
}

void from_json(const nlohmann::json& j, BlockMove& m) {
    try {
        m.a_start = j.at("a_start").get<std::size_t>();
        m.a_end = j.at("a_end").get<std::size_t>();
        m.b_start = j.at("b_start").get<std::size_t>();
        m.b_end = j.at("b_end").get<std::size_t>();
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("block move JSON: ") + e.what());
    }
}

void to_json(nlohmann::json& j, const SortTrace& t) {
    j = {{"input", t.input},
         {"moves", t.moves},
         {"intermediates", t.intermediates},
         {"bad_pairs", t.bad_pair_counts},
         {"algorithm", to_string(t.algorithm)}};
}

namespace {

nlohmann::json histogram_json(const std::map<int, std::uint64_t>& h) {
    auto j = nlohmann::json::object();
    for (auto [k, c] : h) j[std::to_string(k)] = c;
    return j;
}

}  // namespace

void to_json(nlohmann::json& j, const CensusReport& r) {
    j = {{"n", r.n},
         {"kind", to_string(r.kind)},
         {"max_distance", r.max_distance},
         {"count_at_max", r.count_at_max},
         {"histogram", histogram_json(r.histogram)},
         {"witnesses", r.witnesses},
         {"version", library_version()}};
}

void to_json(nlohmann::json& j, const CheckResult& c) {
    j = {{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}};
    if (c.counterexample) j["counterexample"] = *c.counterexample;
    if (c.move) j["move"] = *c.move;
}

void to_json(nlohmann::json& j, const BoundsReport& r) {
    j = {{"n", r.n}, {"passed", r.passed()}, {"checks", r.checks}};
}

void to_json(nlohmann::json& j, const DistributionReport& r) {
    j = {{"statistic", r.statistic},
         {"n", r.n},
         {"samples", r.samples},
         {"seed", r.seed},
         {"algorithm", r.algorithm},
         {"exhaustive", r.exhaustive},
         {"histogram", histogram_json(r.histogram)},
         {"mean", r.mean},
         {"variance", r.variance},
         {"version", library_version()}};
    if (r.tv_distance_to_poisson1) j["tv_distance_to_poisson1"] = *r.tv_distance_to_poisson1;
    if (r.mean_over_n) j["mean_over_n"] = *r.mean_over_n;
}

void to_json(nlohmann::json& j, const BoundGapReport& r) {
    auto rows = nlohmann::json::array();
    for (const auto& row : r.rows)
        rows.push_back({{"permutation", row.permutation},
                        {"lower_bound", row.lower_bound},
                        {"exact", row.exact},
                        {"greedy", row.greedy},
                        {"constructive", row.constructive}});
    j = {{"n", r.n},
         {"rows", std::move(rows)},
         {"exact_minus_lower", histogram_json(r.exact_minus_lower)},
         {"greedy_minus_exact", histogram_json(r.greedy_minus_exact)},
         {"constructive_minus_exact", histogram_json(r.constructive_minus_exact)},
         {"greedy_excess", r.greedy_excess},
         {"version", library_version()}};
}

void to_json(nlohmann::json& j, const VerificationReport& r) {
    j = {{"max_n", r.max_n}, {"passed", r.passed()}, {"per_n", r.per_n}, {"version", library_version()}};
}

void write_census_csv(const CensusReport& r, std::ostream& out) {
    out << "n,kind,distance,count\n";
    for (auto [d, c] : r.histogram) out << r.n << ',' << to_string(r.kind) << ',' << d << ',' << c << '\n';
}

void write_distribution_csv(const DistributionReport& r, std::ostream& out) {
    out << "statistic,n,samples,seed,algorithm,version,value,count\n";
    for (auto [k, c] : r.histogram)
        out << r.statistic << ',' << r.n << ',' << r.samples << ',' << r.seed << ',' << r.algorithm << ','
            << library_version() << ',' << k << ',' << c << '\n';
}

void write_bound_gap_csv(const BoundGapReport& r, std::ostream& out) {
    out << "permutation,lower_bound,exact,greedy,constructive\n";
    for (const auto& row : r.rows)
        out << to_string(row.permutation) << ',' << row.lower_bound << ',' << row.exact << ',' << row.greedy << ','
            << row.constructive << '\n';
}

}  // namespace blocksort
