#pragma once

/// JSON and CSV forms of the library's values. Every experiment report
/// carries the library version so exported files are self-describing.

#include "blocksort/exact.hpp"
#include "blocksort/permutation.hpp"
#include "blocksort/sorter.hpp"
#include "blocksort/stats.hpp"
#include "blocksort/verify.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string_view>

namespace blocksort {

std::string_view library_version() noexcept;

void to_json(nlohmann::json& j, const Permutation& p);
void from_json(const nlohmann::json& j, Permutation& p);
void to_json(nlohmann::json& j, const BlockMove& m);
void from_json(const nlohmann::json& j, BlockMove& m);
void to_json(nlohmann::json& j, const SortTrace& t);
void to_json(nlohmann::json& j, const CensusReport& r);
void to_json(nlohmann::json& j, const CheckResult& c);
void to_json(nlohmann::json& j, const BoundsReport& r);
void to_json(nlohmann::json& j, const DistributionReport& r);
void to_json(nlohmann::json& j, const BoundGapReport& r);
void to_json(nlohmann::json& j, const VerificationReport& r);

/// n,kind,distance,count rows.
void write_census_csv(const CensusReport& r, std::ostream& out);
/// value,count rows.
void write_distribution_csv(const DistributionReport& r, std::ostream& out);
/// permutation,lower_bound,exact,greedy,constructive rows.
void write_bound_gap_csv(const BoundGapReport& r, std::ostream& out);

}  // namespace blocksort
