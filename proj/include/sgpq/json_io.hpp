#pragma once

#include <string>

#include <json.hpp>

#include "sgpq/applications.hpp"
#include "sgpq/gamma.hpp"
#include "sgpq/semigroup.hpp"

namespace sgpq {

/// {"min_gens": [...], "frobenius": n, "gaps": [...]}
nlohmann::json semigroup_json(const NumericalSemigroup& s);

/// List of lists, e.g. d = 3 -> [[0],[1,2],[1,1,1],[2,2,2]].
nlohmann::json partitions_json(const std::vector<DPartition>& ps);

/// {"d":, "gamma":[...], "witnesses":{value: {"partition":, "generators":}},
///  "nu_quotient":, "bound_partitioned":, "bound_binomial":, "sharp":{...}}
nlohmann::json gamma_json(const GammaSet& g, const BoundReport& b);

/// {"rho":, "T_min_gens": [...], "frobenius_T":, "quotient_check": true}
nlohmann::json cover_json(std::int64_t rho, const NumericalSemigroup& cover, bool quotient_check);

/// Parses "7,9,13" into a GeneratorSet. Malformed text (empty list, junk
/// tokens, values out of range) throws errc::usage; validity of the numbers
/// as generators is left to the semigroup layer.
GeneratorSet parse_generators_csv(const std::string& text);

}  // namespace sgpq
