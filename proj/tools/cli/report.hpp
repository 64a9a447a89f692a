#pragma once

#include <nlohmann/json.hpp>

#include "ocrank/harness.hpp"
#include "ocrank/rank.hpp"
#include "ocrank/transducer.hpp"

namespace ocrank::cli {

using Json = nlohmann::ordered_json;

/// ["q", n, "up|eq|down"]
Json typed_state_json(const TransducerPrime& mp, std::uint32_t s);

/// "nsets", "period", "types" of a report on `m`.
Json nsets_json(const Transducer& m, const NSetReport& report);
Json mprime_json(const TransducerPrime& mp);
Json witness_json(const std::optional<DensityWitness>& w);
/// "bound", "status", "witness", "derivation" of a result.
Json rank_json(const RankResult& r);
/// rank_json plus "period", "components" of a single-machine analysis.
Json analysis_json(const TransducerAnalysis& a);
Json check_json(const std::vector<CheckResult>& results);

/// Table with one line per state, then "P=…" and the types.
std::string nsets_text(const Transducer& m, const NSetReport& report);

}  // namespace ocrank::cli
