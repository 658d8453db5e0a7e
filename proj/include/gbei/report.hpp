#pragma once

#include "gbei/hochster.hpp"
#include "gbei/verifier.hpp"

namespace gbei {

using Json = nlohmann::ordered_json;

Json to_json(const HilbertSeries &h);
Json to_json(const CdPrediction &cd);
Json to_json(const Prediction &p);
Json to_json(const std::vector<CutSet> &cut_sets);
// [{"i": int, "sigma": [variable indices], "rank": int}]
Json to_json(const BettiTable &table);
Json to_json(const KonigCheck &check);
Json to_json(const InvariantReport &report, bool include_timing = true);
Json to_json(const SweepSummary &summary);

// {"n": int, "edges": [[u, v], ...]}, 1-based; throws std::invalid_argument.
SimpleGraph graph_from_json(const Json &j);

}  // namespace gbei
