#include "gbei/report.hpp"

#include <bit>

namespace gbei {

Json to_json(const HilbertSeries &h) {
  return Json{{"numerator", h.numerator()}, {"pole", h.pole()}};
}

Json to_json(const CdPrediction &cd) {
  switch (cd.kind) {
    case CdPrediction::Kind::Exact: return Json{{"exact", cd.lower}};
    case CdPrediction::Kind::Interval: return Json{{"lower", cd.lower}, {"upper", cd.upper}};
    case CdPrediction::Kind::Unsupported: break;
  }
  return Json{{"unsupported", true}};
}

Json to_json(const Prediction &p) {
  Json out;
  out["spec"] = Json{{"m", p.m}, {"parts", p.parts}};
  out["dim"] = p.dim;
  out["depth"] = p.depth;
  out["reg"] = p.reg;
  out["mult"] = p.mult;
  if (p.mult_table) out["multTable"] = *p.mult_table;
  out["cd"] = to_json(p.cd);
  out["height"] = p.height;
  out["path"] = Json{{"vertices", p.konig.vertices}, {"length", p.konig.target_length}};
  out["hilbert"] = to_json(p.hilbert);
  Json cuts = Json::array();
  for (const auto &c : p.cut_sets) cuts.push_back(c);
  out["cutSets"] = cuts;
  Json comps = Json::array();
  for (const auto &c : p.components) comps.push_back(Json{{"kind", c.kind}, {"columns", c.columns}});
  out["components"] = comps;
  return out;
}

Json to_json(const std::vector<CutSet> &cut_sets) {
  Json out = Json::array();
  for (const auto &c : cut_sets) out.push_back(Json{{"set", c.vertices}, {"components", c.components}});
  return out;
}

Json to_json(const BettiTable &table) {
  Json out = Json::array();
  for (const auto &[key, rank] : table.entries) {
    Json sigma = Json::array();
    for (FaceMask s = key.second; s; s &= s - 1) sigma.push_back(std::countr_zero(s));
    out.push_back(Json{{"i", key.first}, {"sigma", sigma}, {"rank", rank}});
  }
  return out;
}

Json to_json(const KonigCheck &check) {
  Json out{{"height", check.height},
           {"path", check.path.vertices},
           {"path_valid", check.path_valid},
           {"initial_terms_coprime", check.initial_terms_coprime}};
  if (check.interleaved_sequence_valid)
    out["interleaved_sequence_valid"] = *check.interleaved_sequence_valid;
  return out;
}

Json to_json(const InvariantReport &report, bool include_timing) {
  Json out;
  out["spec"] = Json{{"m", report.m}, {"parts", report.parts}};
  out["order"] = report.order;
  out["prime"] = report.prime;
  Json inv = Json::array();
  for (const auto &r : report.invariants) {
    Json rec{{"name", r.name}, {"predicted", r.predicted}, {"computed", r.computed},
             {"status", to_string(r.status)}};
    if (r.status == Status::Skipped) rec["reason"] = r.reason;
    inv.push_back(rec);
  }
  out["invariants"] = inv;
  out["squarefree"] = report.squarefree;
  Json timing = Json::object();
  if (include_timing)
    for (const auto &[stage, ms] : report.timing_ms) timing[stage] = ms;
  out["timingMs"] = timing;
  return out;
}

Json to_json(const SweepSummary &summary) {
  return Json{{"match", summary.match}, {"mismatch", summary.mismatch}, {"skipped", summary.skipped}};
}

SimpleGraph graph_from_json(const Json &j) {
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
    throw std::invalid_argument("graph JSON needs an integer field \"n\"");
  SimpleGraph g(j["n"].get<int>());
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) throw std::invalid_argument("\"edges\" must be an array");
    for (const auto &e : j["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
        throw std::invalid_argument("each edge must be a pair of integers");
      g.add_edge(e[0].get<int>(), e[1].get<int>());
    }
  }
  return g;
}

}  // namespace gbei
