#include "cli/report.hpp"

#include <algorithm>

namespace ocrank::cli {

Json typed_state_json(const TransducerPrime& mp, std::uint32_t s) {
  const auto& t = mp.states[s];
  return Json::array({mp.base.name(t.state), t.depth, phase_key(t.phase)});
}

Json nsets_json(const Transducer& m, const NSetReport& report) {
  Json sets = Json::object();
  Json types = Json::object();
  for (StateId q = 0; q < m.num_states(); ++q) {
    const auto& s = report.sets[q];
    sets[m.name(q)] = {{"down", s.down.to_string()}, {"up", s.up.to_string()}, {"both", s.both.to_string()}};
    types[m.name(q)] = report.types[q];
  }
  return {{"nsets", sets}, {"period", report.period}, {"types", types}, {"counter_cap", report.counter_cap}};
}

Json mprime_json(const TransducerPrime& mp) {
  Json states = Json::array();
  Json finals = Json::array();
  for (std::uint32_t s = 0; s < mp.states.size(); ++s) {
    states.push_back(typed_state_json(mp, s));
    if (mp.final[s]) finals.push_back(typed_state_json(mp, s));
  }
  Json transitions = Json::array();
  for (const auto& t : mp.transitions) {
    transitions.push_back({{"from", typed_state_json(mp, t.from)},
                           {"bit", t.bit},
                           {"to", typed_state_json(mp, t.to)},
                           {"output", mp.base_transition(t).output_text},
                           {"rule", to_string(t.rule)}});
  }
  return {{"period", mp.period},
          {"initial", typed_state_json(mp, mp.initial)},
          {"accepts_empty", mp.accepts_empty},
          {"states", states},
          {"final", finals},
          {"transitions", transitions}};
}

Json witness_json(const std::optional<DensityWitness>& w) {
  if (!w) return nullptr;
  return {{"origin", w->origin}, {"prefix", w->prefix}, {"u", w->u}, {"v", w->v}, {"family", w->family()}};
}

Json rank_json(const RankResult& r) {
  Json j;
  j["result"] = to_string(r.kind);
  j["bound"] = r.kind == ResultKind::Bound ? Json(to_string(r.bound)) : Json(nullptr);
  j["status"] = r.kind == ResultKind::Bound ? to_string(r.status) : to_string(r.kind);
  j["empty_language"] = r.empty_language;
  j["witness"] = witness_json(r.witness);
  if (!r.diagnostic.empty()) j["diagnostic"] = r.diagnostic;
  j["derivation"] = r.derivation;
  return j;
}

Json analysis_json(const TransducerAnalysis& a) {
  Json j = rank_json(a.result);
  j["period"] = a.report.period;
  Json comps = Json::array();
  for (std::size_t i = 0; i < a.condensation.components.size(); ++i) {
    const auto& c = a.condensation.components[i];
    const auto& v = a.verdicts[i];
    Json members = Json::array();
    for (auto s : c.members) members.push_back(typed_state_json(a.mprime, s));
    Json roots = Json::object();
    for (const auto& [s, root] : v.roots) roots[a.mprime.label(s)] = root;
    Json entry = {{"id", i},
                  {"phase", phase_key(c.phase)},
                  {"trivial", c.trivial},
                  {"members", members},
                  {"verdict", to_string(v.kind)},
                  {"roots", roots}};
    if (v.kind == Verdict::QuasiDenseWitness) {
      entry["witness"] = {{"state", typed_state_json(a.mprime, v.witness_state)}, {"u", v.first}, {"v", v.second}};
    }
    comps.push_back(entry);
  }
  j["components"] = comps;
  return j;
}

Json check_json(const std::vector<CheckResult>& results) {
  Json checks = Json::array();
  bool ok = true;
  for (const auto& r : results) {
    checks.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    ok = ok && r.passed;
  }
  return {{"passed", ok}, {"checks", checks}};
}

std::string nsets_text(const Transducer& m, const NSetReport& report) {
  std::size_t width = 0;
  for (StateId q = 0; q < m.num_states(); ++q) width = std::max(width, m.name(q).size());
  std::string out;
  for (StateId q = 0; q < m.num_states(); ++q) {
    const auto& s = report.sets[q];
    std::string name = m.name(q);
    name.resize(width, ' ');
    out += name + "  N-: " + s.down.to_string() + "  N+: " + s.up.to_string() + "  N: " + s.both.to_string() + "\n";
  }
  out += "P=" + std::to_string(report.period) + "\n";
  for (StateId q = 0; q < m.num_states(); ++q) {
    out += "tau(" + m.name(q) + ") = {";
    for (std::size_t i = 0; i < report.types[q].size(); ++i) {
      out += (i ? "," : "") + std::to_string(report.types[q][i]);
    }
    out += "}\n";
  }
  return out;
}

}  // namespace ocrank::cli
