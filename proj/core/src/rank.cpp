#include "ocrank/rank.hpp"

#include <algorithm>
#include <limits>

namespace ocrank {

Ordinal ord_add(Ordinal x, Ordinal y) {
  if (y.omegas >= 1) return {x.omegas + y.omegas, y.finite};
  return {x.omegas, x.finite + y.finite};
}

Ordinal ord_max(Ordinal x, Ordinal y) { return std::max(x, y); }

std::string to_string(Ordinal o) {
  if (o.omegas == 0) return std::to_string(o.finite);
  std::string s = o.omegas == 1 ? "w" : "w*" + std::to_string(o.omegas);
  if (o.finite > 0) s += "+" + std::to_string(o.finite);
  return s;
}

std::string to_string(BoundStatus s) {
  return s == BoundStatus::Certified ? "Certified" : "ConditionalOnScattered";
}

std::string to_string(ResultKind k) {
  switch (k) {
    case ResultKind::Bound: return "Bound";
    case ResultKind::NotScattered: return "NotScattered";
    case ResultKind::Unknown: return "Unknown";
  }
  return "?";
}

std::string DensityWitness::family() const {
  return prefix + "{" + u + v + u + v + "," + v + u + v + u + "}*" + u + v + v + u;
}

namespace {

bool contains(const Component& c, std::uint32_t s) {
  return std::binary_search(c.members.begin(), c.members.end(), s);
}

std::string edge_text(const TransducerPrime& mp, const PrimeTransition& t) {
  return mp.label(t.from) + " --" + std::to_string(t.bit) + "/" + mp.base_transition(t).output_text + "--> " +
         mp.label(t.to);
}

constexpr std::size_t not_scattered = std::numeric_limits<std::size_t>::max();

}  // namespace

EdgeBounds edge_bounds(const TransducerPrime& mp, const Condensation& cond, const std::vector<ComponentVerdict>& verdicts,
                       const std::vector<std::size_t>& regranks) {
  EdgeBounds out;
  out.value.assign(mp.transitions.size(), std::nullopt);
  out.status.assign(mp.transitions.size(), BoundStatus::Certified);
  auto regrank = [&](const PrimeTransition& t) {
    if (regranks.at(t.base) == not_scattered) throw PreconditionError("edge_bounds with an output that is not scattered");
    return regranks[t.base];
  };

  for (std::uint32_t ci = 0; ci < cond.components.size(); ++ci) {
    const auto& c = cond.components[ci];
    const auto& verdict = verdicts.at(ci);
    std::vector<std::pair<Ordinal, BoundStatus>> incoming;
    bool blocked = verdict.kind == Verdict::QuasiDenseWitness;
    if (contains(c, mp.initial)) incoming.emplace_back(Ordinal{}, BoundStatus::Certified);
    std::size_t intra = 0;
    for (std::size_t ti = 0; ti < mp.transitions.size(); ++ti) {
      const auto& t = mp.transitions[ti];
      if (!contains(c, t.to)) continue;
      if (contains(c, t.from)) {
        intra = std::max(intra, regrank(t));
      } else if (out.value[ti]) {
        incoming.emplace_back(*out.value[ti], out.status[ti]);
      } else {
        blocked = true;
      }
    }
    if (blocked || incoming.empty()) continue;

    for (std::size_t ti = 0; ti < mp.transitions.size(); ++ti) {
      const auto& t = mp.transitions[ti];
      if (!contains(c, t.from) || contains(c, t.to)) continue;
      Ordinal local;
      std::string rule;
      BoundStatus status = BoundStatus::Certified;
      if (c.trivial) {
        local = Ordinal::of(regrank(t));
        rule = contains(c, mp.initial) ? "source" : "trivial";
      } else if (verdict.kind == Verdict::FullyCertified) {
        local = Ordinal::of(c.members.size() * (1 + intra) + regrank(t));
        rule = "certified";
      } else {
        local = Ordinal::omega();
        rule = "zero";
        status = BoundStatus::ConditionalOnScattered;
      }
      Ordinal value;
      for (const auto& [in, st] : incoming) {
        value = ord_max(value, ord_add(local, in));
        if (st == BoundStatus::ConditionalOnScattered) status = st;
      }
      out.value[ti] = value;
      out.status[ti] = status;
      out.derivation.push_back({static_cast<std::uint32_t>(ti), ci, rule, local, value, status});
    }
  }
  return out;
}

namespace {

// Shortest output of a path of M' from the initial state to `s`.
Word shortest_prefix(const TransducerPrime& mp, std::uint32_t s) {
  std::vector<LabeledEdge> edges;
  for (const auto& t : mp.transitions) edges.push_back({t.from, t.to, &mp.output(t)});
  std::uint32_t init = mp.initial;
  auto w = shortest_word(path_language(mp.base.output_alphabet(), mp.states.size(), edges, std::span(&init, 1),
                                       std::span(&s, 1), false));
  return w.value_or("");
}

}  // namespace

TransducerAnalysis analyze_transducer(const Transducer& m, const ReachOptions& options) {
  Transducer machine = validate(m);
  NSetReport report = reach_sets(machine, options);
  TransducerAnalysis a{machine, report, TransducerPrime(machine), {}, {}, {}, {}, {}};
  const auto& t0 = report.types[machine.initial()];
  if (std::find(t0.begin(), t0.end(), 0) == t0.end()) {
    a.result.empty_language = true;
    a.result.derivation.push_back("no Dyck input is accepted; the language is empty");
    return a;
  }
  a.mprime = build_mprime(machine, report);
  a.condensation = condense(a.mprime);
  for (const auto& c : a.condensation.components) a.verdicts.push_back(certify_component(a.mprime, c));

  // Output languages on live transitions must be scattered themselves.
  a.regranks.assign(machine.transitions().size(), 0);
  std::vector<bool> live(machine.transitions().size(), false);
  for (const auto& t : a.mprime.transitions) live[t.base] = true;
  for (std::size_t i = 0; i < machine.transitions().size(); ++i) {
    const auto& t = machine.transitions()[i];
    auto check = regular_scattered(*t.output);
    if (check.scattered) {
      a.regranks[i] = finite_rank_bound(*t.output);
      continue;
    }
    a.regranks[i] = not_scattered;
    if (!live[i] || a.result.witness) continue;
    auto it = std::find_if(a.mprime.transitions.begin(), a.mprime.transitions.end(),
                           [&](const PrimeTransition& pt) { return pt.base == i; });
    a.result.kind = ResultKind::NotScattered;
    a.result.witness = DensityWitness{"output " + t.output_text + " of " + machine.name(t.from) + " --" +
                                          std::to_string(t.bit) + "--> " + machine.name(t.to),
                                      shortest_prefix(a.mprime, it->from), check.first, check.second};
  }
  for (std::size_t ci = 0; ci < a.verdicts.size() && !a.result.witness; ++ci) {
    const auto& v = a.verdicts[ci];
    if (v.kind != Verdict::QuasiDenseWitness) continue;
    a.result.kind = ResultKind::NotScattered;
    a.result.witness = DensityWitness{"cycles at " + a.mprime.label(v.witness_state),
                                      shortest_prefix(a.mprime, v.witness_state), v.first, v.second};
  }
  if (a.result.witness) {
    a.result.derivation.push_back("density witness: " + a.result.witness->origin);
    return a;
  }

  a.bounds = edge_bounds(a.mprime, a.condensation, a.verdicts, a.regranks);
  for (const auto& step : a.bounds.derivation) {
    a.result.derivation.push_back(edge_text(a.mprime, a.mprime.transitions[step.transition]) + " [" + step.rule +
                                  "] f=" + to_string(step.local) + " bound=" + to_string(step.value) + " " +
                                  to_string(step.status));
  }
  bool any = a.mprime.accepts_empty;
  for (std::size_t ti = 0; ti < a.mprime.transitions.size(); ++ti) {
    const auto& t = a.mprime.transitions[ti];
    if (!a.mprime.final[t.to]) continue;
    if (!a.bounds.value[ti]) throw InternalError("accepting transition without a bound");
    any = true;
    a.result.bound = ord_max(a.result.bound, *a.bounds.value[ti]);
    if (a.bounds.status[ti] == BoundStatus::ConditionalOnScattered) a.result.status = BoundStatus::ConditionalOnScattered;
  }
  a.result.empty_language = !any;
  return a;
}

RankResult transducer_rank_bound(const Transducer& m, const ReachOptions& options) {
  return analyze_transducer(m, options).result;
}

}  // namespace ocrank
