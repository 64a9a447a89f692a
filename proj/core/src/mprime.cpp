#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

#include "internal.hpp"
#include "ocrank/graph.hpp"
#include "ocrank/transducer.hpp"

namespace ocrank {

std::string to_string(Phase p) {
  switch (p) {
    case Phase::Up: return "↑";
    case Phase::Level: return "≡";
    case Phase::Down: return "↓";
  }
  return "?";
}

std::string phase_key(Phase p) {
  switch (p) {
    case Phase::Up: return "up";
    case Phase::Level: return "eq";
    case Phase::Down: return "down";
  }
  return "?";
}

std::string to_string(Rule r) {
  switch (r) {
    case Rule::I: return "i";
    case Rule::II: return "ii";
    case Rule::III: return "iii";
    case Rule::IV: return "iv";
  }
  return "?";
}

std::vector<Rule> matching_rules(const TypedState& x, int bit, const TypedState& y, std::uint64_t p) {
  const std::uint64_t n = x.depth, m = y.depth;
  const Phase s1 = x.phase, s2 = y.phase;
  std::vector<Rule> r;
  if (bit == 0 && n + 1 == m && m < p && s1 == s2) r.push_back(Rule::I);
  if (bit == 1 && n == m + 1 && m < p && (s2 == s1 || s2 == Phase::Down)) r.push_back(Rule::II);
  if (bit == 0 && (n + 1) % p == m % p && m >= p && n + 1 >= p && s2 == Phase::Level && s1 != Phase::Down)
    r.push_back(Rule::III);
  if (bit == 1 && (n + p - 1) % p == m % p && n >= p && m + 1 >= p && s1 == Phase::Level && s2 != Phase::Up)
    r.push_back(Rule::IV);
  return r;
}

std::optional<Rule> classify_rule(const TypedState& x, int bit, const TypedState& y, std::uint64_t p) {
  auto rules = matching_rules(x, bit, y, p);
  if (x.depth >= p) std::erase(rules, Rule::II);
  if (rules.empty()) return std::nullopt;
  if (rules.size() > 1) throw InternalError("transition matches more than one disambiguated rule");
  return rules.front();
}

std::optional<std::uint32_t> TransducerPrime::find(const TypedState& s) const {
  auto it = std::lower_bound(states.begin(), states.end(), s);
  if (it == states.end() || *it != s) return std::nullopt;
  return static_cast<std::uint32_t>(it - states.begin());
}

std::string TransducerPrime::label(std::uint32_t s) const {
  const auto& t = states.at(s);
  return "(" + base.name(t.state) + "," + std::to_string(t.depth) + "," + to_string(t.phase) + ")";
}

CounterGraph TransducerPrime::counter_graph() const {
  CounterGraph g;
  g.num_states = states.size();
  g.initial = initial;
  for (std::uint32_t s = 0; s < states.size(); ++s) {
    if (final[s]) g.finals.push_back(s);
    g.names.push_back(label(s));
  }
  for (const auto& t : transitions) g.edges.push_back({t.from, t.bit == 1, t.to});
  return g;
}

namespace {

// Configurations (q, c) with c < P reachable from (q0, 0) by a run with at
// least one decrement. Runs may be assumed to peak below P + |Q|^2 + c.
ConfigurationSet reached_after_decrement(const CounterGraph& g, std::uint64_t p) {
  const std::uint64_t cap = 2 * p + g.num_states * g.num_states + 1;
  std::vector<std::vector<std::uint8_t>> seen(g.num_states, std::vector<std::uint8_t>(cap + 1, 0));
  std::vector<std::vector<std::pair<std::uint32_t, bool>>> out(g.num_states);
  for (const auto& e : g.edges) out[e.from].emplace_back(e.to, e.decrement);
  std::deque<std::tuple<std::uint32_t, std::uint64_t, bool>> todo{{g.initial, 0, false}};
  seen[g.initial][0] = 1;
  while (!todo.empty()) {
    auto [q, c, high] = todo.front();
    todo.pop_front();
    for (auto [r, dec] : out[q]) {
      if (dec && c == 0) continue;
      std::uint64_t d = dec ? c - 1 : c + 1;
      if (d > cap) continue;
      bool h = high || dec;
      std::uint8_t bit = h ? 2 : 1;
      if (seen[r][d] & bit) continue;
      seen[r][d] |= bit;
      todo.emplace_back(r, d, h);
    }
  }
  ConfigurationSet result(g.num_states, std::vector<bool>(p, false));
  for (std::uint32_t q = 0; q < g.num_states; ++q)
    for (std::uint64_t c = 0; c < p; ++c) result[q][c] = (seen[q][c] & 2) != 0;
  return result;
}

}  // namespace

TransducerPrime build_mprime(const Transducer& m, const NSetReport& report) {
  check_well_formed(m);
  if (report.sets.size() != m.num_states() || report.types.size() != m.num_states()) {
    throw PreconditionError("N-set report does not belong to this machine");
  }
  const std::uint64_t p = report.period;
  const auto& t0 = report.types[m.initial()];
  if (std::find(t0.begin(), t0.end(), 0) == t0.end()) {
    throw ValidationError("inconsistent machine: 0 is not a type of the initial state " + m.name(m.initial()) +
                          " (no Dyck input is accepted)");
  }

  // All typed states and the literal rule transitions between them.
  std::vector<TypedState> states;
  for (StateId q = 0; q < m.num_states(); ++q) {
    for (auto k : report.types[q]) {
      if (k < p) {
        states.push_back({q, k, Phase::Up});
        states.push_back({q, k, Phase::Down});
      } else {
        states.push_back({q, k, Phase::Level});
      }
    }
  }
  std::sort(states.begin(), states.end());
  std::vector<std::vector<std::uint32_t>> of_state(m.num_states());
  for (std::uint32_t i = 0; i < states.size(); ++i) of_state[states[i].state].push_back(i);

  // Realizability data: exact N-sets plus bounded searches below P.
  CounterGraph g = m.counter_graph();
  auto below_fwd = explore_forward(g, p - 1);
  auto below_bwd = explore_backward(g, p - 1);
  auto after_decrement = reached_after_decrement(g, p);
  const auto& sets = report.sets;
  auto continues = [&](StateId q, std::uint64_t c) {
    for (const auto& t : m.transitions()) {
      if (t.from != q) continue;
      if (t.bit == 1 && c == 0) continue;
      if (sets[t.to].up.contains(t.bit == 0 ? c + 1 : c - 1)) return true;
    }
    return false;
  };
  auto level_pair = [&](StateId a, std::uint64_t k, int bit, StateId b) {
    const auto& down = sets[a].down;
    const auto& up = sets[b].up;
    std::uint64_t span = std::max(down.threshold(), up.threshold()) + std::lcm(p, std::lcm(down.period(), up.period())) + p;
    for (std::uint64_t d = k; d <= k + span; d += p) {
      std::uint64_t e = bit == 0 ? d + 1 : d - 1;
      if (e >= p && down.contains(d) && up.contains(e)) return true;
    }
    return false;
  };
  auto realizable = [&](const TypedState& x, int bit, const TypedState& y) {
    StateId a = x.state, b = y.state;
    std::uint64_t n = x.depth, k = y.depth;
    switch (x.phase) {
      case Phase::Up:
        if (y.phase == Phase::Up) return below_fwd[a][n] && continues(b, k);
        if (y.phase == Phase::Down) return below_fwd[a][n] && below_bwd[b][k];
        return below_fwd[a][n] && sets[b].up.contains(k);
      case Phase::Level:
        if (y.phase == Phase::Level) return level_pair(a, n, bit, b);
        return sets[a].down.contains(n) && below_bwd[b][k];
      case Phase::Down: return after_decrement[a][n] && below_bwd[b][k];
    }
    return false;
  };

  struct Candidate {
    std::uint32_t from, to;
    std::uint8_t bit;
    std::size_t base;
    Rule rule;
  };
  std::vector<Candidate> kept;
  std::vector<bool> used(states.size(), false);
  std::uint32_t init = static_cast<std::uint32_t>(
      std::lower_bound(states.begin(), states.end(), TypedState{m.initial(), 0, Phase::Up}) - states.begin());
  used[init] = true;
  for (std::size_t ti = 0; ti < m.transitions().size(); ++ti) {
    const auto& t = m.transitions()[ti];
    for (auto xi : of_state[t.from]) {
      for (auto yi : of_state[t.to]) {
        auto rule = classify_rule(states[xi], t.bit, states[yi], p);
        if (!rule || !realizable(states[xi], t.bit, states[yi])) continue;
        kept.push_back({xi, yi, t.bit, ti, *rule});
        used[xi] = used[yi] = true;
      }
    }
  }

  TransducerPrime mp(m);
  mp.period = p;
  mp.accepts_empty = m.is_final(m.initial());
  std::vector<std::uint32_t> renumber(states.size(), 0);
  for (std::uint32_t i = 0; i < states.size(); ++i) {
    if (!used[i]) continue;
    renumber[i] = static_cast<std::uint32_t>(mp.states.size());
    mp.states.push_back(states[i]);
    mp.final.push_back(states[i].depth == 0 && states[i].phase == Phase::Down && m.is_final(states[i].state));
  }
  mp.initial = renumber[init];
  for (const auto& c : kept) mp.transitions.push_back({renumber[c.from], c.bit, renumber[c.to], c.base, c.rule});
  return mp;
}

TransducerPrime build_mprime(const Transducer& m, const ReachOptions& options) {
  return build_mprime(m, reach_sets(m, options));
}

Automaton dyck_bounded_language(const TransducerPrime& mp, std::size_t max_input) {
  std::vector<detail::BitEdge> edges;
  for (const auto& t : mp.transitions) edges.push_back({t.from, t.bit, t.to, &mp.output(t)});
  return detail::layered_dyck_language(mp.base.output_alphabet(), mp.states.size(), mp.initial, mp.final, edges,
                                       max_input, mp.accepts_empty);
}

LanguageComparison bounded_language_equal(const Transducer& m, const TransducerPrime& mp, std::size_t max_input,
                                          std::optional<std::size_t> output_cap) {
  std::size_t pump = 1;
  for (const auto& t : m.transitions()) pump = std::max(pump, t.output->num_states());
  LanguageComparison r;
  r.output_cap = output_cap.value_or(4 * std::max<std::size_t>(max_input, 1) * pump);
  Automaton a = dyck_bounded_language(m, max_input);
  Automaton b = dyck_bounded_language(mp, max_input);
  for (const Automaton* x : {&a, &b}) {
    if (is_empty(*x)) continue;
    auto longest = longest_word_length(*x);
    if (!longest || *longest > r.output_cap) r.truncated = true;
  }
  if (auto diff = first_difference(a, b, r.output_cap)) {
    r.equal = false;
    r.counterexample = diff->word;
    r.counterexample_in_original = diff->in_first;
  }
  return r;
}

std::string to_dot(const TransducerPrime& mp) {
  std::ostringstream os;
  os << "digraph \"" << detail::dot_escape((mp.base.label.empty() ? "M" : mp.base.label) + "'") << "\" {\n";
  os << "  rankdir=LR;\n";
  for (std::uint32_t s = 0; s < mp.states.size(); ++s) {
    os << "  n" << s << " [label=\"" << detail::dot_escape(mp.label(s)) << "\", shape="
       << (mp.final[s] ? "doublecircle" : "circle") << (s == mp.initial ? ", style=bold" : "") << "];\n";
  }
  for (const auto& t : mp.transitions) {
    os << "  n" << t.from << " -> n" << t.to << " [label=\"" << int(t.bit) << " / "
       << detail::dot_escape(mp.base_transition(t).output_text) << " (" << to_string(t.rule) << ")\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace ocrank
