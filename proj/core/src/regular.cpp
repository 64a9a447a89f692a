#include <algorithm>

#include "ocrank/graph.hpp"
#include "ocrank/regular.hpp"

namespace ocrank {

namespace {

using State = Automaton::State;

// Nonempty words leading from q back to q.
Automaton cycle_language(const Automaton& a, State q) {
  Automaton c(a.alphabet());
  for (State s = 0; s < a.num_states(); ++s) c.add_state();
  State fresh = c.add_state();
  for (State s = 0; s < a.num_states(); ++s)
    for (const auto& e : a.edges(s)) c.add_edge(s, e.letter, e.target);
  for (const auto& e : a.edges(q)) c.add_edge(fresh, e.letter, e.target);
  c.set_initial(fresh);
  c.set_final(q);
  return trim(c);
}

}  // namespace

ScatteredCheck regular_scattered(const Automaton& input) {
  Automaton d = minimize(input);
  for (State q = 0; q < d.num_states(); ++q) {
    Automaton cycles = cycle_language(d, q);
    auto x = shortest_word(cycles);
    if (!x) continue;
    if (auto y = power_counterexample(cycles, primitive_root(*x))) {
      return ScatteredCheck{false, q, *x, *y};
    }
  }
  return {};
}

std::size_t finite_rank_bound(const Automaton& input) {
  if (!regular_scattered(input).scattered) {
    throw PreconditionError("finite_rank_bound of a language that is not scattered");
  }
  Automaton d = minimize(input);
  graph::Adjacency adj(d.num_states());
  for (State s = 0; s < d.num_states(); ++s)
    for (const auto& e : d.edges(s)) adj[s].push_back(e.target);
  auto scc = graph::strongly_connected_components(adj);
  std::vector<std::size_t> best(scc.components.size(), 0);
  std::size_t result = 0;
  for (std::size_t c = 0; c < scc.components.size(); ++c) {
    const auto& comp = scc.components[c];
    bool nontrivial = comp.size() > 1 ||
                      std::find(adj[comp[0]].begin(), adj[comp[0]].end(), comp[0]) != adj[comp[0]].end();
    best[c] += nontrivial ? 1 : 0;
    result = std::max(result, best[c]);
    for (State s : comp)
      for (State t : adj[s]) {
        auto tc = scc.component_of[t];
        if (tc != c) best[tc] = std::max(best[tc], best[c]);
      }
  }
  return result;
}

}  // namespace ocrank
