#include <algorithm>
#include <deque>
#include <numeric>

#include "ocrank/counterset.hpp"
#include "ocrank/graph.hpp"

namespace ocrank {

namespace {

struct Move {
  std::uint32_t to;
  int delta;
};
using Moves = std::vector<std::vector<Move>>;

Moves forward_moves(const CounterGraph& g) {
  Moves m(g.num_states);
  for (const auto& e : g.edges) m[e.from].push_back({e.to, e.decrement ? -1 : 1});
  return m;
}

// Walking an edge against its direction undoes its counter effect.
Moves backward_moves(const CounterGraph& g) {
  Moves m(g.num_states);
  for (const auto& e : g.edges) m[e.to].push_back({e.from, e.decrement ? 1 : -1});
  return m;
}

ConfigurationSet explore(const Moves& moves, std::span<const std::uint32_t> seeds, std::uint64_t cap) {
  ConfigurationSet reached(moves.size(), std::vector<bool>(cap + 1, false));
  std::deque<std::pair<std::uint32_t, std::uint64_t>> todo;
  for (auto s : seeds) {
    if (!reached[s][0]) {
      reached[s][0] = true;
      todo.emplace_back(s, 0);
    }
  }
  while (!todo.empty()) {
    auto [q, c] = todo.front();
    todo.pop_front();
    for (const auto& mv : moves[q]) {
      if (mv.delta < 0 && c == 0) continue;
      std::uint64_t d = mv.delta < 0 ? c - 1 : c + 1;
      if (d > cap || reached[mv.to][d]) continue;
      reached[mv.to][d] = true;
      todo.emplace_back(mv.to, d);
    }
  }
  return reached;
}

// Smallest period, then smallest threshold, that explains bits[0..window] with
// the periodic part observed over at least half of the window.
std::optional<UPSet> infer_tail(const std::vector<bool>& bits, std::uint64_t window) {
  for (std::uint64_t p = 1; 2 * (2 * p) <= window + 1; ++p) {
    std::uint64_t b = window + 1 - p;
    while (b > 0 && bits[b - 1] == bits[b - 1 + p]) --b;
    if (2 * (b + 2 * p) > window + 1) continue;
    std::vector<bool> below(bits.begin(), bits.begin() + static_cast<std::ptrdiff_t>(b));
    std::vector<bool> residues(p, false);
    for (std::uint64_t n = b; n < b + p; ++n) residues[n % p] = bits[n];
    return UPSet::from_pattern(b, std::move(below), p, std::move(residues));
  }
  return std::nullopt;
}

std::string state_label(const CounterGraph& g, std::uint32_t q) {
  return q < g.names.size() ? g.names[q] : "#" + std::to_string(q);
}

// States from which a configuration can be pumped to a strictly larger counter
// value and then lead to q.
std::vector<bool> pump_witnessed(const Moves& moves, const ConfigurationSet& reached, std::uint64_t window,
                                 std::uint64_t cap) {
  const std::size_t n = moves.size();
  std::vector<graph::Node> pumpable;
  for (std::uint32_t z = 0; z < n; ++z) {
    auto first = std::find(reached[z].begin(), reached[z].begin() + static_cast<std::ptrdiff_t>(window + 1), true);
    if (first == reached[z].begin() + static_cast<std::ptrdiff_t>(window + 1)) continue;
    auto c = static_cast<std::uint64_t>(first - reached[z].begin());
    // Explore from (z, c) alone, on a translated copy of the moves.
    ConfigurationSet from(n, std::vector<bool>(cap + 1, false));
    std::deque<std::pair<std::uint32_t, std::uint64_t>> todo{{z, c}};
    from[z][c] = true;
    bool pumped = false;
    while (!todo.empty() && !pumped) {
      auto [q, d] = todo.front();
      todo.pop_front();
      for (const auto& mv : moves[q]) {
        if (mv.delta < 0 && d == 0) continue;
        std::uint64_t e = mv.delta < 0 ? d - 1 : d + 1;
        if (e > cap || from[mv.to][e]) continue;
        if (mv.to == z && e > c) {
          pumped = true;
          break;
        }
        from[mv.to][e] = true;
        todo.emplace_back(mv.to, e);
      }
    }
    if (pumped) pumpable.push_back(z);
  }
  graph::Adjacency adj(n);
  for (std::uint32_t q = 0; q < n; ++q)
    for (const auto& mv : moves[q]) adj[q].push_back(mv.to);
  return graph::reachable_from(adj, pumpable);
}

std::vector<UPSet> certified_sets(const CounterGraph& g, const Moves& moves, std::span<const std::uint32_t> seeds,
                                  std::uint64_t cap, const char* what) {
  const std::uint64_t n = g.num_states;
  const std::uint64_t slack = n * n;
  auto fail = [&](const std::string& why) -> CertificationError {
    return CertificationError(why + " (counter cap " + std::to_string(cap) +
                              "); rerun with a larger --counter-cap");
  };
  if (cap < slack + 8) throw fail("counter cap leaves no exact window above |Q|^2 = " + std::to_string(slack));
  const std::uint64_t window = cap - slack;
  const std::uint64_t window2 = 2 * cap - slack;
  auto reached = explore(moves, seeds, cap);
  auto reached2 = explore(moves, seeds, 2 * cap);
  auto pumps = pump_witnessed(moves, reached, window, cap);

  std::vector<UPSet> out;
  for (std::uint32_t q = 0; q < n; ++q) {
    std::string label = std::string(what) + "(" + state_label(g, q) + ")";
    auto s = infer_tail(reached[q], window);
    if (!s) throw fail("no periodic tail of " + label + " within the exact window [0," + std::to_string(window) + "]");
    for (std::uint64_t c = 0; c <= window2; ++c) {
      if (s->contains(c) != reached2[q][c]) {
        throw fail("periodic tail " + s->to_string() + " of " + label + " is contradicted at " + std::to_string(c));
      }
    }
    if (!s->finite() && !pumps[q]) throw fail("no pumping witness for the infinite set " + label);
    out.push_back(std::move(*s));
  }
  return out;
}

std::vector<std::uint64_t> candidate_caps(std::size_t num_states, const ReachOptions& options) {
  if (options.counter_cap) return {*options.counter_cap};
  auto base = default_counter_cap(num_states);
  return {base, 2 * base, 4 * base, 8 * base};
}

template <typename F>
auto with_cap_retries(std::size_t num_states, const ReachOptions& options, F compute) {
  auto caps = candidate_caps(num_states, options);
  for (std::size_t i = 0;; ++i) {
    try {
      return compute(caps[i]);
    } catch (const CertificationError&) {
      if (i + 1 == caps.size()) throw;
    }
  }
}

}  // namespace

ConfigurationSet explore_forward(const CounterGraph& g, std::uint64_t cap) {
  std::uint32_t init = g.initial;
  return explore(forward_moves(g), std::span<const std::uint32_t>(&init, 1), cap);
}

ConfigurationSet explore_backward(const CounterGraph& g, std::uint64_t cap) {
  return explore(backward_moves(g), g.finals, cap);
}

std::uint64_t default_counter_cap(std::size_t num_states) {
  std::uint64_t n = num_states;
  return 2 * n * n + 4 * n + 4;
}

std::uint64_t compute_period(std::span<const UPSet> n_sets) {
  std::uint64_t l = 1;
  std::uint64_t top = 0;
  for (const auto& s : n_sets) {
    if (!s.finite()) l = std::lcm(l, s.period());
    for (auto r : s.remainders()) top = std::max(top, r);
  }
  std::uint64_t p = l;
  while (p <= top || p < 2) p += l;
  return p;
}

NSetReport reach_sets(const CounterGraph& g, const ReachOptions& options) {
  if (g.num_states == 0 || g.initial >= g.num_states) throw PreconditionError("reach_sets on a machine without states");
  return with_cap_retries(g.num_states, options, [&](std::uint64_t cap) {
    std::uint32_t init = g.initial;
    auto down = certified_sets(g, forward_moves(g), std::span<const std::uint32_t>(&init, 1), cap, "N-");
    auto up = certified_sets(g, backward_moves(g), g.finals, cap, "N+");
    NSetReport r;
    r.counter_cap = cap;
    r.exact_window = cap - static_cast<std::uint64_t>(g.num_states) * g.num_states;
    std::vector<UPSet> both;
    for (std::size_t q = 0; q < g.num_states; ++q) {
      both.push_back(down[q].intersect(up[q]));
      r.sets.push_back({down[q], up[q], both.back()});
    }
    r.period = compute_period(both);
    for (const auto& s : both) r.types.push_back(s.members_below(2 * r.period));
    return r;
  });
}

UPSet worked_close_image(const Automaton& input, const ReachOptions& options) {
  for (char c : input.alphabet().letters()) {
    if (c != '0' && c != '1') throw PreconditionError("worked_close_image needs an automaton over {0,1}");
  }
  Automaton a = trim(input);
  if (a.num_states() == 0) return {};
  CounterGraph g;
  g.num_states = a.num_states();
  g.finals = a.final_states();
  for (Automaton::State s = 0; s < a.num_states(); ++s)
    for (const auto& e : a.edges(s)) g.edges.push_back({s, a.alphabet().letter(e.letter) == '1', e.target});
  return with_cap_retries(g.num_states, options, [&](std::uint64_t cap) {
    auto up = certified_sets(g, backward_moves(g), g.finals, cap, "close image at ");
    UPSet out;
    for (auto s : a.initial_states()) out = out.unite(up[s]);
    return out;
  });
}

}  // namespace ocrank
