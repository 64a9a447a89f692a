#include "ocrank/components.hpp"

#include <algorithm>
#include <limits>

#include "ocrank/graph.hpp"

namespace ocrank {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::FullyCertified: return "FullyCertified";
    case Verdict::ZeroCertified: return "ZeroCertified";
    case Verdict::QuasiDenseWitness: return "QuasiDenseWitness";
  }
  return "?";
}

Condensation condense(const TransducerPrime& mp) {
  graph::Adjacency adj(mp.states.size());
  for (const auto& t : mp.transitions) adj[t.from].push_back(t.to);
  auto scc = graph::strongly_connected_components(adj);
  Condensation out;
  out.component_of = scc.component_of;
  for (auto& members : scc.components) {
    Component c;
    c.phase = mp.states[members.front()].phase;
    for (auto s : members) {
      if (mp.states[s].phase != c.phase) {
        throw InternalError("component of " + mp.label(members.front()) + " mixes phases");
      }
    }
    c.trivial = members.size() == 1 &&
                std::find(adj[members[0]].begin(), adj[members[0]].end(), members[0]) == adj[members[0]].end();
    c.members = std::move(members);
    out.components.push_back(std::move(c));
  }
  for (std::uint32_t i = 0; i < out.components.size(); ++i) {
    for (auto s : out.components[i].members) {
      for (auto t : adj[s]) {
        auto j = out.component_of[t];
        if (j != i) out.components[j].height = std::max(out.components[j].height, out.components[i].height + 1);
      }
    }
  }
  return out;
}

namespace {

struct LocalEdge {
  std::uint32_t from, to;
  int weight;
  const PrimeTransition* t;
};

std::vector<LocalEdge> local_edges(const TransducerPrime& mp, const Component& c) {
  std::vector<LocalEdge> r;
  auto local = [&](std::uint32_t s) -> std::int64_t {
    auto it = std::lower_bound(c.members.begin(), c.members.end(), s);
    if (it == c.members.end() || *it != s) return -1;
    return it - c.members.begin();
  };
  for (const auto& t : mp.transitions) {
    auto a = local(t.from), b = local(t.to);
    if (a < 0 || b < 0) continue;
    r.push_back({static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b), t.bit == 0 ? 1 : -1, &t});
  }
  return r;
}

struct Mean {
  std::int64_t num;
  std::int64_t den;  // > 0
};

bool less(const Mean& a, const Mean& b) { return a.num * b.den < b.num * a.den; }

// Karp's minimum cycle mean of a strongly connected graph.
Mean min_cycle_mean(std::size_t n, const std::vector<LocalEdge>& edges, int sign) {
  constexpr std::int64_t inf = std::numeric_limits<std::int64_t>::max() / 4;
  std::vector<std::vector<std::int64_t>> d(n + 1, std::vector<std::int64_t>(n, inf));
  d[0][0] = 0;
  for (std::size_t k = 1; k <= n; ++k)
    for (const auto& e : edges)
      if (d[k - 1][e.from] < inf) d[k][e.to] = std::min(d[k][e.to], d[k - 1][e.from] + sign * e.weight);
  bool found = false;
  Mean best{0, 1};
  for (std::size_t v = 0; v < n; ++v) {
    if (d[n][v] >= inf) continue;
    bool any = false;
    Mean worst{0, 1};
    for (std::size_t k = 0; k < n; ++k) {
      if (d[k][v] >= inf) continue;
      Mean m{d[n][v] - d[k][v], static_cast<std::int64_t>(n - k)};
      if (!any || less(worst, m)) worst = m;
      any = true;
    }
    if (any && (!found || less(worst, best))) {
      best = worst;
      found = true;
    }
  }
  return best;
}

std::uint32_t local_index(const Component& c, std::uint32_t s) {
  auto it = std::lower_bound(c.members.begin(), c.members.end(), s);
  if (it == c.members.end() || *it != s) throw PreconditionError("state is not in the component");
  return static_cast<std::uint32_t>(it - c.members.begin());
}

}  // namespace

CycleProfile cycle_profile(const TransducerPrime& mp, const Component& c) {
  CycleProfile p;
  if (c.trivial) return p;
  auto edges = local_edges(mp, c);
  Mean lo = min_cycle_mean(c.members.size(), edges, 1);
  Mean hi = min_cycle_mean(c.members.size(), edges, -1);
  hi.num = -hi.num;
  p.has_positive = hi.num > 0;
  p.has_negative = lo.num < 0;
  p.has_zero = (p.has_positive && p.has_negative) || hi.num == 0 || lo.num == 0;
  return p;
}

Automaton cycle_outputs(const TransducerPrime& mp, const Component& c, std::uint32_t state) {
  std::uint32_t s = local_index(c, state);
  std::vector<LabeledEdge> edges;
  for (const auto& e : local_edges(mp, c)) edges.push_back({e.from, e.to, &mp.output(*e.t)});
  return path_language(mp.base.output_alphabet(), c.members.size(), edges, std::span(&s, 1), std::span(&s, 1),
                       true);
}

Automaton zero_cycle_outputs(const TransducerPrime& mp, const Component& c, std::uint32_t state,
                             std::size_t bound) {
  std::uint32_t s = local_index(c, state);
  const auto width = static_cast<std::int64_t>(2 * bound + 1);
  const auto b = static_cast<std::int64_t>(bound);
  auto node = [&](std::uint32_t v, std::int64_t w) { return static_cast<std::uint32_t>(v * width + (w + b)); };
  std::vector<LabeledEdge> edges;
  for (const auto& e : local_edges(mp, c)) {
    for (std::int64_t w = -b; w <= b; ++w) {
      std::int64_t w2 = w + e.weight;
      if (w2 < -b || w2 > b) continue;
      edges.push_back({node(e.from, w), node(e.to, w2), &mp.output(*e.t)});
    }
  }
  std::uint32_t start = node(s, 0);
  return path_language(mp.base.output_alphabet(), c.members.size() * static_cast<std::size_t>(width), edges,
                       std::span(&start, 1), std::span(&start, 1), true);
}

namespace {

struct RootScan {
  bool conflict = false;
  std::uint32_t state = 0;
  Word first, second;
};

// Common root per state of the given cycle languages, or the first conflict.
template <typename Languages>
RootScan scan_roots(const Component& c, Languages languages, std::map<std::uint32_t, Word>& roots) {
  for (auto s : c.members) {
    Automaton a = languages(s);
    auto x = shortest_word(a, true);
    if (!x) {
      roots[s] = "";
      continue;
    }
    Word v = primitive_root(*x);
    if (auto y = power_counterexample(a, v)) return {true, s, *x, *y};
    roots[s] = v;
  }
  return {};
}

}  // namespace

ComponentVerdict certify_component(const TransducerPrime& mp, const Component& c) {
  ComponentVerdict out;
  if (c.trivial) return out;
  out.profile = cycle_profile(mp, c);
  auto witness = [&](const RootScan& scan) {
    out.kind = Verdict::QuasiDenseWitness;
    out.roots.clear();
    out.witness_state = scan.state;
    out.first = scan.first;
    out.second = scan.second;
    return out;
  };

  auto stage1 = scan_roots(c, [&](std::uint32_t s) { return cycle_outputs(mp, c, s); }, out.roots);
  if (!stage1.conflict) return out;
  // With a positive cycle, or with only zero-weight cycles, the conflict is genuine.
  if (out.profile.has_positive || !out.profile.has_negative) return witness(stage1);

  out.kind = Verdict::ZeroCertified;
  out.roots.clear();
  out.zero_cycle_bound = 2 * c.members.size() * mp.period;
  if (!out.profile.has_zero) return out;
  auto stage2 = scan_roots(
      c, [&](std::uint32_t s) { return zero_cycle_outputs(mp, c, s, out.zero_cycle_bound); }, out.roots);
  if (stage2.conflict) return witness(stage2);
  return out;
}

}  // namespace ocrank
