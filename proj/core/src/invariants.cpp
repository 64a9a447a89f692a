#include <algorithm>
#include <functional>
#include <sstream>

#include "ocrank/harness.hpp"

namespace ocrank {

namespace {

std::string join(const std::vector<std::uint64_t>& xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s + "}";
}

std::int64_t floor_mod(std::int64_t a, std::int64_t p) { return ((a % p) + p) % p; }

CheckResult check_rules(const TransducerPrime& mp) {
  CheckResult r{"rules", true, ""};
  for (const auto& t : mp.transitions) {
    const auto& x = mp.states[t.from];
    const auto& y = mp.states[t.to];
    auto literal = matching_rules(x, t.bit, y, mp.period);
    auto tag = classify_rule(x, t.bit, y, mp.period);
    if (literal.empty() || !tag || *tag != t.rule) {
      r.passed = false;
      r.detail = mp.label(t.from) + " -> " + mp.label(t.to) + " has no unique rule";
      return r;
    }
  }
  r.detail = std::to_string(mp.transitions.size()) + " transitions, each with one rule";
  return r;
}

CheckResult check_monotone(const TransducerPrime& mp) {
  for (const auto& t : mp.transitions) {
    if (mp.states[t.from].phase > mp.states[t.to].phase) {
      return {"phase-monotone", false, mp.label(t.from) + " -> " + mp.label(t.to)};
    }
  }
  return {"phase-monotone", true, ""};
}

CheckResult check_depths(const TransducerPrime& mp, std::size_t cap) {
  CheckResult r{"depth-soundness", true, ""};
  const auto p = static_cast<std::int64_t>(mp.period);
  std::vector<std::uint32_t> path{mp.initial};
  std::vector<std::int64_t> opens{0};
  std::size_t paths = 0;
  std::function<void()> go = [&]() {
    if (!r.passed) return;
    ++paths;
    std::uint32_t s = path.back();
    std::int64_t open = opens.back();
    const auto& ts = mp.states[s];
    auto depth = static_cast<std::int64_t>(ts.depth);
    if ((ts.phase == Phase::Up && depth != open) ||
        (ts.phase == Phase::Level && floor_mod(depth, p) != floor_mod(open, p))) {
      r = {"depth-soundness", false, mp.label(s) + " reached with open " + std::to_string(open)};
      return;
    }
    bool dyck_prefix = std::all_of(opens.begin(), opens.end(), [](std::int64_t o) { return o >= 0; });
    if (mp.final[s] && open == 0 && dyck_prefix) {
      for (std::size_t i = 0; i < path.size(); ++i) {
        const auto& x = mp.states[path[i]];
        if (x.phase == Phase::Down && static_cast<std::int64_t>(x.depth) != opens[i]) {
          r = {"depth-soundness", false,
               mp.label(path[i]) + " on an accepting run at open " + std::to_string(opens[i])};
          return;
        }
      }
    }
    if (path.size() > cap) return;
    for (const auto& t : mp.transitions) {
      if (t.from != s) continue;
      path.push_back(t.to);
      opens.push_back(open + (t.bit == 0 ? 1 : -1));
      go();
      path.pop_back();
      opens.pop_back();
    }
  };
  go();
  if (r.passed) r.detail = std::to_string(paths) + " paths";
  return r;
}

CheckResult check_flat_cycles(const TransducerPrime& mp, std::size_t max_length) {
  CheckResult r{"updown-cycles-zero", true, ""};
  for (std::uint32_t s = 0; s < mp.states.size() && r.passed; ++s) {
    Phase phase = mp.states[s].phase;
    if (phase == Phase::Level) continue;
    std::function<void(std::uint32_t, std::int64_t, std::size_t)> go = [&](std::uint32_t v, std::int64_t w,
                                                                            std::size_t len) {
      if (!r.passed || len >= max_length) return;
      for (const auto& t : mp.transitions) {
        if (t.from != v || mp.states[t.to].phase != phase) continue;
        std::int64_t w2 = w + (t.bit == 0 ? 1 : -1);
        if (t.to == s && w2 != 0) {
          r = {"updown-cycles-zero", false, "cycle at " + mp.label(s) + " has weight " + std::to_string(w2)};
          return;
        }
        go(t.to, w2, len + 1);
      }
    };
    go(s, 0, 0);
  }
  return r;
}

CheckResult check_lift(const Transducer& m, const TransducerPrime& mp, std::size_t cap) {
  std::size_t runs = 0;
  for (const auto& u : dyck_words(cap)) {
    for (const auto& run : accepting_runs(m, u)) {
      ++runs;
      try {
        auto back = project_run(mp, lift_run(mp, run));
        if (back.states != run.states || back.input != run.input) {
          return {"lift-project", false, "projection differs on input " + u};
        }
      } catch (const InternalError& e) {
        return {"lift-project", false, e.what()};
      }
    }
  }
  return {"lift-project", true, std::to_string(runs) + " runs"};
}

}  // namespace

std::vector<CheckResult> check_machine(const Transducer& m, const CheckOptions& options) {
  check_well_formed(m);
  std::vector<CheckResult> out;
  auto report = reach_sets(m, options.reach);

  CheckResult sets{"nsets-oracle", true, ""};
  auto slices = upset_oracle(m, options.counter_bound);
  for (StateId q = 0; q < m.num_states() && sets.passed; ++q) {
    auto down = report.sets[q].down.members_below(options.counter_bound + 1);
    auto up = report.sets[q].up.members_below(options.counter_bound + 1);
    if (down != slices.down[q]) sets = {"nsets-oracle", false, "N-(" + m.name(q) + ") " + join(down) + " vs " + join(slices.down[q])};
    else if (up != slices.up[q]) sets = {"nsets-oracle", false, "N+(" + m.name(q) + ") " + join(up) + " vs " + join(slices.up[q])};
  }
  out.push_back(sets);

  const std::size_t output_cap = options.output_cap.value_or(12);
  auto words = enumerate(m, options.input_cap, output_cap);
  LexLess less{&m.output_alphabet()};
  bool sorted = std::adjacent_find(words.begin(), words.end(),
                                   [&](const Word& a, const Word& b) { return !less(a, b); }) == words.end();
  out.push_back({"enumerate-sorted", sorted, std::to_string(words.size()) + " words"});

  const auto& t0 = report.types[m.initial()];
  if (std::find(t0.begin(), t0.end(), 0) == t0.end()) {
    out.push_back({"mprime", true, "skipped: no Dyck input is accepted"});
    return out;
  }
  auto mp = build_mprime(m, report);
  out.push_back(check_rules(mp));
  out.push_back(check_monotone(mp));
  out.push_back(check_depths(mp, options.input_cap));
  out.push_back(check_flat_cycles(mp, 12));
  out.push_back(check_lift(m, mp, options.input_cap));

  auto cmp = bounded_language_equal(m, mp, options.input_cap, options.output_cap);
  CheckResult eq{"language-equal", cmp.equal, "output cap " + std::to_string(cmp.output_cap)};
  if (!cmp.equal) {
    eq.detail += ", counterexample " + *cmp.counterexample + (cmp.counterexample_in_original ? " only in M" : " only in M'");
  }
  if (cmp.truncated) eq.detail += ", truncated";
  out.push_back(eq);
  return out;
}

}  // namespace ocrank
