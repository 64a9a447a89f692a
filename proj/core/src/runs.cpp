#include <algorithm>

#include "ocrank/transducer.hpp"

namespace ocrank {

PrimeRun lift_run(const TransducerPrime& mp, const Run& run) {
  const std::size_t n = run.input.size();
  if (run.states.size() != n + 1) throw PreconditionError("run has the wrong number of states");
  if (!in_dyck(run.input)) throw PreconditionError("lift_run needs a run on a Dyck input");
  const auto p = static_cast<std::int64_t>(mp.period);

  std::vector<std::int64_t> depth(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) depth[i + 1] = depth[i] + (run.input[i] == '0' ? 1 : -1);

  // Last index of the initial stretch below P, first index of the final one.
  std::size_t up_end = 0;
  while (up_end + 1 <= n && depth[up_end + 1] < p) ++up_end;
  std::size_t down_begin = n;
  while (down_begin > 0 && depth[down_begin - 1] < p) --down_begin;
  const bool stays_low = up_end == n;

  PrimeRun out;
  out.input = run.input;
  for (std::size_t i = 0; i <= n; ++i) {
    TypedState s{run.states[i], 0, Phase::Up};
    if (stays_low) {
      s.phase = i == n && n > 0 ? Phase::Down : Phase::Up;
      s.depth = static_cast<std::uint64_t>(depth[i]);
    } else if (i <= up_end) {
      s.depth = static_cast<std::uint64_t>(depth[i]);
    } else if (i >= down_begin) {
      s.phase = Phase::Down;
      s.depth = static_cast<std::uint64_t>(depth[i]);
    } else {
      s.phase = Phase::Level;
      s.depth = static_cast<std::uint64_t>(depth[i] % p + p);
    }
    auto idx = mp.find(s);
    if (!idx) {
      throw InternalError("lifted state (" + mp.base.name(s.state) + "," + std::to_string(s.depth) + "," +
                          to_string(s.phase) + ") is missing from M'");
    }
    out.states.push_back(*idx);
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::uint8_t bit = run.input[i] == '0' ? 0 : 1;
    bool present = std::any_of(mp.transitions.begin(), mp.transitions.end(), [&](const PrimeTransition& t) {
      return t.from == out.states[i] && t.to == out.states[i + 1] && t.bit == bit;
    });
    if (!present) {
      throw InternalError("lifted transition " + mp.label(out.states[i]) + " -> " + mp.label(out.states[i + 1]) +
                          " is missing from M'");
    }
  }
  return out;
}

Run project_run(const TransducerPrime& mp, const PrimeRun& run) {
  Run out;
  out.input = run.input;
  for (auto s : run.states) out.states.push_back(mp.states.at(s).state);
  return out;
}

}  // namespace ocrank
