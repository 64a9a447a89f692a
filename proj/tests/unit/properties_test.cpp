#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "ocrank/components.hpp"
#include "ocrank/errors.hpp"
#include "ocrank/harness.hpp"
#include "ocrank/rank.hpp"
#include "oracles.hpp"

namespace ocrank {
namespace {

bool accepts_dyck(const Transducer& m, const NSetReport& r) {
  const auto& t0 = r.types[m.initial()];
  return std::find(t0.begin(), t0.end(), 0) != t0.end();
}

TEST(RandomMachines, InvariantSuite) {
  std::mt19937 rng(1234);
  for (int i = 0; i < 60; ++i) {
    auto m = testing::random_machine(rng);
    CheckOptions options;
    options.input_cap = 8;
    options.output_cap = 8;
    for (const auto& r : check_machine(m, options)) {
      EXPECT_TRUE(r.passed) << "machine " << i << ": " << r.name << " " << r.detail;
    }
  }
}

TEST(RandomMachines, ForwardSetsAgainstWideFixpoint) {
  std::mt19937 rng(99);
  for (int i = 0; i < 60; ++i) {
    auto m = testing::random_machine(rng, 4, 7);
    auto report = reach_sets(m);
    const std::uint64_t cap = default_counter_cap(m.num_states());
    auto brute = testing::brute_forward(m, 3 * cap + m.num_states());
    for (StateId q = 0; q < m.num_states(); ++q)
      for (std::uint64_t n = 0; n <= 3 * cap; ++n)
        ASSERT_EQ(report.sets[q].down.contains(n), brute[q].count(n) > 0) << i << " " << m.name(q) << " " << n;
  }
}

TEST(RandomMachines, AcceptingMachinesHaveZeroAtInitial) {
  std::mt19937 rng(5);
  for (int i = 0; i < 80; ++i) {
    auto m = testing::random_machine(rng);
    auto report = reach_sets(m);
    bool nonempty = !testing::brute_language(m, 10, 4).empty();
    if (nonempty) {
      EXPECT_TRUE(accepts_dyck(m, report)) << i;
    }
  }
}

TEST(RandomMachines, CycleWeightsAreMultiplesOfPeriod) {
  std::mt19937 rng(77);
  for (int i = 0; i < 60; ++i) {
    auto m = testing::random_machine(rng);
    auto report = reach_sets(m);
    if (!accepts_dyck(m, report)) continue;
    auto mp = build_mprime(m, report);
    auto c = condense(mp);
    const auto p = static_cast<std::int64_t>(mp.period);
    for (const auto& comp : c.components) {
      if (comp.trivial) continue;
      for (auto s : comp.members) {
        std::function<void(std::uint32_t, std::int64_t, int)> walk = [&](std::uint32_t v, std::int64_t w, int len) {
          if (len >= 10) return;
          for (const auto& t : mp.transitions) {
            if (t.from != v || c.component_of[t.to] != c.component_of[s]) continue;
            std::int64_t w2 = w + (t.bit == 0 ? 1 : -1);
            if (t.to == s) {
              EXPECT_EQ(((w2 % p) + p) % p, 0) << i;
              if (comp.phase != Phase::Level) {
                EXPECT_EQ(w2, 0) << i;
              }
            }
            walk(t.to, w2, len + 1);
          }
        };
        walk(s, 0, 0);
      }
    }
  }
}

TEST(RandomMachines, RankBoundsStayBelowOmegaSquared) {
  std::mt19937 rng(31);
  int bounds = 0;
  for (int i = 0; i < 80; ++i) {
    auto m = testing::random_machine(rng);
    RankResult r;
    try {
      r = transducer_rank_bound(m);
    } catch (const ValidationError&) {
      continue;  // no accepting run at all
    }
    if (r.kind == ResultKind::Bound) {
      ++bounds;
      EXPECT_LE(r.bound.omegas, 8u);
    }
    if (r.kind == ResultKind::NotScattered) {
      ASSERT_TRUE(r.witness);
      EXPECT_NE(primitive_root(r.witness->u), primitive_root(r.witness->v));
    }
  }
  EXPECT_GT(bounds, 10);
}

}  // namespace
}  // namespace ocrank
