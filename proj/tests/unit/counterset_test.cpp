#include <gtest/gtest.h>

#include <map>
#include <numeric>
#include <random>

#include "fixtures.hpp"
#include "ocrank/counterset.hpp"
#include "ocrank/errors.hpp"
#include "ocrank/harness.hpp"
#include "ocrank/transducer.hpp"
#include "oracles.hpp"

namespace ocrank {
namespace {

UPSet from(const testing::Pattern& p) { return UPSet::from_pattern(p.threshold, p.below, p.period, p.residues); }

TEST(UPSet, Membership) {
  auto s = UPSet::progression(0, 3);
  EXPECT_TRUE(s.contains(9));
  EXPECT_FALSE(s.contains(10));
  auto q4 = UPSet::of({2}).unite(UPSet::progression(5, 6));
  EXPECT_TRUE(q4.contains(2));
  EXPECT_FALSE(q4.contains(8));
  EXPECT_TRUE(q4.contains(11));
  UPSet empty;
  EXPECT_TRUE(empty.empty());
  for (std::uint64_t n = 0; n < 30; ++n) EXPECT_FALSE(empty.contains(n));
}

TEST(UPSet, Intersect) {
  EXPECT_EQ(UPSet::progression(0, 3).intersect(UPSet::naturals()), UPSet::progression(0, 3));
  auto mixed = UPSet::of({2}).unite(UPSet::progression(1, 2));
  EXPECT_EQ(UPSet::progression(2, 3).intersect(mixed), UPSet::of({2}).unite(UPSet::progression(5, 6)));
  EXPECT_TRUE(UPSet::progression(0, 2).intersect(UPSet::progression(1, 2)).empty());
}

TEST(UPSet, Union) {
  auto s = UPSet::progression(0, 3);
  EXPECT_EQ(s.unite(UPSet()), s);
  EXPECT_EQ(UPSet::progression(0, 2).unite(UPSet::progression(1, 2)), UPSet::naturals());
}

TEST(UPSet, CanonicalForm) {
  auto s = UPSet::from_pattern(4, {true, false, true, false}, 4, {true, false, true, false});
  EXPECT_EQ(s, UPSet::progression(0, 2));
  EXPECT_EQ(s.period(), 2u);
  EXPECT_EQ(s.threshold(), 0u);
  EXPECT_TRUE(UPSet::of({0, 3}).finite());
  EXPECT_FALSE(UPSet::naturals().finite());
}

TEST(UPSet, Rendering) {
  EXPECT_EQ(UPSet::of({2}).unite(UPSet::progression(5, 6)).to_string(), "{2} ∪ {5+6t}");
  EXPECT_EQ(UPSet::progression(0, 3).to_string(), "{3t}");
  EXPECT_EQ(UPSet::naturals().to_string(), "{t}");
  EXPECT_EQ(UPSet::progression(1, 1).to_string(), "{1+t}");
  EXPECT_EQ(UPSet::of({0, 3}).to_string(), "{0,3}");
  EXPECT_EQ(UPSet().to_string(), "∅");
  EXPECT_EQ(UPSet::of({2}).unite(UPSet::progression(1, 2)).to_string(), "{2} ∪ {1+2t}");
  EXPECT_EQ(UPSet::of({0}).to_string(), "{0}");
}

TEST(UPSet, ArithmeticAgainstPointwise) {
  std::mt19937 rng(42);
  for (int i = 0; i < 500; ++i) {
    auto p1 = testing::random_pattern(rng);
    auto p2 = testing::random_pattern(rng);
    auto s1 = from(p1);
    auto s2 = from(p2);
    auto meet = s1.intersect(s2);
    auto join = s1.unite(s2);
    std::uint64_t limit = 10 * std::lcm(p1.period, p2.period) + p1.threshold + p2.threshold;
    for (std::uint64_t n = 0; n <= limit; ++n) {
      ASSERT_EQ(s1.contains(n), p1.contains(n));
      ASSERT_EQ(meet.contains(n), p1.contains(n) && p2.contains(n)) << n;
      ASSERT_EQ(join.contains(n), p1.contains(n) || p2.contains(n)) << n;
    }
    EXPECT_EQ(std::lcm(p1.period, p2.period) % meet.period(), 0u);
  }
}

TEST(UPSet, MinimalPeriodAndThreshold) {
  std::mt19937 rng(8);
  for (int i = 0; i < 300; ++i) {
    auto p = testing::random_pattern(rng);
    auto s = from(p);
    // no smaller period or threshold describes the same membership
    std::uint64_t horizon = 4 * 60 + 20;
    auto same_tail = [&](std::uint64_t b, std::uint64_t per) {
      for (std::uint64_t n = b; n < horizon; ++n)
        if (p.contains(n) != p.contains(n + per)) return false;
      return true;
    };
    ASSERT_TRUE(same_tail(s.threshold(), s.period()));
    for (std::uint64_t per = 1; per < s.period(); ++per) EXPECT_FALSE(same_tail(s.threshold() + 60, per));
    if (s.threshold() > 0) {
      EXPECT_FALSE(same_tail(s.threshold() - 1, s.period()));
    }
  }
}

struct Row {
  std::string down;
  std::string up;
  std::string both;
};

// Values confirmed by the configuration search in brute_forward and by hand on
// the drawn graph.
const std::map<std::string, Row> kNineStateTable{
    {"q0", {"{3t}", "{t}", "{3t}"}},
    {"q1", {"{1+3t}", "{t}", "{1+3t}"}},
    {"q2", {"{2+3t}", "{t}", "{2+3t}"}},
    {"q3", {"{2+3t}", "{1+t}", "{2+3t}"}},
    {"q4", {"{2+3t}", "{2} ∪ {1+2t}", "{2} ∪ {5+6t}"}},
    {"q5", {"{t}", "{2t}", "{2t}"}},
    {"q6", {"{t}", "{1+2t}", "{1+2t}"}},
    {"q7", {"{1+3t}", "{1}", "{1}"}},
    {"q8", {"{3t}", "{0}", "{0}"}},
};

TEST(ReachSets, NineStateMachineTable) {
  auto m = testing::machine("nine_state.oct");
  auto report = reach_sets(m);
  EXPECT_EQ(report.period, 6u);
  for (StateId q = 0; q < m.num_states(); ++q) {
    const auto& row = kNineStateTable.at(m.name(q));
    EXPECT_EQ(report.sets[q].down.to_string(), row.down) << m.name(q);
    EXPECT_EQ(report.sets[q].up.to_string(), row.up) << m.name(q);
    EXPECT_EQ(report.sets[q].both.to_string(), row.both) << m.name(q);
  }
}

TEST(ReachSets, NineStateMachineForwardSetsAgainstFixpoint) {
  auto m = testing::machine("nine_state.oct");
  auto report = reach_sets(m);
  auto brute = testing::brute_forward(m, 60);
  for (StateId q = 0; q < m.num_states(); ++q) {
    for (std::uint64_t n = 0; n <= 40; ++n) {
      EXPECT_EQ(report.sets[q].down.contains(n), brute[q].count(n) > 0) << m.name(q) << " " << n;
    }
  }
}

TEST(ReachSets, StarOutputMachineFinalState) {
  auto m = testing::machine("star_output.oct");
  auto report = reach_sets(m);
  StateId qf = *m.find_state("qf");
  // configurations reached by prefixes of Dyck words of length <= 24
  std::set<std::pair<StateId, std::int64_t>> seen;
  std::vector<std::pair<StateId, std::int64_t>> frontier{{m.initial(), 0}};
  seen.insert(frontier[0]);
  for (int len = 0; len < 24; ++len) {
    std::vector<std::pair<StateId, std::int64_t>> next;
    for (auto [q, n] : frontier) {
      for (const auto& t : m.transitions()) {
        if (t.from != q) continue;
        std::int64_t k = n + (t.bit == 0 ? 1 : -1);
        if (k < 0) continue;
        if (seen.insert({t.to, k}).second) next.emplace_back(t.to, k);
      }
    }
    frontier = std::move(next);
  }
  for (std::int64_t n = 0; n <= 10; ++n) {
    EXPECT_EQ(report.sets[qf].down.contains(n), seen.count({qf, n}) > 0) << n;
  }
  EXPECT_TRUE(report.sets[qf].both.contains(0));
  EXPECT_EQ(report.sets[qf].both.to_string(), "{t}");
  EXPECT_EQ(report.sets[qf].up.to_string(), "{t}");
}

TEST(ReachSets, SingleFinalStateWithoutTransitions) {
  Transducer m{OrderedAlphabet("a")};
  m.set_initial(m.add_state("q0"));
  m.set_final(0);
  auto report = reach_sets(m);
  EXPECT_EQ(report.sets[0].both, UPSet::of({0}));
  EXPECT_EQ(report.period, 2u);
}

TEST(ReachSets, PeriodAndTypes) {
  for (const char* name : {"star_output.oct", "nine_state.oct"}) {
    auto m = testing::machine(name);
    auto r = reach_sets(m);
    ASSERT_GE(r.period, 2u);
    for (StateId q = 0; q < m.num_states(); ++q) {
      const auto& s = r.sets[q];
      EXPECT_EQ(s.both, s.down.intersect(s.up));
      if (!s.both.finite()) {
        EXPECT_EQ(r.period % s.both.period(), 0u);
      }
      for (auto rem : s.both.remainders()) EXPECT_LT(rem, r.period);
      // types rebuild N(q)
      std::vector<bool> tau(2 * r.period, false);
      for (auto n : r.types[q]) tau[n] = true;
      for (std::uint64_t n = 0; n < 2 * r.period; ++n) EXPECT_EQ(tau[n], s.both.contains(n));
      for (std::uint64_t n = 0; n <= 4 * r.period + s.both.threshold(); ++n) {
        bool rebuilt = n < r.period ? tau[n] : tau[r.period + n % r.period];
        EXPECT_EQ(rebuilt, s.both.contains(n)) << name << " " << m.name(q) << " " << n;
      }
    }
  }
}

TEST(ReachSets, SmallExplicitCapFailsLoudly) {
  auto m = testing::machine("nine_state.oct");
  EXPECT_THROW(reach_sets(m, ReachOptions{4}), CertificationError);
}

TEST(ReachSets, DefaultCap) { EXPECT_EQ(default_counter_cap(3), 2u * 9 + 12 + 4); }

TEST(ComputePeriod, RaisedAboveRemainders) {
  std::vector<UPSet> sets{UPSet::of({5}), UPSet::progression(0, 2)};
  auto p = compute_period(sets);
  EXPECT_EQ(p % 2, 0u);
  EXPECT_GT(p, 5u);
  std::vector<UPSet> none{UPSet::of({0})};
  EXPECT_EQ(compute_period(none), 2u);
}

TEST(WorkedCloseImage, Examples) {
  const auto binary = OrderedAlphabet::binary();
  EXPECT_EQ(worked_close_image(compile("(000+01)*0(1(11)*+11)", binary)), UPSet::naturals());
  EXPECT_EQ(worked_close_image(compile("11", binary)), UPSet::of({2}));
  EXPECT_EQ(worked_close_image(compile("01", binary)), UPSet::of({0}));
}

}  // namespace
}  // namespace ocrank
