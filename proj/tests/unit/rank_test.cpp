#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "ocrank/errors.hpp"
#include "ocrank/rank.hpp"

namespace ocrank {
namespace {

constexpr Ordinal w(std::uint64_t a, std::uint64_t b = 0) { return Ordinal{a, b}; }

Transducer c_power_machine() {
  // c^n on input 0^n 1^n
  Transducer m{OrderedAlphabet("c")};
  m.add_state("q0");
  m.add_state("qf");
  m.set_initial(0);
  m.set_final(1);
  m.add_transition(0, 0, 0, "c");
  m.add_transition(0, 1, 1, "eps");
  m.add_transition(1, 1, 1, "eps");
  return m;
}

TEST(Ordinal, Addition) {
  EXPECT_EQ(ord_add(w(2, 3), w(1, 5)), w(3, 5));
  EXPECT_EQ(ord_add(Ordinal::of(7), Ordinal::omega()), Ordinal::omega());
  EXPECT_EQ(ord_add(Ordinal::omega(), Ordinal::of(7)), w(1, 7));
}

TEST(Ordinal, Maximum) {
  EXPECT_EQ(ord_max(Ordinal::omega(), Ordinal::of(100)), Ordinal::omega());
  EXPECT_EQ(ord_max(w(2), w(1, 99)), w(2));
  EXPECT_EQ(ord_max(w(1, 4), w(1, 4)), w(1, 4));
}

TEST(Ordinal, Rendering) {
  EXPECT_EQ(to_string(w(0)), "0");
  EXPECT_EQ(to_string(w(0, 5)), "5");
  EXPECT_EQ(to_string(w(1)), "w");
  EXPECT_EQ(to_string(w(2)), "w*2");
  EXPECT_EQ(to_string(w(2, 3)), "w*2+3");
  EXPECT_EQ(to_string(w(1, 5)), "w+5");
}

TEST(Ordinal, LawsExhaustive) {
  const std::uint64_t n = 6;  // full range is covered by the acceptance suite
  for (std::uint64_t a = 0; a <= n; ++a)
    for (std::uint64_t b = 0; b <= n; ++b)
      for (std::uint64_t c = 0; c <= n; ++c)
        for (std::uint64_t d = 0; d <= n; ++d) {
          Ordinal x{a, b}, y{c, d};
          for (Ordinal z : {w(0, 1), w(1), w(2, 3)}) {
            ASSERT_EQ(ord_add(ord_add(x, y), z), ord_add(x, ord_add(y, z)));
          }
          EXPECT_EQ(ord_max(x, y), ord_max(y, x));
          EXPECT_EQ(ord_max(x, x), x);
          if (a == 0 && c >= 1) {
            EXPECT_EQ(ord_add(x, y), y);
          }
          EXPECT_GE(ord_add(x, y), ord_max(x, y));
        }
}

TEST(TransducerRankBound, StarOutputMachine) {
  auto r = transducer_rank_bound(testing::machine("star_output.oct"));
  ASSERT_EQ(r.kind, ResultKind::Bound);
  EXPECT_GE(r.bound, Ordinal::omega());
  EXPECT_LT(r.bound, w(2));
  EXPECT_EQ(r.status, BoundStatus::ConditionalOnScattered);
  EXPECT_FALSE(r.derivation.empty());
}

TEST(TransducerRankBound, NineStateMachineIsFinite) {
  auto r = transducer_rank_bound(testing::machine("nine_state.oct"));
  ASSERT_EQ(r.kind, ResultKind::Bound);
  EXPECT_EQ(r.bound.omegas, 0u);
  EXPECT_EQ(r.status, BoundStatus::Certified);
}

TEST(TransducerRankBound, FiniteLanguage) {
  Transducer m{OrderedAlphabet("a")};
  m.add_state("q0");
  m.add_state("q1");
  m.add_state("q2");
  m.set_initial(0);
  m.set_final(2);
  m.add_transition(0, 0, 1, "a");
  m.add_transition(1, 1, 2, "eps");
  auto r = transducer_rank_bound(m);
  ASSERT_EQ(r.kind, ResultKind::Bound);
  EXPECT_EQ(r.bound, w(0));
  EXPECT_EQ(r.status, BoundStatus::Certified);
}

TEST(TransducerRankBound, SinglePathSumsRegularRanks) {
  Transducer m{OrderedAlphabet("ab")};
  for (const char* s : {"a", "b", "c"}) m.add_state(s);
  m.set_initial(0);
  m.set_final(2);
  m.add_transition(0, 0, 1, "a*");
  m.add_transition(1, 1, 2, "b*");
  auto r = transducer_rank_bound(m);
  ASSERT_EQ(r.kind, ResultKind::Bound);
  EXPECT_EQ(r.bound, w(0, 2));
}

TEST(TransducerRankBound, DenseComponentPropagates) {
  Transducer m{OrderedAlphabet("ab")};
  for (const char* s : {"q0", "q1", "q2", "q3", "qf"}) m.add_state(s);
  m.set_initial(0);
  m.set_final(4);
  m.add_transition(0, 0, 1, "a");
  m.add_transition(1, 0, 2, "ab");
  m.add_transition(2, 1, 1, "eps");
  m.add_transition(1, 0, 3, "ba");
  m.add_transition(3, 1, 1, "eps");
  m.add_transition(1, 1, 4, "a");
  auto r = transducer_rank_bound(m);
  ASSERT_EQ(r.kind, ResultKind::NotScattered);
  ASSERT_TRUE(r.witness);
  EXPECT_NE(primitive_root(r.witness->u), primitive_root(r.witness->v));
}

TEST(TransducerRankBound, DenseOutputRegex) {
  Transducer m{OrderedAlphabet("ab")};
  m.add_state("p");
  m.add_state("q");
  m.add_state("r");
  m.set_initial(0);
  m.set_final(2);
  m.add_transition(0, 0, 1, "(ab+ba)*");
  m.add_transition(1, 1, 2, "a");
  auto r = transducer_rank_bound(m);
  EXPECT_EQ(r.kind, ResultKind::NotScattered);
}

TEST(ExprRankBound, ConcatCopies) {
  auto atom = RocExpr::leaf(testing::machine("star_output.oct"));
  auto e = atom;
  for (std::uint64_t k = 2; k <= 3; ++k) {
    e = RocExpr::concat(e, atom);
    auto r = expr_rank_bound(e);
    ASSERT_EQ(r.kind, ResultKind::Bound);
    EXPECT_GE(r.bound, w(k));
    EXPECT_LT(r.bound, w(k + 1));
  }
}

TEST(ExprRankBound, PlusOfStarOutputMachineIsDense) {
  auto r = expr_rank_bound(RocExpr::plus(RocExpr::leaf(testing::machine("star_output.oct"))));
  ASSERT_EQ(r.kind, ResultKind::NotScattered);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(r.witness->u, "ca");
  EXPECT_EQ(r.witness->v, "cba");
  EXPECT_EQ(r.witness->family(), "{cacbacacba,cbacacbaca}*cacbacbaca");
}

TEST(ExprRankBound, PlusOfPowersIsOmega) {
  auto r = expr_rank_bound(RocExpr::plus(RocExpr::leaf(c_power_machine())));
  ASSERT_EQ(r.kind, ResultKind::Bound);
  EXPECT_EQ(r.bound, w(0, 1));
}

TEST(CombineConcat, RightOperandComesFirst) {
  RankResult five;
  five.bound = w(0, 5);
  RankResult omega;
  omega.bound = w(1);
  // e1 with bound 5, e2 with bound omega: omega + 5, not 5 + omega
  EXPECT_EQ(combine_concat(five, omega).bound, w(1, 5));
  EXPECT_EQ(combine_concat(omega, five).bound, w(1));
}

TEST(CombineConcat, DensityPropagates) {
  RankResult dense;
  dense.kind = ResultKind::NotScattered;
  dense.witness = DensityWitness{"test", "", "a", "b"};
  RankResult ok;
  ok.bound = w(1);
  EXPECT_EQ(combine_concat(ok, dense).kind, ResultKind::NotScattered);
  EXPECT_EQ(combine_concat(dense, ok).kind, ResultKind::NotScattered);
}

}  // namespace
}  // namespace ocrank
