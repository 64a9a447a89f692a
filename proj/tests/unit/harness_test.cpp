#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "ocrank/harness.hpp"
#include "oracles.hpp"

namespace ocrank {
namespace {

bool strictly_sorted(const std::vector<Word>& words, const OrderedAlphabet& a) {
  for (std::size_t i = 0; i + 1 < words.size(); ++i) {
    auto r = relate(words[i], words[i + 1], a);
    if (r != WordRelation::StrictlyBefore && r != WordRelation::ProperPrefix) return false;
  }
  return true;
}

// c^n (b^* a)^n for 1 <= n <= max_n, length <= cap, by direct expansion.
std::set<Word> star_output_expansion(std::size_t max_n, std::size_t cap) {
  std::set<Word> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    std::set<Word> tails{""};
    for (std::size_t i = 0; i < n; ++i) {
      std::set<Word> next;
      for (const auto& t : tails)
        for (std::size_t bs = 0; t.size() + bs + 1 + n <= cap + n; ++bs) next.insert(t + std::string(bs, 'b') + "a");
      tails = std::move(next);
    }
    for (const auto& t : tails)
      if (n + t.size() <= cap) out.insert(std::string(n, 'c') + t);
  }
  return out;
}

TEST(DyckWords, MatchGrammarAndCatalan) {
  auto words = dyck_words(12);
  std::set<Word> expected;
  for (const auto& w : testing::all_words("01", 12))
    if (testing::dyck_grammar_accepts(w)) expected.insert(w);
  EXPECT_EQ(std::set<Word>(words.begin(), words.end()), expected);
  EXPECT_EQ(words.size(), 1u + 1 + 2 + 5 + 14 + 42 + 132);
  for (std::size_t i = 0; i + 1 < words.size(); ++i)
    EXPECT_TRUE(length_lex_less(words[i], words[i + 1], OrderedAlphabet::binary()));
}

TEST(RegexWords, AgreesWithMatcher) {
  const OrderedAlphabet ab("ab");
  for (const char* text : {"b*a", "(ab+b)*", "a(ba)*b*", "eps+a"}) {
    auto re = parse_regex(text, ab);
    auto words = regex_words(re, 7);
    std::set<Word> expected;
    for (const auto& w : testing::all_words("ab", 7))
      if (testing::regex_matches(re, w)) expected.insert(w);
    EXPECT_EQ(std::set<Word>(words.begin(), words.end()), expected) << text;
  }
}

TEST(Enumerate, StarOutputMachine) {
  auto m = testing::machine("star_output.oct");
  auto words = enumerate(m, 4, 6);
  for (const char* w : {"ca", "cba", "ccaa", "ccbaa"}) EXPECT_NE(std::find(words.begin(), words.end(), w), words.end());
  EXPECT_EQ(std::set<Word>(words.begin(), words.end()), star_output_expansion(2, 6));
  EXPECT_TRUE(strictly_sorted(words, m.output_alphabet()));
  EXPECT_EQ(words.front(), "ca");
}

TEST(Enumerate, SingleOutput) {
  Transducer m{OrderedAlphabet("x")};
  for (const char* s : {"a", "b", "c"}) m.add_state(s);
  m.set_initial(0);
  m.set_final(2);
  m.add_transition(0, 0, 1, "x");
  m.add_transition(1, 1, 2, "eps");
  EXPECT_EQ(enumerate(m, 4, 4), std::vector<Word>{"x"});
  EXPECT_TRUE(enumerate(m, 0, 4).empty());
}

TEST(Enumerate, AgreesWithBruteForceOnRandomMachines) {
  std::mt19937 rng(21);
  for (int i = 0; i < 60; ++i) {
    auto m = testing::random_machine(rng);
    auto words = enumerate(m, 8, 6);
    EXPECT_EQ(std::set<Word>(words.begin(), words.end()), testing::brute_language(m, 8, 6)) << i;
    EXPECT_TRUE(strictly_sorted(words, m.output_alphabet()));
  }
}

TEST(Enumerate, Expressions) {
  auto atom = RocExpr::leaf(testing::machine("star_output.oct"));
  auto words = enumerate(RocExpr::concat(atom, atom), 2, 4);
  EXPECT_EQ(words, std::vector<Word>{"caca"});
  auto plus = enumerate(RocExpr::plus(atom), 2, 6);
  EXPECT_NE(std::find(plus.begin(), plus.end(), "cacba"), plus.end());
  EXPECT_NE(std::find(plus.begin(), plus.end(), "cacaca"), plus.end());
  EXPECT_TRUE(strictly_sorted(plus, atom.alphabet()));
}

TEST(ProbeDensity, Examples) {
  auto atom = RocExpr::leaf(testing::machine("star_output.oct"));
  auto w = probe_density(RocExpr::plus(atom));
  ASSERT_TRUE(w);
  EXPECT_EQ(w->u, "ca");
  EXPECT_EQ(w->v, "cba");
  EXPECT_EQ(w->family(), "{cacbacacba,cbacacbaca}*cacbacbaca");
  EXPECT_FALSE(probe_density(atom));

  Transducer c{OrderedAlphabet("c")};
  c.add_state("q0");
  c.add_state("qf");
  c.set_initial(0);
  c.set_final(1);
  c.add_transition(0, 0, 0, "c");
  c.add_transition(0, 1, 1, "eps");
  c.add_transition(1, 1, 1, "eps");
  EXPECT_FALSE(probe_density(RocExpr::plus(RocExpr::leaf(c))));
}

TEST(UpsetOracle, NineStateMachine) {
  auto m = testing::machine("nine_state.oct");
  auto slices = upset_oracle(m, 20);
  StateId q4 = *m.find_state("q4");
  std::vector<std::uint64_t> both;
  for (auto n : slices.down[q4])
    if (std::find(slices.up[q4].begin(), slices.up[q4].end(), n) != slices.up[q4].end()) both.push_back(n);
  EXPECT_EQ(both, (std::vector<std::uint64_t>{2, 5, 11, 17}));
  StateId q8 = *m.find_state("q8");
  std::vector<std::uint64_t> both8;
  for (auto n : slices.down[q8])
    if (std::find(slices.up[q8].begin(), slices.up[q8].end(), n) != slices.up[q8].end()) both8.push_back(n);
  EXPECT_EQ(both8, std::vector<std::uint64_t>{0});
  auto zero = upset_oracle(m, 0);
  EXPECT_EQ(zero.down[m.initial()], std::vector<std::uint64_t>{0});
}

TEST(CheckMachine, FixturesPass) {
  for (const char* name : {"star_output.oct", "nine_state.oct"}) {
    for (const auto& r : check_machine(testing::machine(name))) EXPECT_TRUE(r.passed) << name << " " << r.name << " " << r.detail;
  }
}

}  // namespace
}  // namespace ocrank
