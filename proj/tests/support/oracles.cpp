#include "oracles.hpp"

#include <functional>
#include <map>
#include <tuple>

namespace ocrank::testing {

namespace {

// Set of end positions reachable after matching `re` from `start`.
std::set<std::size_t> ends(const Regex& re, std::string_view w, std::size_t start) {
  switch (re.kind) {
    case Regex::Kind::Epsilon: return {start};
    case Regex::Kind::Letter:
      if (start < w.size() && w[start] == re.letter) return {start + 1};
      return {};
    case Regex::Kind::Union: {
      std::set<std::size_t> out;
      for (const auto& c : re.children) {
        auto e = ends(c, w, start);
        out.insert(e.begin(), e.end());
      }
      return out;
    }
    case Regex::Kind::Concat: {
      std::set<std::size_t> cur{start};
      for (const auto& c : re.children) {
        std::set<std::size_t> next;
        for (auto s : cur) {
          auto e = ends(c, w, s);
          next.insert(e.begin(), e.end());
        }
        cur = std::move(next);
      }
      return cur;
    }
    case Regex::Kind::Star: {
      std::set<std::size_t> seen{start};
      std::vector<std::size_t> todo{start};
      while (!todo.empty()) {
        auto s = todo.back();
        todo.pop_back();
        for (auto e : ends(re.children[0], w, s)) {
          if (seen.insert(e).second) todo.push_back(e);
        }
      }
      return seen;
    }
  }
  return {};
}

const char* const kPool[] = {"a", "b", "ab", "ba", "a*", "b*a", "(ab)*", "eps", "a+b", "ba*", "aa", "b"};

}  // namespace

bool regex_matches(const Regex& re, std::string_view w) { return ends(re, w, 0).count(w.size()) > 0; }

std::vector<std::string> all_words(std::string_view letters, std::size_t n) {
  std::vector<std::string> out{""};
  std::size_t level_start = 0;
  for (std::size_t len = 1; len <= n; ++len) {
    std::size_t level_end = out.size();
    for (std::size_t i = level_start; i < level_end; ++i) {
      for (char c : letters) out.push_back(out[i] + c);
    }
    level_start = level_end;
  }
  return out;
}

bool dyck_grammar_accepts(std::string_view w) {
  const std::size_t n = w.size();
  // d[i][j]: w[i, j) derives from S
  std::vector<std::vector<bool>> d(n + 1, std::vector<bool>(n + 1, false));
  for (std::size_t i = 0; i <= n; ++i) d[i][i] = true;
  for (std::size_t len = 1; len <= n; ++len) {
    for (std::size_t i = 0; i + len <= n; ++i) {
      std::size_t j = i + len;
      bool ok = len >= 2 && w[i] == '0' && w[j - 1] == '1' && d[i + 1][j - 1];
      for (std::size_t k = i + 1; k < j && !ok; ++k) ok = d[i][k] && d[k][j];
      d[i][j] = ok;
    }
  }
  return d[0][n];
}

Pattern random_pattern(std::mt19937& rng) {
  Pattern p;
  p.threshold = std::uniform_int_distribution<std::uint64_t>(0, 8)(rng);
  p.period = std::uniform_int_distribution<std::uint64_t>(1, 6)(rng);
  std::bernoulli_distribution coin(0.4);
  for (std::uint64_t i = 0; i < p.threshold; ++i) p.below.push_back(coin(rng));
  for (std::uint64_t i = 0; i < p.period; ++i) p.residues.push_back(coin(rng));
  return p;
}

Transducer random_machine(std::mt19937& rng, std::size_t max_states, std::size_t max_transitions) {
  std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_states)(rng);
  std::size_t k = std::uniform_int_distribution<std::size_t>(0, max_transitions)(rng);
  Transducer m{OrderedAlphabet("ab")};
  for (std::size_t i = 0; i < n; ++i) m.add_state("s" + std::to_string(i));
  m.set_initial(0);
  std::uniform_int_distribution<StateId> state(0, static_cast<StateId>(n - 1));
  std::bernoulli_distribution coin(0.35);
  bool any_final = false;
  for (StateId q = 0; q < n; ++q) {
    if (coin(rng)) {
      m.set_final(q);
      any_final = true;
    }
  }
  if (!any_final) m.set_final(state(rng));
  std::set<std::tuple<StateId, int, StateId>> used;
  std::uniform_int_distribution<std::size_t> pick(0, std::size(kPool) - 1);
  for (std::size_t i = 0; i < k; ++i) {
    StateId from = state(rng);
    StateId to = state(rng);
    int bit = std::bernoulli_distribution(0.5)(rng) ? 1 : 0;
    if (!used.emplace(from, bit, to).second) continue;
    m.add_transition(from, bit, to, kPool[pick(rng)]);
  }
  return m;
}

std::set<std::string> brute_language(const Transducer& m, std::size_t input_cap, std::size_t output_cap) {
  std::vector<Regex> outputs;
  for (const auto& t : m.transitions()) outputs.push_back(parse_regex(t.output_text, m.output_alphabet()));
  auto candidates = all_words(m.output_alphabet().letters(), output_cap);
  std::vector<std::vector<std::string>> members(outputs.size());
  for (std::size_t i = 0; i < outputs.size(); ++i) {
    for (const auto& w : candidates) {
      if (regex_matches(outputs[i], w)) members[i].push_back(w);
    }
  }
  std::set<std::string> out;
  for (const auto& u : all_words("01", input_cap)) {
    if (!dyck_grammar_accepts(u)) continue;
    std::function<void(StateId, std::size_t, const std::string&)> go = [&](StateId q, std::size_t i,
                                                                          const std::string& acc) {
      if (i == u.size()) {
        if (m.is_final(q)) out.insert(acc);
        return;
      }
      for (std::size_t t = 0; t < m.transitions().size(); ++t) {
        const auto& tr = m.transitions()[t];
        if (tr.from != q || tr.bit != u[i] - '0') continue;
        for (const auto& x : members[t]) {
          if (acc.size() + x.size() <= output_cap) go(tr.to, i + 1, acc + x);
        }
      }
    };
    go(m.initial(), 0, "");
  }
  return out;
}

std::vector<std::set<std::uint64_t>> brute_forward(const Transducer& m, std::uint64_t bound) {
  std::vector<std::set<std::uint64_t>> reach(m.num_states());
  reach[m.initial()].insert(0);
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& t : m.transitions()) {
      for (auto n : std::vector<std::uint64_t>(reach[t.from].begin(), reach[t.from].end())) {
        if (t.bit == 1 && n == 0) continue;
        std::uint64_t next = t.bit == 0 ? n + 1 : n - 1;
        if (next > bound) continue;
        changed = reach[t.to].insert(next).second || changed;
      }
    }
  }
  return reach;
}

}  // namespace ocrank::testing
