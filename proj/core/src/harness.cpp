#include "ocrank/harness.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace ocrank {

std::vector<Word> dyck_words(std::size_t max_length) {
  // exact[n]: Dyck words of length exactly n, from S -> 0 S 1 S | eps.
  std::vector<std::vector<Word>> exact(max_length + 1);
  exact[0] = {""};
  for (std::size_t n = 2; n <= max_length; n += 2) {
    for (std::size_t k = 0; k + 2 <= n; k += 2) {
      for (const auto& a : exact[k])
        for (const auto& b : exact[n - 2 - k]) exact[n].push_back("0" + a + "1" + b);
    }
  }
  std::vector<Word> out;
  for (auto& words : exact) {
    std::sort(words.begin(), words.end());
    out.insert(out.end(), words.begin(), words.end());
  }
  return out;
}

namespace {

std::set<Word> expand(const Regex& re, std::size_t max_length) {
  switch (re.kind) {
    case Regex::Kind::Epsilon: return {""};
    case Regex::Kind::Letter:
      if (max_length == 0) return {};
      return {std::string(1, re.letter)};
    case Regex::Kind::Union: {
      auto a = expand(re.children[0], max_length);
      auto b = expand(re.children[1], max_length);
      a.insert(b.begin(), b.end());
      return a;
    }
    case Regex::Kind::Concat: {
      auto a = expand(re.children[0], max_length);
      auto b = expand(re.children[1], max_length);
      std::set<Word> r;
      for (const auto& x : a)
        for (const auto& y : b)
          if (x.size() + y.size() <= max_length) r.insert(x + y);
      return r;
    }
    case Regex::Kind::Star: {
      auto base = expand(re.children[0], max_length);
      std::set<Word> r{""};
      std::deque<Word> todo{""};
      while (!todo.empty()) {
        Word w = todo.front();
        todo.pop_front();
        for (const auto& x : base) {
          if (x.empty() || w.size() + x.size() > max_length) continue;
          if (r.insert(w + x).second) todo.push_back(w + x);
        }
      }
      return r;
    }
  }
  return {};
}

std::vector<Word> sorted_unique(std::set<Word> words, const OrderedAlphabet& alphabet) {
  std::vector<Word> out(words.begin(), words.end());
  std::sort(out.begin(), out.end(), LexLess{&alphabet});
  return out;
}

}  // namespace

std::vector<Word> regex_words(const Regex& re, std::size_t max_length) {
  auto s = expand(re, max_length);
  return {s.begin(), s.end()};
}

std::vector<Word> enumerate(const Transducer& m, std::size_t input_cap, std::size_t output_cap) {
  std::vector<std::vector<Word>> outputs;
  for (const auto& t : m.transitions())
    outputs.push_back(regex_words(parse_regex(t.output_text, m.output_alphabet()), output_cap));

  std::set<Word> found;
  for (const auto& u : dyck_words(input_cap)) {
    std::set<std::pair<StateId, Word>> cur{{m.initial(), ""}};
    for (char c : u) {
      std::set<std::pair<StateId, Word>> next;
      int bit = c - '0';
      for (const auto& [q, w] : cur) {
        for (std::size_t i = 0; i < m.transitions().size(); ++i) {
          const auto& t = m.transitions()[i];
          if (t.from != q || t.bit != bit) continue;
          for (const auto& x : outputs[i])
            if (w.size() + x.size() <= output_cap) next.emplace(t.to, w + x);
        }
      }
      cur = std::move(next);
    }
    for (const auto& [q, w] : cur)
      if (m.is_final(q)) found.insert(w);
  }
  return sorted_unique(std::move(found), m.output_alphabet());
}

std::vector<Word> enumerate(const RocExpr& e, std::size_t input_cap, std::size_t output_cap) {
  switch (e.kind) {
    case RocExpr::Kind::Atom: return enumerate(*e.atom, input_cap, output_cap);
    case RocExpr::Kind::Concat: {
      auto a = enumerate(e.children[0], input_cap, output_cap);
      auto b = enumerate(e.children[1], input_cap, output_cap);
      std::set<Word> r;
      for (const auto& x : a)
        for (const auto& y : b)
          if (x.size() + y.size() <= output_cap) r.insert(x + y);
      return sorted_unique(std::move(r), e.alphabet());
    }
    case RocExpr::Kind::Plus: {
      auto a = enumerate(e.children[0], input_cap, output_cap);
      std::set<Word> r(a.begin(), a.end());
      std::deque<Word> todo(a.begin(), a.end());
      while (!todo.empty()) {
        Word w = todo.front();
        todo.pop_front();
        for (const auto& x : a) {
          if (x.empty() || w.size() + x.size() > output_cap) continue;
          if (r.insert(w + x).second) todo.push_back(w + x);
        }
      }
      return sorted_unique(std::move(r), e.alphabet());
    }
  }
  return {};
}

std::optional<DensityWitness> probe_density(const RocExpr& e, const ExprOptions& options) {
  switch (e.kind) {
    case RocExpr::Kind::Atom: return analyze_transducer(*e.atom, options.reach).result.witness;
    case RocExpr::Kind::Concat: {
      auto right_members = enumerate(e.children[1], options.input_cap, options.output_cap);
      if (auto w = probe_density(e.children[0], options); w && !right_members.empty()) return w;
      auto left_members = enumerate(e.children[0], options.input_cap, options.output_cap);
      if (left_members.empty()) return std::nullopt;
      if (auto w = probe_density(e.children[1], options)) {
        const auto& alphabet = e.alphabet();
        Word first = *std::min_element(left_members.begin(), left_members.end(),
                                       [&](const Word& x, const Word& y) { return length_lex_less(x, y, alphabet); });
        w->prefix = first + w->prefix;
        w->origin = "right factor: " + w->origin;
        return w;
      }
      return std::nullopt;
    }
    case RocExpr::Kind::Plus: {
      if (auto w = probe_density(e.children[0], options)) return w;
      auto members = enumerate(e.children[0], options.input_cap, options.output_cap);
      const auto& alphabet = e.alphabet();
      std::erase(members, Word{});
      std::sort(members.begin(), members.end(),
                [&](const Word& x, const Word& y) { return length_lex_less(x, y, alphabet); });
      if (members.empty()) return std::nullopt;
      Word root = primitive_root(members.front());
      for (const auto& v : members) {
        if (primitive_root(v) != root) return DensityWitness{"iteration", "", members.front(), v};
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

CounterSlices upset_oracle(const Transducer& m, std::uint64_t bound) {
  const std::size_t n = m.num_states();
  const std::uint64_t cap = bound + n * n;
  auto search = [&](std::vector<std::pair<StateId, std::uint64_t>> seeds, bool backward) {
    std::set<std::pair<StateId, std::uint64_t>> seen(seeds.begin(), seeds.end());
    std::deque<std::pair<StateId, std::uint64_t>> todo(seeds.begin(), seeds.end());
    while (!todo.empty()) {
      auto [q, c] = todo.front();
      todo.pop_front();
      for (const auto& t : m.transitions()) {
        if ((backward ? t.to : t.from) != q) continue;
        // Forward: 0 adds one. Backward: undo the step.
        bool up = (t.bit == 0) != backward;
        if (!up && c == 0) continue;
        std::uint64_t d = up ? c + 1 : c - 1;
        if (d > cap) continue;
        StateId r = backward ? t.from : t.to;
        if (seen.emplace(r, d).second) todo.emplace_back(r, d);
      }
    }
    std::vector<std::vector<std::uint64_t>> slices(n);
    for (const auto& [q, c] : seen)
      if (c <= bound) slices[q].push_back(c);
    return slices;
  };
  std::vector<std::pair<StateId, std::uint64_t>> finals;
  for (auto f : m.finals()) finals.emplace_back(f, 0);
  return {search({{m.initial(), 0}}, false), search(finals, true)};
}

}  // namespace ocrank
