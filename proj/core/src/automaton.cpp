#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <sstream>

#include "ocrank/graph.hpp"
#include "ocrank/regular.hpp"

namespace ocrank {

using State = Automaton::State;
using Letter = Automaton::Letter;
using StateSet = std::vector<State>;

// Automaton -----------------------------------------------------------------

Automaton::Automaton(OrderedAlphabet alphabet) : alphabet_(std::move(alphabet)) {}

State Automaton::add_state() {
  out_.emplace_back();
  initial_.push_back(false);
  final_.push_back(false);
  return static_cast<State>(out_.size() - 1);
}

void Automaton::add_edge(State from, Letter letter, State to) {
  auto& list = out_.at(from);
  Edge e{letter, to};
  auto it = std::lower_bound(list.begin(), list.end(), e);
  if (it == list.end() || *it != e) list.insert(it, e);
}

void Automaton::set_initial(State s, bool value) { initial_.at(s) = value; }
void Automaton::set_final(State s, bool value) { final_.at(s) = value; }

std::size_t Automaton::num_edges() const {
  std::size_t n = 0;
  for (const auto& l : out_) n += l.size();
  return n;
}

std::vector<State> Automaton::initial_states() const {
  std::vector<State> r;
  for (State s = 0; s < out_.size(); ++s)
    if (initial_[s]) r.push_back(s);
  return r;
}

std::vector<State> Automaton::final_states() const {
  std::vector<State> r;
  for (State s = 0; s < out_.size(); ++s)
    if (final_[s]) r.push_back(s);
  return r;
}

bool Automaton::is_deterministic() const {
  if (initial_states().size() > 1) return false;
  for (const auto& l : out_) {
    for (std::size_t i = 1; i < l.size(); ++i)
      if (l[i].letter == l[i - 1].letter) return false;
  }
  return true;
}

namespace {

StateSet step(const Automaton& a, const StateSet& from, Letter letter) {
  StateSet to;
  for (State s : from) {
    auto edges = a.edges(s);
    auto lo = std::lower_bound(edges.begin(), edges.end(), Automaton::Edge{letter, 0});
    for (auto it = lo; it != edges.end() && it->letter == letter; ++it) to.push_back(it->target);
  }
  std::sort(to.begin(), to.end());
  to.erase(std::unique(to.begin(), to.end()), to.end());
  return to;
}

bool any_final(const Automaton& a, const StateSet& set) {
  return std::any_of(set.begin(), set.end(), [&](State s) { return a.is_final(s); });
}

graph::Adjacency adjacency(const Automaton& a) {
  graph::Adjacency adj(a.num_states());
  for (State s = 0; s < a.num_states(); ++s)
    for (const auto& e : a.edges(s)) adj[s].push_back(e.target);
  return adj;
}

// Breadth-first search in length-lexicographic order over a product of subset
// constructions. Node is any ordered type.
template <typename Node, typename Step, typename Goal>
std::optional<Word> length_lex_search(const OrderedAlphabet& alphabet, Node start, Step step_fn,
                                      Goal goal, std::optional<std::size_t> max_length) {
  struct Entry {
    Node node;
    std::size_t parent;
    char letter;
    std::size_t depth;
  };
  std::vector<Entry> entries;
  std::map<Node, bool> seen;
  entries.push_back({start, 0, 0, 0});
  seen.emplace(start, true);
  auto rebuild = [&](std::size_t i) {
    Word w;
    while (i != 0) {
      w.push_back(entries[i].letter);
      i = entries[i].parent;
    }
    std::reverse(w.begin(), w.end());
    return w;
  };
  for (std::size_t head = 0; head < entries.size(); ++head) {
    if (goal(entries[head].node, entries[head].depth)) return rebuild(head);
    if (max_length && entries[head].depth >= *max_length) continue;
    for (std::size_t l = 0; l < alphabet.size(); ++l) {
      std::optional<Node> next = step_fn(entries[head].node, static_cast<Letter>(l));
      if (!next) continue;
      if (seen.emplace(*next, true).second) {
        entries.push_back({std::move(*next), head, alphabet.letter(l), entries[head].depth + 1});
      }
    }
  }
  return std::nullopt;
}

}  // namespace

// NfaBuilder ----------------------------------------------------------------

NfaBuilder::NfaBuilder(OrderedAlphabet alphabet) : alphabet_(std::move(alphabet)) {}

State NfaBuilder::add_state() {
  edges_.emplace_back();
  eps_.emplace_back();
  return static_cast<State>(edges_.size() - 1);
}

void NfaBuilder::add_edge(State from, Letter letter, State to) { edges_.at(from).push_back({letter, to}); }
void NfaBuilder::add_epsilon(State from, State to) { eps_.at(from).push_back(to); }
void NfaBuilder::set_initial(State s) { initial_.push_back(s); }
void NfaBuilder::set_final(State s) { final_.push_back(s); }

State NfaBuilder::embed(const Automaton& a) {
  if (!(a.alphabet() == alphabet_)) {
    throw PreconditionError("embedding an automaton over a different alphabet");
  }
  State base = static_cast<State>(edges_.size());
  for (State s = 0; s < a.num_states(); ++s) add_state();
  for (State s = 0; s < a.num_states(); ++s)
    for (const auto& e : a.edges(s)) edges_[base + s].push_back({e.letter, base + e.target});
  return base;
}

void NfaBuilder::add_language(State from, const Automaton& a, State to) {
  State base = embed(a);
  for (State s = 0; s < a.num_states(); ++s) {
    if (a.is_initial(s)) add_epsilon(from, base + s);
    if (a.is_final(s)) add_epsilon(base + s, to);
  }
}

Automaton NfaBuilder::build() const {
  const std::size_t n = edges_.size();
  Automaton out(alphabet_);
  for (std::size_t i = 0; i < n; ++i) out.add_state();
  std::vector<bool> is_final(n, false);
  for (State f : final_) is_final[f] = true;
  for (State s : initial_) out.set_initial(s);

  std::vector<std::size_t> stamp(n, 0);
  std::vector<State> todo;
  for (State s = 0; s < n; ++s) {
    // Epsilon closure of s.
    todo.assign(1, s);
    stamp[s] = s + 1;
    for (std::size_t i = 0; i < todo.size(); ++i) {
      State t = todo[i];
      if (is_final[t]) out.set_final(s);
      for (const auto& e : edges_[t]) out.add_edge(s, e.letter, e.target);
      for (State u : eps_[t]) {
        if (stamp[u] != s + 1) {
          stamp[u] = s + 1;
          todo.push_back(u);
        }
      }
    }
  }
  return trim(out);
}

Automaton path_language(const OrderedAlphabet& alphabet, std::size_t num_nodes,
                        std::span<const LabeledEdge> edges, std::span<const std::uint32_t> starts,
                        std::span<const std::uint32_t> accepts, bool nonempty_path) {
  NfaBuilder b(alphabet);
  for (std::size_t i = 0; i < num_nodes; ++i) b.add_state();
  for (const auto& e : edges) b.add_language(e.from, *e.label, e.to);
  for (auto f : accepts) b.set_final(f);
  for (auto s : starts) {
    if (!nonempty_path) {
      b.set_initial(s);
      continue;
    }
    State fresh = b.add_state();
    b.set_initial(fresh);
    for (const auto& e : edges)
      if (e.from == s) b.add_language(fresh, *e.label, e.to);
  }
  return b.build();
}

// Construction --------------------------------------------------------------

namespace {

std::pair<State, State> thompson(NfaBuilder& b, const Regex& re) {
  State in = b.add_state();
  State out = b.add_state();
  switch (re.kind) {
    case Regex::Kind::Epsilon: b.add_epsilon(in, out); break;
    case Regex::Kind::Letter:
      b.add_edge(in, static_cast<Letter>(b.alphabet().rank(re.letter)), out);
      break;
    case Regex::Kind::Union:
      for (const auto& c : re.children) {
        auto [ci, co] = thompson(b, c);
        b.add_epsilon(in, ci);
        b.add_epsilon(co, out);
      }
      break;
    case Regex::Kind::Concat: {
      State cur = in;
      for (const auto& c : re.children) {
        auto [ci, co] = thompson(b, c);
        b.add_epsilon(cur, ci);
        cur = co;
      }
      b.add_epsilon(cur, out);
      break;
    }
    case Regex::Kind::Star: {
      auto [ci, co] = thompson(b, re.children[0]);
      b.add_epsilon(in, ci);
      b.add_epsilon(co, ci);
      b.add_epsilon(in, out);
      b.add_epsilon(co, out);
      break;
    }
  }
  return {in, out};
}

}  // namespace

Automaton compile(const Regex& re, const OrderedAlphabet& alphabet) {
  NfaBuilder b(alphabet);
  auto [in, out] = thompson(b, re);
  b.set_initial(in);
  b.set_final(out);
  return minimize(b.build());
}

Automaton compile(std::string_view text, const OrderedAlphabet& alphabet) {
  return compile(parse_regex(text, alphabet), alphabet);
}

Automaton trim(const Automaton& a) {
  auto inits = a.initial_states();
  auto finals = a.final_states();
  auto useful = graph::useful_nodes(adjacency(a), inits, finals);
  std::vector<State> map(a.num_states(), 0);
  Automaton out(a.alphabet());
  for (State s = 0; s < a.num_states(); ++s)
    if (useful[s]) map[s] = out.add_state();
  for (State s = 0; s < a.num_states(); ++s) {
    if (!useful[s]) continue;
    out.set_initial(map[s], a.is_initial(s));
    out.set_final(map[s], a.is_final(s));
    for (const auto& e : a.edges(s))
      if (useful[e.target]) out.add_edge(map[s], e.letter, map[e.target]);
  }
  return out;
}

Automaton determinize(const Automaton& a) {
  Automaton out(a.alphabet());
  StateSet start = a.initial_states();
  if (start.empty()) return out;
  std::map<StateSet, State> index;
  std::vector<StateSet> sets;
  index.emplace(start, out.add_state());
  sets.push_back(start);
  out.set_initial(0);
  for (std::size_t i = 0; i < sets.size(); ++i) {
    StateSet cur = sets[i];
    out.set_final(static_cast<State>(i), any_final(a, cur));
    for (std::size_t l = 0; l < a.alphabet().size(); ++l) {
      StateSet next = step(a, cur, static_cast<Letter>(l));
      if (next.empty()) continue;
      auto [it, fresh] = index.emplace(next, static_cast<State>(sets.size()));
      if (fresh) {
        out.add_state();
        sets.push_back(next);
      }
      out.add_edge(static_cast<State>(i), static_cast<Letter>(l), it->second);
    }
  }
  return trim(out);
}

Automaton minimize(const Automaton& input) {
  Automaton a = input.is_deterministic() ? trim(input) : determinize(input);
  const std::size_t n = a.num_states();
  if (n == 0) return a;
  const std::size_t k = a.alphabet().size();
  // Moore refinement; a missing edge leads to an implicit sink class (-1).
  std::vector<std::int64_t> cls(n);
  for (State s = 0; s < n; ++s) cls[s] = a.is_final(s) ? 1 : 0;
  std::size_t classes = 0;
  while (true) {
    std::map<std::vector<std::int64_t>, std::int64_t> signature_class;
    std::vector<std::int64_t> next(n);
    for (State s = 0; s < n; ++s) {
      std::vector<std::int64_t> sig(k + 1, -1);
      sig[0] = cls[s];
      for (const auto& e : a.edges(s)) sig[e.letter + 1] = cls[e.target];
      auto [it, fresh] = signature_class.emplace(sig, static_cast<std::int64_t>(signature_class.size()));
      next[s] = it->second;
    }
    std::size_t count = signature_class.size();
    cls = std::move(next);
    if (count == classes) break;
    classes = count;
  }
  // Number classes in order of first occurrence to keep output stable.
  std::vector<std::int64_t> renumber(classes, -1);
  Automaton out(a.alphabet());
  for (State s = 0; s < n; ++s)
    if (renumber[cls[s]] < 0) renumber[cls[s]] = out.add_state();
  for (State s = 0; s < n; ++s) {
    State c = static_cast<State>(renumber[cls[s]]);
    if (a.is_initial(s)) out.set_initial(c);
    if (a.is_final(s)) out.set_final(c);
    for (const auto& e : a.edges(s)) out.add_edge(c, e.letter, static_cast<State>(renumber[cls[e.target]]));
  }
  return out;
}

Automaton unite(const Automaton& a, const Automaton& b) {
  NfaBuilder nb(a.alphabet());
  for (const Automaton* x : {&a, &b}) {
    State base = nb.embed(*x);
    for (State s : x->initial_states()) nb.set_initial(base + s);
    for (State s : x->final_states()) nb.set_final(base + s);
  }
  return nb.build();
}

Automaton concatenate(const Automaton& a, const Automaton& b) {
  NfaBuilder nb(a.alphabet());
  State in = nb.add_state();
  State mid = nb.add_state();
  State out = nb.add_state();
  nb.add_language(in, a, mid);
  nb.add_language(mid, b, out);
  nb.set_initial(in);
  nb.set_final(out);
  return nb.build();
}

Automaton kleene_plus(const Automaton& a) {
  NfaBuilder nb(a.alphabet());
  State in = nb.add_state();
  State out = nb.add_state();
  nb.add_language(in, a, out);
  nb.add_epsilon(out, in);
  nb.set_initial(in);
  nb.set_final(out);
  return nb.build();
}

Automaton kleene_star(const Automaton& a) {
  NfaBuilder nb(a.alphabet());
  State hub = nb.add_state();
  nb.add_language(hub, a, hub);
  nb.set_initial(hub);
  nb.set_final(hub);
  return nb.build();
}

Automaton power_language(std::string_view v, const OrderedAlphabet& alphabet) {
  alphabet.check(v);
  Automaton out(alphabet);
  for (std::size_t i = 0; i < std::max<std::size_t>(v.size(), 1); ++i) out.add_state();
  out.set_initial(0);
  out.set_final(0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.add_edge(static_cast<State>(i), static_cast<Letter>(alphabet.rank(v[i])),
                 static_cast<State>((i + 1) % v.size()));
  }
  return out;
}

// Queries -------------------------------------------------------------------

bool accepts(const Automaton& a, std::string_view w) {
  a.alphabet().check(w);
  StateSet cur = a.initial_states();
  for (char c : w) {
    cur = step(a, cur, static_cast<Letter>(a.alphabet().rank(c)));
    if (cur.empty()) return false;
  }
  return any_final(a, cur);
}

bool is_empty(const Automaton& a) { return !shortest_word(a).has_value(); }

std::optional<Word> shortest_word(const Automaton& a, bool nonempty) {
  StateSet start = a.initial_states();
  if (start.empty()) return std::nullopt;
  return length_lex_search(
      a.alphabet(), start,
      [&](const StateSet& s, Letter l) -> std::optional<StateSet> {
        auto next = step(a, s, l);
        if (next.empty()) return std::nullopt;
        return next;
      },
      [&](const StateSet& s, std::size_t depth) { return (depth > 0 || !nonempty) && any_final(a, s); },
      std::nullopt);
}

std::optional<std::size_t> longest_word_length(const Automaton& input) {
  Automaton a = trim(input);
  if (a.num_states() == 0) return std::nullopt;
  auto scc = graph::strongly_connected_components(adjacency(a));
  for (const auto& comp : scc.components) {
    if (comp.size() > 1) return std::nullopt;
    for (const auto& e : a.edges(comp[0]))
      if (e.target == comp[0]) return std::nullopt;
  }
  // Topological order: longest path from any initial state.
  std::vector<std::int64_t> best(a.num_states(), -1);
  std::int64_t result = -1;
  for (const auto& comp : scc.components) {
    State s = comp[0];
    if (a.is_initial(s)) best[s] = std::max<std::int64_t>(best[s], 0);
    if (best[s] < 0) continue;
    if (a.is_final(s)) result = std::max(result, best[s]);
    for (const auto& e : a.edges(s)) best[e.target] = std::max(best[e.target], best[s] + 1);
  }
  if (result < 0) return std::nullopt;
  return static_cast<std::size_t>(result);
}

std::vector<Word> words_up_to(const Automaton& a, std::size_t max_length) {
  std::vector<Word> out;
  Word cur;
  std::function<void(const StateSet&)> visit = [&](const StateSet& set) {
    if (any_final(a, set)) out.push_back(cur);
    if (cur.size() >= max_length) return;
    for (std::size_t l = 0; l < a.alphabet().size(); ++l) {
      StateSet next = step(a, set, static_cast<Letter>(l));
      if (next.empty()) continue;
      cur.push_back(a.alphabet().letter(l));
      visit(next);
      cur.pop_back();
    }
  };
  StateSet start = a.initial_states();
  if (!start.empty()) visit(start);
  return out;
}

std::optional<Word> power_counterexample(const Automaton& a, std::string_view v) {
  if (v.empty()) throw InputError("power of the empty word");
  a.alphabet().check(v);
  StateSet start = a.initial_states();
  if (start.empty()) return std::nullopt;
  // Position in v, or v.size() once the word has left v*.
  const std::size_t sink = v.size();
  using Node = std::pair<StateSet, std::size_t>;
  return length_lex_search(
      a.alphabet(), Node{start, 0},
      [&](const Node& n, Letter l) -> std::optional<Node> {
        auto next = step(a, n.first, l);
        if (next.empty()) return std::nullopt;
        std::size_t pos = sink;
        if (n.second != sink && !v.empty() && a.alphabet().rank(v[n.second]) == l) {
          pos = (n.second + 1) % v.size();
        }
        return Node{std::move(next), pos};
      },
      [&](const Node& n, std::size_t) { return n.second != 0 && any_final(a, n.first); }, std::nullopt);
}

bool subset_of_power(const Automaton& a, std::string_view v) { return !power_counterexample(a, v); }

std::optional<LanguageDifference> first_difference(const Automaton& a, const Automaton& b,
                                                   std::optional<std::size_t> max_length) {
  if (!(a.alphabet() == b.alphabet())) throw PreconditionError("comparing automata over different alphabets");
  using Node = std::pair<StateSet, StateSet>;
  auto word = length_lex_search(
      a.alphabet(), Node{a.initial_states(), b.initial_states()},
      [&](const Node& n, Letter l) -> std::optional<Node> {
        Node next{step(a, n.first, l), step(b, n.second, l)};
        if (next.first.empty() && next.second.empty()) return std::nullopt;
        return next;
      },
      [&](const Node& n, std::size_t) { return any_final(a, n.first) != any_final(b, n.second); },
      max_length);
  if (!word) return std::nullopt;
  return LanguageDifference{*word, accepts(a, *word)};
}

std::string to_dot(const Automaton& a, std::string_view name) {
  std::ostringstream os;
  os << "digraph " << name << " {\n  rankdir=LR;\n";
  for (State s = 0; s < a.num_states(); ++s) {
    os << "  s" << s << " [shape=" << (a.is_final(s) ? "doublecircle" : "circle") << "];\n";
    if (a.is_initial(s)) os << "  init" << s << " [shape=point];\n  init" << s << " -> s" << s << ";\n";
  }
  for (State s = 0; s < a.num_states(); ++s)
    for (const auto& e : a.edges(s))
      os << "  s" << s << " -> s" << e.target << " [label=\"" << a.alphabet().letter(e.letter) << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace ocrank
