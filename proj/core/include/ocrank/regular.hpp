#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ocrank/errors.hpp"
#include "ocrank/words.hpp"

namespace ocrank {

// Regular expressions -------------------------------------------------------

struct Regex {
  enum class Kind { Epsilon, Letter, Union, Concat, Star };

  Kind kind = Kind::Epsilon;
  char letter = 0;
  std::vector<Regex> children;

  static Regex epsilon() { return {}; }
  static Regex symbol(char c) { return {Kind::Letter, c, {}}; }
  static Regex alternation(Regex a, Regex b);
  static Regex concatenation(Regex a, Regex b);
  static Regex star(Regex a);

  bool operator==(const Regex&) const = default;
};

class RegexSyntaxError : public InputError {
 public:
  RegexSyntaxError(const std::string& what, std::size_t position)
      : InputError(what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// expr := term ('+' term)*; term := factor+; factor := base '*'*;
/// base := letter | 'eps' | '(' expr ')'. Blanks are ignored.
Regex parse_regex(std::string_view text, const OrderedAlphabet& alphabet);

/// Fully parenthesised only where precedence requires it; parse_regex inverts it.
std::string to_string(const Regex& re);

// Finite automata -----------------------------------------------------------

/// Epsilon-free automaton over letter indices of an ordered alphabet.
class Automaton {
 public:
  using State = std::uint32_t;
  using Letter = std::uint8_t;
  struct Edge {
    Letter letter;
    State target;
    auto operator<=>(const Edge&) const = default;
  };

  explicit Automaton(OrderedAlphabet alphabet = OrderedAlphabet::binary());

  State add_state();
  /// Ignores an edge that is already present.
  void add_edge(State from, Letter letter, State to);
  void set_initial(State s, bool value = true);
  void set_final(State s, bool value = true);

  std::size_t num_states() const { return out_.size(); }
  std::size_t num_edges() const;
  std::span<const Edge> edges(State s) const { return out_[s]; }
  bool is_initial(State s) const { return initial_[s]; }
  bool is_final(State s) const { return final_[s]; }
  std::vector<State> initial_states() const;
  std::vector<State> final_states() const;
  bool is_deterministic() const;
  const OrderedAlphabet& alphabet() const { return alphabet_; }

 private:
  OrderedAlphabet alphabet_;
  std::vector<std::vector<Edge>> out_;
  std::vector<bool> initial_;
  std::vector<bool> final_;
};

/// Automaton with epsilon moves, used to assemble larger automata from pieces.
class NfaBuilder {
 public:
  using State = Automaton::State;

  explicit NfaBuilder(OrderedAlphabet alphabet);

  State add_state();
  void add_edge(State from, Automaton::Letter letter, State to);
  void add_epsilon(State from, State to);
  void set_initial(State s);
  void set_final(State s);
  /// Copies `a` in without its initial and final marks; returns the offset of its states.
  State embed(const Automaton& a);
  /// Embeds `a` so that it reads a word of L(a) between `from` and `to`.
  void add_language(State from, const Automaton& a, State to);

  std::size_t num_states() const { return edges_.size(); }
  const OrderedAlphabet& alphabet() const { return alphabet_; }

  /// Epsilon elimination followed by trimming.
  Automaton build() const;

 private:
  OrderedAlphabet alphabet_;
  std::vector<std::vector<Automaton::Edge>> edges_;
  std::vector<std::vector<State>> eps_;
  std::vector<State> initial_;
  std::vector<State> final_;
};

/// Edge of a graph labelled by a regular language.
struct LabeledEdge {
  std::uint32_t from;
  std::uint32_t to;
  const Automaton* label;
};

/// Concatenated labels of paths from a start node to an accept node. With
/// `nonempty_path` the path must use at least one edge.
Automaton path_language(const OrderedAlphabet& alphabet, std::size_t num_nodes,
                        std::span<const LabeledEdge> edges, std::span<const std::uint32_t> starts,
                        std::span<const std::uint32_t> accepts, bool nonempty_path);

/// Regex to trimmed minimal DFA via Thompson construction and subset construction.
Automaton compile(const Regex& re, const OrderedAlphabet& alphabet);
Automaton compile(std::string_view text, const OrderedAlphabet& alphabet);

Automaton trim(const Automaton& a);
/// Trimmed DFA; never contains a sink.
Automaton determinize(const Automaton& a);
/// Minimal trimmed DFA.
Automaton minimize(const Automaton& a);

Automaton unite(const Automaton& a, const Automaton& b);
Automaton concatenate(const Automaton& a, const Automaton& b);
Automaton kleene_plus(const Automaton& a);
Automaton kleene_star(const Automaton& a);
/// Automaton for v*.
Automaton power_language(std::string_view v, const OrderedAlphabet& alphabet);

/// Throws InputError for letters outside the alphabet.
bool accepts(const Automaton& a, std::string_view w);
bool is_empty(const Automaton& a);
/// Length-lexicographically least accepted word.
std::optional<Word> shortest_word(const Automaton& a, bool nonempty = false);
/// Length of the longest accepted word; nullopt when the language is infinite or empty.
std::optional<std::size_t> longest_word_length(const Automaton& a);
/// Accepted words of length at most `max_length`, in lexicographic order.
std::vector<Word> words_up_to(const Automaton& a, std::size_t max_length);

/// Length-lexicographically least word of L(a) outside v*.
std::optional<Word> power_counterexample(const Automaton& a, std::string_view v);
bool subset_of_power(const Automaton& a, std::string_view v);

struct LanguageDifference {
  Word word;
  bool in_first;  // word is in L(a) \ L(b), otherwise in L(b) \ L(a)
};
/// Length-lexicographically least word in the symmetric difference, optionally
/// restricted to words of length at most `max_length`.
std::optional<LanguageDifference> first_difference(const Automaton& a, const Automaton& b,
                                                   std::optional<std::size_t> max_length);

struct ScatteredCheck {
  bool scattered = true;
  /// When not scattered: a trimmed DFA state with two cycle words of distinct primitive roots.
  Automaton::State state = 0;
  Word first;
  Word second;
};

/// A regular language is scattered iff at each state of its trimmed DFA all
/// cycle words share a primitive root.
ScatteredCheck regular_scattered(const Automaton& a);

/// Maximal number of nontrivial strongly connected components on a path of the
/// minimal DFA. Throws PreconditionError if the language is not scattered.
std::size_t finite_rank_bound(const Automaton& a);

std::string to_dot(const Automaton& a, std::string_view name = "A");

}  // namespace ocrank
