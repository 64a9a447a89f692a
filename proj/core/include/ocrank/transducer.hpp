#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ocrank/counterset.hpp"
#include "ocrank/regular.hpp"

namespace ocrank {

using StateId = std::uint32_t;

/// Transition p --bit / R--> q of a one-counter transducer. The output language
/// is kept both as source text and as a compiled minimal DFA.
struct Transition {
  StateId from;
  std::uint8_t bit;
  StateId to;
  std::string output_text;
  std::shared_ptr<const Automaton> output;
};

/// Finite transducer from the input alphabet {0,1} to regular output languages.
/// Reading 0 opens, reading 1 closes; accepted inputs are restricted to D1.
class Transducer {
 public:
  explicit Transducer(OrderedAlphabet output_alphabet);

  StateId add_state(std::string name);
  void set_initial(StateId q);
  void set_final(StateId q, bool value = true);
  /// Throws ValidationError if (from, bit, to) is already present.
  void add_transition(StateId from, int bit, StateId to, std::string_view output_regex);
  void add_transition(StateId from, int bit, StateId to, std::string output_text,
                      std::shared_ptr<const Automaton> output);

  std::size_t num_states() const { return names_.size(); }
  const std::string& name(StateId q) const { return names_.at(q); }
  std::optional<StateId> find_state(std::string_view name) const;
  StateId initial() const { return initial_; }
  bool is_final(StateId q) const { return final_.at(q); }
  std::vector<StateId> finals() const;
  const std::vector<Transition>& transitions() const { return transitions_; }
  const OrderedAlphabet& output_alphabet() const { return alphabet_; }

  std::string label;  // optional machine name

  CounterGraph counter_graph() const;

 private:
  OrderedAlphabet alphabet_;
  std::vector<std::string> names_;
  std::vector<bool> final_;
  StateId initial_ = 0;
  std::vector<Transition> transitions_;
};

/// Throws ValidationError if the machine has no states, no final state, a bad
/// initial state, or an output with empty language.
void check_well_formed(const Transducer& m);

/// Well-formed machine with a source initial state and sink final states,
/// trimmed. The source keeps being final when the empty input is accepted.
Transducer validate(const Transducer& m);

NSetReport reach_sets(const Transducer& m, const ReachOptions& options = {});

// The lifted machine M' -------------------------------------------------------

enum class Phase : std::uint8_t { Up, Level, Down };

/// "↑", "≡", "↓"
std::string to_string(Phase p);
/// "up", "eq", "down"
std::string phase_key(Phase p);

struct TypedState {
  StateId state;
  std::uint64_t depth;
  Phase phase;
  auto operator<=>(const TypedState&) const = default;
};

enum class Rule : std::uint8_t { I, II, III, IV };
std::string to_string(Rule r);

/// Rules i)-iv) that admit (from) --bit--> (to) under period P, read literally.
std::vector<Rule> matching_rules(const TypedState& from, int bit, const TypedState& to, std::uint64_t period);
/// The unique tag of an admitted transition: rule ii is read for sources below P,
/// which separates it from rule iv at (q,P,≡) --1--> (q',P-1,↓).
std::optional<Rule> classify_rule(const TypedState& from, int bit, const TypedState& to, std::uint64_t period);

struct PrimeTransition {
  std::uint32_t from;
  std::uint8_t bit;
  std::uint32_t to;
  std::size_t base;  // index into base.transitions()
  Rule rule;
};

struct TransducerPrime {
  Transducer base;
  std::uint64_t period = 2;
  std::vector<TypedState> states;
  std::uint32_t initial = 0;
  std::vector<bool> final;
  std::vector<PrimeTransition> transitions;
  bool accepts_empty = false;

  explicit TransducerPrime(Transducer m) : base(std::move(m)) {}

  std::optional<std::uint32_t> find(const TypedState& s) const;
  const Transition& base_transition(const PrimeTransition& t) const { return base.transitions()[t.base]; }
  const Automaton& output(const PrimeTransition& t) const { return *base_transition(t).output; }
  /// "(q0,0,↑)"
  std::string label(std::uint32_t s) const;
  CounterGraph counter_graph() const;
};

/// Builds M' from the types of `report`, then keeps only the states and
/// transitions used by some accepting run on a Dyck input. Throws
/// ValidationError when 0 is not a type of the initial state.
TransducerPrime build_mprime(const Transducer& m, const NSetReport& report);
TransducerPrime build_mprime(const Transducer& m, const ReachOptions& options = {});

// Runs ------------------------------------------------------------------------

struct Run {
  std::vector<StateId> states;  // q_0 .. q_n
  Word input;
};

struct PrimeRun {
  std::vector<std::uint32_t> states;
  Word input;
};

/// All accepting runs of M on `input` (any binary word).
std::vector<Run> accepting_runs(const Transducer& m, std::string_view input);
/// Lifts an accepting run on a Dyck input to M'. Throws InternalError if the
/// lifted run is missing from M'.
PrimeRun lift_run(const TransducerPrime& mp, const Run& run);
Run project_run(const TransducerPrime& mp, const PrimeRun& run);

// Output languages --------------------------------------------------------------

/// L(M, w, from, to): outputs of runs reading w between two states.
Automaton step_language(const Transducer& m, std::string_view input, StateId from, StateId to);
/// L(M, w): outputs of accepting runs reading w.
Automaton step_language(const Transducer& m, std::string_view input);

/// Union of L(M, u) over Dyck words u of length at most `max_input`.
Automaton dyck_bounded_language(const Transducer& m, std::size_t max_input);
Automaton dyck_bounded_language(const TransducerPrime& mp, std::size_t max_input);

/// Outputs of all accepting paths, ignoring the Dyck constraint.
Automaton output_overapproximation(const Transducer& m);

struct LanguageComparison {
  bool equal = true;
  std::optional<Word> counterexample;
  bool counterexample_in_original = false;
  std::size_t output_cap = 0;
  bool truncated = false;  // some output longer than the cap exists
};

/// Compares the Dyck-bounded output languages of M and M' on outputs up to the
/// cap (default 4 * max_input * largest output DFA).
LanguageComparison bounded_language_equal(const Transducer& m, const TransducerPrime& mp, std::size_t max_input,
                                          std::optional<std::size_t> output_cap = std::nullopt);

std::string to_dot(const Transducer& m);
std::string to_dot(const TransducerPrime& mp);

}  // namespace ocrank
