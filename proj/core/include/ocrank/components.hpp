#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ocrank/transducer.hpp"

namespace ocrank {

struct Component {
  std::vector<std::uint32_t> members;  // M' state indices, ascending
  Phase phase = Phase::Up;
  bool trivial = true;  // single state without a self-loop
  std::size_t height = 0;  // longest chain of components below this one
};

struct Condensation {
  std::vector<Component> components;  // topological order
  std::vector<std::uint32_t> component_of;
};

/// Strongly connected components of M'. Throws InternalError if a component
/// mixes phases.
Condensation condense(const TransducerPrime& mp);

struct CycleProfile {
  bool has_zero = false;
  bool has_positive = false;
  bool has_negative = false;
};

/// Signs of cycle weights (0 counts +1, 1 counts -1) inside a component, from
/// the minimum and maximum cycle means.
CycleProfile cycle_profile(const TransducerPrime& mp, const Component& c);

/// Outputs of nonempty cycles at `state` that stay inside the component.
Automaton cycle_outputs(const TransducerPrime& mp, const Component& c, std::uint32_t state);

/// Outputs of nonempty zero-weight cycles at `state` inside the component
/// whose running weight stays within [-bound, bound].
Automaton zero_cycle_outputs(const TransducerPrime& mp, const Component& c, std::uint32_t state,
                             std::size_t bound);

enum class Verdict { FullyCertified, ZeroCertified, QuasiDenseWitness };
std::string to_string(Verdict v);

struct ComponentVerdict {
  Verdict kind = Verdict::FullyCertified;
  CycleProfile profile;
  /// Common primitive root of the cycle outputs per state; empty when every
  /// cycle output there is the empty word or no cycle was enumerated.
  std::map<std::uint32_t, Word> roots;
  /// Weight excursion bound of the zero-cycle enumeration, 0 if not used.
  std::size_t zero_cycle_bound = 0;
  /// Two outputs of cycles at one state with distinct primitive roots.
  std::uint32_t witness_state = 0;
  Word first;
  Word second;
};

ComponentVerdict certify_component(const TransducerPrime& mp, const Component& c);

}  // namespace ocrank
