#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ocrank/regular.hpp"

namespace ocrank {

/// Ultimately periodic subset of the naturals: an explicit part below the
/// threshold and a periodic tail from the threshold on. Always kept canonical:
/// minimal period first, then minimal threshold.
class UPSet {
 public:
  UPSet();

  static UPSet of(std::span<const std::uint64_t> members);
  static UPSet of(std::initializer_list<std::uint64_t> members);
  /// {first + period * t : t >= 0}; period 0 gives {first}.
  static UPSet progression(std::uint64_t first, std::uint64_t period);
  static UPSet naturals();
  /// `below[n]` for n < threshold, `residues[n % period]` for n >= threshold.
  static UPSet from_pattern(std::uint64_t threshold, std::vector<bool> below, std::uint64_t period,
                            std::vector<bool> residues);

  bool contains(std::uint64_t n) const;
  bool empty() const;
  bool finite() const;
  std::uint64_t threshold() const { return threshold_; }
  std::uint64_t period() const { return period_; }

  std::vector<std::uint64_t> finite_part() const;
  /// Least tail member of each residue class, ascending.
  std::vector<std::uint64_t> tail_representatives() const;
  /// Finite part together with tail representatives, ascending.
  std::vector<std::uint64_t> remainders() const;
  std::vector<std::uint64_t> members_below(std::uint64_t bound) const;

  UPSet intersect(const UPSet& other) const;
  UPSet unite(const UPSet& other) const;

  /// E.g. "{2} ∪ {5+6t}", "{3t}", "{t}", "{0,4}", "∅".
  std::string to_string() const;

  bool operator==(const UPSet& other) const = default;

 private:
  void normalize();

  std::uint64_t threshold_ = 0;
  std::vector<bool> below_;
  std::uint64_t period_ = 1;
  std::vector<bool> residues_{false};
};

/// Counter graph of a one-counter net: reading 0 increments, reading 1 decrements.
struct CounterEdge {
  std::uint32_t from;
  bool decrement;
  std::uint32_t to;
};

struct CounterGraph {
  std::size_t num_states = 0;
  std::uint32_t initial = 0;
  std::vector<std::uint32_t> finals;
  std::vector<CounterEdge> edges;
  std::vector<std::string> names;  // optional, for diagnostics
};

using ConfigurationSet = std::vector<std::vector<bool>>;  // [state][counter]

/// Configurations reachable from (initial, 0) without leaving [0, cap].
ConfigurationSet explore_forward(const CounterGraph& g, std::uint64_t cap);
/// Configurations from which some (final, 0) is reachable without leaving [0, cap].
ConfigurationSet explore_backward(const CounterGraph& g, std::uint64_t cap);

struct StateNSets {
  UPSet down;  // counter values on arrival: N-(q)
  UPSet up;    // counter values that can still be closed: N+(q)
  UPSet both;  // N(q)
};

struct ReachOptions {
  /// Explicit exploration cap; by default 2|Q|^2 + 4|Q| + 4, doubled on demand.
  std::optional<std::uint64_t> counter_cap;
};

struct NSetReport {
  std::vector<StateNSets> sets;
  std::uint64_t period = 2;
  std::vector<std::vector<std::uint64_t>> types;  // N(q) within [0, 2P)
  std::uint64_t counter_cap = 0;
  std::uint64_t exact_window = 0;
};

std::uint64_t default_counter_cap(std::size_t num_states);

/// N-sets of every state, the period P and the types. Throws CertificationError
/// when the bounded exploration cannot certify a periodic tail.
NSetReport reach_sets(const CounterGraph& g, const ReachOptions& options = {});

/// P: lcm of the tail periods of all N(q), raised to a multiple exceeding
/// every remainder, and at least 2.
std::uint64_t compute_period(std::span<const UPSet> n_sets);

/// { close(w) : w in L(a) and w in Suf(D1) } for an automaton over "01".
UPSet worked_close_image(const Automaton& a, const ReachOptions& options = {});

}  // namespace ocrank
