#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ocrank/rank.hpp"
#include "ocrank/transducer.hpp"

namespace ocrank {

/// Dyck words of length at most `max_length` from the grammar S -> 0S1S | eps,
/// in length-lexicographic order.
std::vector<Word> dyck_words(std::size_t max_length);

/// Words of a regex up to a length, expanded from its syntax tree.
std::vector<Word> regex_words(const Regex& re, std::size_t max_length);

/// Outputs of accepting runs on Dyck inputs of length <= input_cap, restricted
/// to length <= output_cap, sorted by the lexicographic order of the output
/// alphabet. Explicit simulation; shares no code with the automata pipeline.
std::vector<Word> enumerate(const Transducer& m, std::size_t input_cap, std::size_t output_cap);
std::vector<Word> enumerate(const RocExpr& e, std::size_t input_cap, std::size_t output_cap);

/// Bounded search for a density witness of L(e).
std::optional<DensityWitness> probe_density(const RocExpr& e, const ExprOptions& options = {});

/// Exact slices of N-(q) and N+(q) on [0, bound] by exhaustive configuration search.
struct CounterSlices {
  std::vector<std::vector<std::uint64_t>> down;
  std::vector<std::vector<std::uint64_t>> up;
};
CounterSlices upset_oracle(const Transducer& m, std::uint64_t bound);

struct CheckOptions {
  std::size_t input_cap = 10;
  std::optional<std::size_t> output_cap;
  std::uint64_t counter_bound = 20;
  ReachOptions reach;
};

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;
};

/// Invariants of the construction on one machine: rule tags, phase
/// monotonicity, depth soundness, lift/project, bounded language equality,
/// N-sets against the oracle, enumeration order.
std::vector<CheckResult> check_machine(const Transducer& m, const CheckOptions& options = {});

}  // namespace ocrank
