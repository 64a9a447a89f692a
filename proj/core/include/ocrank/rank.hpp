#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ocrank/components.hpp"
#include "ocrank/counterset.hpp"
#include "ocrank/transducer.hpp"

namespace ocrank {

/// Ordinal omega * omegas + finite, below omega^2.
struct Ordinal {
  std::uint64_t omegas = 0;
  std::uint64_t finite = 0;

  static Ordinal omega() { return {1, 0}; }
  static Ordinal of(std::uint64_t n) { return {0, n}; }
  auto operator<=>(const Ordinal&) const = default;
};

/// Ordinal sum x + y; finite summands are absorbed by a following omega.
Ordinal ord_add(Ordinal x, Ordinal y);
Ordinal ord_max(Ordinal x, Ordinal y);
/// "0", "5", "w", "w*2", "w*2+3", "w+5"
std::string to_string(Ordinal o);

enum class BoundStatus { Certified, ConditionalOnScattered };
std::string to_string(BoundStatus s);

/// Two words of distinct primitive roots whose combinations lie in the
/// prefixes of the language; {uvuv,vuvu}*uvvu is then a dense subset.
struct DensityWitness {
  std::string origin;
  Word prefix;
  Word u;
  Word v;
  std::string family() const;
};

struct DerivationStep {
  std::uint32_t transition;  // M' transition index
  std::uint32_t component;   // source component
  std::string rule;          // "source", "trivial", "certified", "zero"
  Ordinal local;             // f for this transition
  Ordinal value;
  BoundStatus status;
};

struct EdgeBounds {
  /// Bound per M' transition; nullopt for intra-component transitions and for
  /// transitions behind a density witness.
  std::vector<std::optional<Ordinal>> value;
  std::vector<BoundStatus> status;
  std::vector<DerivationStep> derivation;
};

/// Bounds of the intercomponent transitions in topological order. `regranks`
/// holds the finite rank bound of each base transition output.
EdgeBounds edge_bounds(const TransducerPrime& mp, const Condensation& cond, const std::vector<ComponentVerdict>& verdicts,
                       const std::vector<std::size_t>& regranks);

enum class ResultKind { Bound, NotScattered, Unknown };
std::string to_string(ResultKind k);

struct RankResult {
  ResultKind kind = ResultKind::Bound;
  Ordinal bound;
  BoundStatus status = BoundStatus::Certified;
  bool empty_language = false;
  std::optional<DensityWitness> witness;
  std::string diagnostic;
  std::vector<std::string> derivation;  // human readable
};

/// Everything the rank pipeline computed for one machine.
struct TransducerAnalysis {
  Transducer machine;  // normalized
  NSetReport report;
  TransducerPrime mprime;
  Condensation condensation;
  std::vector<ComponentVerdict> verdicts;
  std::vector<std::size_t> regranks;
  EdgeBounds bounds;
  RankResult result;
};

/// validate, reach_sets, build_mprime, condense, certify, edge_bounds.
TransducerAnalysis analyze_transducer(const Transducer& m, const ReachOptions& options = {});
RankResult transducer_rank_bound(const Transducer& m, const ReachOptions& options = {});

// Expressions over one-counter transducers ------------------------------------

struct RocExpr {
  enum class Kind { Atom, Concat, Plus };
  Kind kind = Kind::Atom;
  std::shared_ptr<const Transducer> atom;
  std::vector<RocExpr> children;

  static RocExpr leaf(Transducer m);
  static RocExpr concat(RocExpr a, RocExpr b);
  static RocExpr plus(RocExpr a);

  const OrderedAlphabet& alphabet() const;
};

struct ExprOptions {
  ReachOptions reach;
  std::size_t input_cap = 8;    // probing enumeration: input length
  std::size_t output_cap = 12;  // probing enumeration: output length
};

/// Rank of L1 L2 is at most rank(L2) + rank(L1).
RankResult combine_concat(const RankResult& left, const RankResult& right);

/// Outputs of the expression with the Dyck constraint dropped on every atom.
Automaton expr_overapproximation(const RocExpr& e);

RankResult expr_rank_bound(const RocExpr& e, const ExprOptions& options = {});

}  // namespace ocrank
