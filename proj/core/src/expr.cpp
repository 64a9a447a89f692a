#include <algorithm>

#include "ocrank/harness.hpp"
#include "ocrank/rank.hpp"

namespace ocrank {

RocExpr RocExpr::leaf(Transducer m) {
  RocExpr e;
  e.atom = std::make_shared<const Transducer>(std::move(m));
  return e;
}

RocExpr RocExpr::concat(RocExpr a, RocExpr b) {
  if (!(a.alphabet() == b.alphabet())) throw InputError("concatenated expressions use different output alphabets");
  RocExpr e;
  e.kind = Kind::Concat;
  e.children.push_back(std::move(a));
  e.children.push_back(std::move(b));
  return e;
}

RocExpr RocExpr::plus(RocExpr a) {
  RocExpr e;
  e.kind = Kind::Plus;
  e.children.push_back(std::move(a));
  return e;
}

const OrderedAlphabet& RocExpr::alphabet() const {
  return kind == Kind::Atom ? atom->output_alphabet() : children.front().alphabet();
}

RankResult combine_concat(const RankResult& left, const RankResult& right) {
  RankResult r;
  if (left.empty_language || right.empty_language) {
    r.empty_language = true;
    r.derivation.push_back("concatenation with an empty language");
    return r;
  }
  for (const RankResult* side : {&left, &right}) {
    if (side->kind == ResultKind::NotScattered) {
      r.kind = ResultKind::NotScattered;
      r.witness = side->witness;
      r.derivation.push_back(std::string(side == &left ? "left" : "right") + " factor is not scattered");
      return r;
    }
  }
  for (const RankResult* side : {&left, &right}) {
    if (side->kind == ResultKind::Unknown) {
      r.kind = ResultKind::Unknown;
      r.diagnostic = side->diagnostic;
      r.derivation.push_back(std::string(side == &left ? "left" : "right") + " factor is undecided");
      return r;
    }
  }
  r.bound = ord_add(right.bound, left.bound);
  r.status = left.status == BoundStatus::Certified && right.status == BoundStatus::Certified
                 ? BoundStatus::Certified
                 : BoundStatus::ConditionalOnScattered;
  r.derivation.push_back("concat: " + to_string(right.bound) + " + " + to_string(left.bound) + " = " +
                         to_string(r.bound));
  return r;
}

Automaton expr_overapproximation(const RocExpr& e) {
  switch (e.kind) {
    case RocExpr::Kind::Atom: return output_overapproximation(*e.atom);
    case RocExpr::Kind::Concat:
      return concatenate(expr_overapproximation(e.children[0]), expr_overapproximation(e.children[1]));
    case RocExpr::Kind::Plus: return kleene_plus(expr_overapproximation(e.children[0]));
  }
  return Automaton(e.alphabet());
}

RankResult expr_rank_bound(const RocExpr& e, const ExprOptions& options) {
  switch (e.kind) {
    case RocExpr::Kind::Atom: return transducer_rank_bound(*e.atom, options.reach);
    case RocExpr::Kind::Concat: {
      auto left = expr_rank_bound(e.children[0], options);
      auto right = expr_rank_bound(e.children[1], options);
      auto r = combine_concat(left, right);
      if (r.kind == ResultKind::NotScattered && left.kind != ResultKind::NotScattered && r.witness) {
        // The witness lives behind some member of the left factor.
        auto members = enumerate(e.children[0], options.input_cap, options.output_cap);
        if (!members.empty()) {
          const auto& alphabet = e.alphabet();
          r.witness->prefix = *std::min_element(members.begin(), members.end(), [&](const Word& x, const Word& y) {
            return length_lex_less(x, y, alphabet);
          }) + r.witness->prefix;
        }
      }
      return r;
    }
    case RocExpr::Kind::Plus: {
      auto inner = expr_rank_bound(e.children[0], options);
      RankResult r;
      if (inner.empty_language) {
        r.empty_language = true;
        r.derivation.push_back("iteration of an empty language");
        return r;
      }
      if (inner.kind == ResultKind::NotScattered) {
        r.kind = ResultKind::NotScattered;
        r.witness = inner.witness;
        r.derivation.push_back("iterated language is not scattered");
        return r;
      }
      Automaton over = expr_overapproximation(e.children[0]);
      auto x = shortest_word(over, true);
      if (!x) {
        r.derivation.push_back("plus: iterated language is contained in {eps}");
        return r;
      }
      Word v = primitive_root(*x);
      if (subset_of_power(over, v)) {
        r.bound = Ordinal::of(1);
        r.derivation.push_back("plus: iterated language is contained in (" + v + ")*");
        return r;
      }
      if (auto w = probe_density(e, options)) {
        r.kind = ResultKind::NotScattered;
        r.witness = w;
        r.derivation.push_back("plus: members " + w->u + " and " + w->v + " have distinct primitive roots");
        return r;
      }
      r.kind = ResultKind::Unknown;
      r.diagnostic = "plus: over-approximation is not within a single root's powers and no two members with " +
                     std::string("distinct roots were found up to input length ") + std::to_string(options.input_cap) +
                     " and output length " + std::to_string(options.output_cap);
      r.derivation.push_back(r.diagnostic);
      return r;
    }
  }
  return {};
}

}  // namespace ocrank
