#include "ocrank/words.hpp"

#include <algorithm>
#include <vector>

#include "ocrank/errors.hpp"

namespace ocrank {

OrderedAlphabet::OrderedAlphabet() { rank_.fill(-1); }

OrderedAlphabet::OrderedAlphabet(std::string_view letters) : letters_(letters) {
  rank_.fill(-1);
  if (letters_.empty()) {
    throw InputError("alphabet must not be empty");
  }
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    auto& slot = rank_[static_cast<unsigned char>(letters_[i])];
    if (slot >= 0) {
      throw InputError(std::string("duplicate letter '") + letters_[i] + "' in alphabet");
    }
    slot = static_cast<std::int16_t>(i);
  }
}

OrderedAlphabet OrderedAlphabet::binary() { return OrderedAlphabet("01"); }

std::size_t OrderedAlphabet::rank(char c) const {
  auto r = rank_[static_cast<unsigned char>(c)];
  if (r < 0) {
    throw InputError(std::string("letter '") + c + "' is not in the alphabet \"" + letters_ + "\"");
  }
  return static_cast<std::size_t>(r);
}

void OrderedAlphabet::check(std::string_view w) const {
  for (char c : w) {
    rank(c);
  }
}

WordRelation relate(std::string_view u, std::string_view v, const OrderedAlphabet& alphabet) {
  std::size_t n = std::min(u.size(), v.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i] != v[i]) {
      return alphabet.rank(u[i]) < alphabet.rank(v[i]) ? WordRelation::StrictlyBefore
                                                       : WordRelation::StrictlyAfter;
    }
  }
  if (u.size() == v.size()) return WordRelation::Equal;
  return u.size() < v.size() ? WordRelation::ProperPrefix : WordRelation::ProperExtension;
}

bool lex_less(std::string_view u, std::string_view v, const OrderedAlphabet& alphabet) {
  auto r = relate(u, v, alphabet);
  return r == WordRelation::ProperPrefix || r == WordRelation::StrictlyBefore;
}

bool length_lex_less(std::string_view u, std::string_view v, const OrderedAlphabet& alphabet) {
  if (u.size() != v.size()) return u.size() < v.size();
  return relate(u, v, alphabet) == WordRelation::StrictlyBefore;
}

Word primitive_root(std::string_view w) {
  if (w.empty()) {
    throw InputError("primitive_root of the empty word");
  }
  // Border via the prefix function: w has period p = n - border, and is a power iff p | n.
  std::size_t n = w.size();
  std::vector<std::size_t> pi(n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t k = pi[i - 1];
    while (k > 0 && w[i] != w[k]) k = pi[k - 1];
    if (w[i] == w[k]) ++k;
    pi[i] = k;
  }
  std::size_t p = n - pi[n - 1];
  return Word(w.substr(0, n % p == 0 ? p : n));
}

bool is_primitive(std::string_view w) { return !w.empty() && primitive_root(w).size() == w.size(); }

void check_binary(std::string_view w) {
  for (char c : w) {
    if (c != '0' && c != '1') {
      throw InputError(std::string("input letter '") + c + "' is not 0 or 1");
    }
  }
}

std::int64_t open_count(std::string_view w) {
  check_binary(w);
  std::int64_t d = 0;
  for (char c : w) d += c == '0' ? 1 : -1;
  return d;
}

std::int64_t close_count(std::string_view w) { return -open_count(w); }

DyckClass dyck_class(std::string_view w) {
  check_binary(w);
  std::int64_t d = 0;
  std::int64_t low = 0;
  for (char c : w) {
    d += c == '0' ? 1 : -1;
    low = std::min(low, d);
  }
  bool prefix = low >= 0;
  // Every suffix closes at least as much as it opens iff every prefix opens at least d.
  bool suffix = low >= d;
  if (prefix && d == 0) return DyckClass::InD1;
  if (prefix && suffix) return DyckClass::PrefixAndSuffix;
  if (prefix) return DyckClass::PrefixOnly;
  if (suffix) return DyckClass::SuffixOnly;
  return DyckClass::Neither;
}

bool in_dyck(std::string_view w) { return dyck_class(w) == DyckClass::InD1; }

bool in_dyck_prefixes(std::string_view w) {
  auto c = dyck_class(w);
  return c == DyckClass::InD1 || c == DyckClass::PrefixOnly || c == DyckClass::PrefixAndSuffix;
}

std::string to_string(DyckClass c) {
  switch (c) {
    case DyckClass::InD1: return "InD1";
    case DyckClass::PrefixOnly: return "PrefixOnly";
    case DyckClass::SuffixOnly: return "SuffixOnly";
    case DyckClass::PrefixAndSuffix: return "PrefixAndSuffix";
    case DyckClass::Neither: return "Neither";
  }
  return "?";
}

}  // namespace ocrank
