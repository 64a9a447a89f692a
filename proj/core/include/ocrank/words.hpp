#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace ocrank {

using Word = std::string;

/// Finite alphabet of single-byte letters with a total order given by position.
class OrderedAlphabet {
 public:
  OrderedAlphabet();
  explicit OrderedAlphabet(std::string_view letters);

  static OrderedAlphabet binary();

  std::size_t size() const { return letters_.size(); }
  char letter(std::size_t index) const { return letters_[index]; }
  const std::string& letters() const { return letters_; }

  bool contains(char c) const { return rank_[static_cast<unsigned char>(c)] >= 0; }
  /// Position of `c` in the order. Throws InputError for foreign letters.
  std::size_t rank(char c) const;
  /// Throws InputError naming the first letter of `w` outside the alphabet.
  void check(std::string_view w) const;

  bool operator==(const OrderedAlphabet& other) const { return letters_ == other.letters_; }

 private:
  std::string letters_;
  std::array<std::int16_t, 256> rank_;
};

enum class WordRelation { Equal, ProperPrefix, ProperExtension, StrictlyBefore, StrictlyAfter };

/// Relation of `u` to `v`: ProperPrefix means u is a proper prefix of v,
/// StrictlyBefore means the first differing letter of u is smaller.
WordRelation relate(std::string_view u, std::string_view v, const OrderedAlphabet& alphabet);

/// The lexicographic order: proper prefixes first, otherwise first difference.
bool lex_less(std::string_view u, std::string_view v, const OrderedAlphabet& alphabet);

/// Shorter words first, equal lengths by letter order.
bool length_lex_less(std::string_view u, std::string_view v, const OrderedAlphabet& alphabet);

struct LexLess {
  const OrderedAlphabet* alphabet;
  bool operator()(const Word& u, const Word& v) const { return lex_less(u, v, *alphabet); }
};

/// Shortest v with w = v^k. Throws InputError on the empty word.
Word primitive_root(std::string_view w);
bool is_primitive(std::string_view w);

/// |w|_0 - |w|_1 over the input alphabet {0,1}.
std::int64_t open_count(std::string_view w);
std::int64_t close_count(std::string_view w);

enum class DyckClass { InD1, PrefixOnly, SuffixOnly, PrefixAndSuffix, Neither };

/// Membership of a binary word in D1, Pref(D1), Suf(D1). InD1 takes precedence.
DyckClass dyck_class(std::string_view w);
bool in_dyck(std::string_view w);
bool in_dyck_prefixes(std::string_view w);

/// Throws InputError unless w is over {0,1}.
void check_binary(std::string_view w);

std::string to_string(DyckClass c);

}  // namespace ocrank
