#include <cctype>

#include "ocrank/regular.hpp"

namespace ocrank {

Regex Regex::alternation(Regex a, Regex b) {
  Regex r{Kind::Union, 0, {}};
  r.children.push_back(std::move(a));
  r.children.push_back(std::move(b));
  return r;
}

Regex Regex::concatenation(Regex a, Regex b) {
  Regex r{Kind::Concat, 0, {}};
  r.children.push_back(std::move(a));
  r.children.push_back(std::move(b));
  return r;
}

Regex Regex::star(Regex a) {
  Regex r{Kind::Star, 0, {}};
  r.children.push_back(std::move(a));
  return r;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const OrderedAlphabet& alphabet) : text_(text), alphabet_(alphabet) {}

  Regex parse() {
    skip_blanks();
    if (at_end()) fail("empty regular expression");
    Regex r = expr();
    skip_blanks();
    if (!at_end()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return r;
  }

 private:
  Regex expr() {
    Regex r = term();
    while (true) {
      skip_blanks();
      if (at_end() || text_[pos_] != '+') return r;
      ++pos_;
      r = Regex::alternation(std::move(r), term());
    }
  }

  Regex term() {
    Regex r = factor();
    while (true) {
      skip_blanks();
      if (at_end() || text_[pos_] == '+' || text_[pos_] == ')') return r;
      r = Regex::concatenation(std::move(r), factor());
    }
  }

  Regex factor() {
    Regex r = base();
    while (true) {
      skip_blanks();
      if (at_end() || text_[pos_] != '*') return r;
      ++pos_;
      if (r.kind != Regex::Kind::Star) r = Regex::star(std::move(r));
    }
  }

  Regex base() {
    skip_blanks();
    if (at_end()) fail("expected a letter, 'eps' or '('");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Regex r = expr();
      skip_blanks();
      if (at_end() || text_[pos_] != ')') fail("expected ')'");
      ++pos_;
      return r;
    }
    if (text_.substr(pos_, 3) == "eps") {
      pos_ += 3;
      return Regex::epsilon();
    }
    if (c == '+' || c == '*' || c == ')') fail(std::string("unexpected '") + c + "'");
    if (!alphabet_.contains(c)) {
      fail(std::string("letter '") + c + "' is not in the alphabet \"" + alphabet_.letters() + "\"");
    }
    ++pos_;
    return Regex::symbol(c);
  }

  void skip_blanks() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  [[noreturn]] void fail(const std::string& msg) const {
    throw RegexSyntaxError("regex \"" + std::string(text_) + "\" at " + std::to_string(pos_) + ": " + msg,
                           pos_);
  }

  std::string_view text_;
  const OrderedAlphabet& alphabet_;
  std::size_t pos_ = 0;
};

// Precedence: union 0, concat 1, star/atoms 2.
std::string render(const Regex& re, int context) {
  std::string s;
  int own = 2;
  switch (re.kind) {
    case Regex::Kind::Epsilon: return "eps";
    case Regex::Kind::Letter: return std::string(1, re.letter);
    case Regex::Kind::Union:
      own = 0;
      s = render(re.children[0], 0) + "+" + render(re.children[1], 1);
      break;
    case Regex::Kind::Concat:
      own = 1;
      s = render(re.children[0], 1) + render(re.children[1], 2);
      break;
    case Regex::Kind::Star: return render(re.children[0], 3) + "*";
  }
  return own < context ? "(" + s + ")" : s;
}

}  // namespace

Regex parse_regex(std::string_view text, const OrderedAlphabet& alphabet) {
  return Parser(text, alphabet).parse();
}

std::string to_string(const Regex& re) { return render(re, 0); }

}  // namespace ocrank
