#include "cli/fixture.hpp"

#include <fstream>
#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

namespace ocrank::cli {

namespace {

std::vector<std::string> split(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

// Text after the first `n` whitespace-separated tokens.
std::string rest_after(std::string_view line, std::size_t n) {
  std::size_t i = 0;
  for (std::size_t k = 0; k < n; ++k) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
  }
  std::string out;
  for (; i < line.size(); ++i) {
    if (!std::isspace(static_cast<unsigned char>(line[i]))) out += line[i];
  }
  return out;
}

struct PendingTransition {
  std::size_t line;
  std::string from;
  std::string bit;
  std::string to;
  std::string regex;
};

}  // namespace

FixtureError::FixtureError(std::size_t line, const std::string& message)
    : InputError("line " + std::to_string(line) + ": " + message), line_(line) {}

const Transducer* Fixture::single_machine() const {
  if (machine) return &*machine;
  if (expr && expr->kind == RocExpr::Kind::Atom) return expr->atom.get();
  return nullptr;
}

RocExpr Fixture::expression() const {
  if (expr) return *expr;
  return RocExpr::leaf(*machine);
}

Fixture parse_fixture(std::string_view text, const FixtureLoader& load) {
  Fixture f;
  std::optional<std::string> alphabet;
  std::vector<std::string> states;
  std::optional<std::pair<std::size_t, std::string>> initial;
  std::vector<std::pair<std::size_t, std::string>> finals;
  std::vector<PendingTransition> pending;
  std::optional<std::size_t> expr_line;
  std::size_t line_no = 0;

  std::istringstream in{std::string(text)};
  for (std::string raw; std::getline(in, raw);) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tok = split(line);
    if (tok.empty()) continue;
    const std::string& key = tok[0];
    if (key == "name") {
      if (tok.size() != 2) throw FixtureError(line_no, "expected `name <id>`");
      f.name = tok[1];
    } else if (key == "alphabet") {
      if (alphabet) throw FixtureError(line_no, "duplicate alphabet");
      std::string letters;
      for (std::size_t i = 1; i < tok.size(); ++i) {
        if (tok[i].size() != 1) throw FixtureError(line_no, "alphabet symbol '" + tok[i] + "' is not one character");
        letters += tok[i];
      }
      try {
        alphabet = OrderedAlphabet(letters).letters();
      } catch (const InputError& e) {
        throw FixtureError(line_no, e.what());
      }
    } else if (key == "states") {
      if (tok.size() < 2) throw FixtureError(line_no, "expected at least one state");
      for (std::size_t i = 1; i < tok.size(); ++i) {
        if (std::find(states.begin(), states.end(), tok[i]) != states.end()) {
          throw FixtureError(line_no, "duplicate state '" + tok[i] + "'");
        }
        states.push_back(tok[i]);
      }
    } else if (key == "initial") {
      if (tok.size() != 2) throw FixtureError(line_no, "expected `initial <state>`");
      if (initial) throw FixtureError(line_no, "duplicate initial state");
      initial = {line_no, tok[1]};
    } else if (key == "final") {
      if (tok.size() < 2) throw FixtureError(line_no, "expected at least one final state");
      for (std::size_t i = 1; i < tok.size(); ++i) finals.emplace_back(line_no, tok[i]);
    } else if (key == "trans") {
      if (tok.size() < 5) throw FixtureError(line_no, "expected `trans <p> <0|1> <q> <regex>`");
      pending.push_back({line_no, tok[1], tok[2], tok[3], rest_after(line, 4)});
    } else if (key == "expr") {
      if (expr_line) throw FixtureError(line_no, "duplicate expr line");
      if (tok.size() < 3) throw FixtureError(line_no, "expected `expr <atom|concat|plus> <file>...`");
      expr_line = line_no;
      f.expr_op = tok[1];
      f.expr_args.assign(tok.begin() + 2, tok.end());
      std::size_t arity = f.expr_op == "concat" ? 2 : 1;
      if (f.expr_op != "atom" && f.expr_op != "concat" && f.expr_op != "plus") {
        throw FixtureError(line_no, "unknown expression operator '" + f.expr_op + "'");
      }
      if (f.expr_args.size() != arity) {
        throw FixtureError(line_no, "`expr " + f.expr_op + "` takes " + std::to_string(arity) + " operand(s)");
      }
    } else {
      throw FixtureError(line_no, "unknown directive '" + key + "'");
    }
  }

  if (expr_line) {
    if (alphabet || !states.empty() || initial || !finals.empty() || !pending.empty()) {
      throw FixtureError(*expr_line, "an expression file cannot also declare a machine");
    }
    if (!load) throw FixtureError(*expr_line, "expression operands cannot be resolved here");
    std::vector<RocExpr> operands;
    for (const auto& arg : f.expr_args) {
      try {
        operands.push_back(load(arg).expression());
      } catch (const InputError& e) {
        throw FixtureError(*expr_line, "operand '" + arg + "': " + e.what());
      }
    }
    if (f.expr_op == "atom") {
      if (operands[0].kind != RocExpr::Kind::Atom) throw FixtureError(*expr_line, "atom operand must be a machine");
      f.expr = operands[0];
    } else if (f.expr_op == "plus") {
      f.expr = RocExpr::plus(operands[0]);
    } else {
      if (!(operands[0].alphabet() == operands[1].alphabet())) {
        throw FixtureError(*expr_line, "concat operands use different alphabets");
      }
      f.expr = RocExpr::concat(operands[0], operands[1]);
    }
    return f;
  }

  const std::size_t end = line_no + 1;
  if (!alphabet) throw FixtureError(end, "missing `alphabet` line");
  if (states.empty()) throw FixtureError(end, "missing `states` line");
  if (!initial) throw FixtureError(end, "missing `initial` line");
  if (finals.empty()) throw FixtureError(end, "missing `final` line");

  Transducer m{OrderedAlphabet(*alphabet)};
  for (const auto& s : states) m.add_state(s);
  auto lookup = [&](std::size_t line, const std::string& s) {
    auto q = m.find_state(s);
    if (!q) throw FixtureError(line, "unknown state '" + s + "'");
    return *q;
  };
  m.set_initial(lookup(initial->first, initial->second));
  for (const auto& [line, s] : finals) m.set_final(lookup(line, s));
  for (const auto& t : pending) {
    StateId from = lookup(t.line, t.from);
    StateId to = lookup(t.line, t.to);
    if (t.bit != "0" && t.bit != "1") throw FixtureError(t.line, "input bit must be 0 or 1, got '" + t.bit + "'");
    try {
      m.add_transition(from, t.bit == "0" ? 0 : 1, to, t.regex);
    } catch (const RegexSyntaxError& e) {
      throw FixtureError(t.line, std::string("bad regex at column ") + std::to_string(e.position()) + ": " + e.what());
    } catch (const std::invalid_argument& e) {
      throw FixtureError(t.line, e.what());
    }
  }
  m.label = f.name;
  f.machine = std::move(m);
  return f;
}

Fixture load_fixture(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read fixture " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  const auto dir = path.parent_path();
  auto load = [&dir](const std::string& operand) {
    std::filesystem::path p = dir / operand;
    if (!std::filesystem::exists(p)) p += ".oct";
    return load_fixture(p);
  };
  Fixture f = parse_fixture(buf.str(), load);
  if (f.name.empty()) f.name = path.stem().string();
  if (f.machine && f.machine->label.empty()) f.machine->label = f.name;
  return f;
}

std::string render_machine(const Transducer& m) {
  std::string out;
  if (!m.label.empty()) out += "name " + m.label + "\n";
  out += "alphabet";
  for (char c : m.output_alphabet().letters()) out += std::string(" ") + c;
  out += "\nstates";
  for (StateId q = 0; q < m.num_states(); ++q) out += " " + m.name(q);
  out += "\ninitial " + m.name(m.initial()) + "\nfinal";
  for (StateId q : m.finals()) out += " " + m.name(q);
  out += "\n";
  for (const auto& t : m.transitions()) {
    out += "trans " + m.name(t.from) + " " + std::to_string(t.bit) + " " + m.name(t.to) + " " + t.output_text + "\n";
  }
  return out;
}

std::string render_fixture(const Fixture& f) {
  if (f.machine) return render_machine(*f.machine);
  std::string out;
  if (!f.name.empty()) out += "name " + f.name + "\n";
  out += "expr " + f.expr_op;
  for (const auto& a : f.expr_args) out += " " + a;
  return out + "\n";
}

}  // namespace ocrank::cli
