#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ocrank/errors.hpp"
#include "ocrank/rank.hpp"
#include "ocrank/transducer.hpp"

namespace ocrank::cli {

/// Fixture syntax error; the message starts with "line N:".
class FixtureError : public InputError {
 public:
  FixtureError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// A machine file, or an expression file whose operands are other fixtures.
struct Fixture {
  std::string name;
  std::optional<Transducer> machine;
  std::optional<RocExpr> expr;
  std::string expr_op;                 // atom | concat | plus
  std::vector<std::string> expr_args;  // operand paths as written

  bool is_expression() const { return expr.has_value(); }
  /// The machine itself, or the machine of an `expr atom` file.
  const Transducer* single_machine() const;
  /// The expression, with a plain machine read as an atom.
  RocExpr expression() const;
};

using FixtureLoader = std::function<Fixture(const std::string& operand)>;

/// Parses fixture text. `load` resolves expression operands; without it an
/// expression file is rejected.
Fixture parse_fixture(std::string_view text, const FixtureLoader& load = {});

/// Reads a fixture file. Operands resolve relative to the file's directory,
/// with ".oct" appended when the name as written does not exist.
Fixture load_fixture(const std::filesystem::path& path);

std::string render_fixture(const Fixture& f);
std::string render_machine(const Transducer& m);

}  // namespace ocrank::cli
