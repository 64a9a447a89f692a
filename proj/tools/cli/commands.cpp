#include "cli/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>

#include "cli/fixture.hpp"
#include "cli/report.hpp"
#include "ocrank/harness.hpp"

namespace ocrank::cli {

namespace {

struct Flags {
  std::string command;
  std::string fixture;
  std::optional<std::size_t> input_cap;
  std::optional<std::size_t> output_cap;
  std::optional<std::uint64_t> counter_cap;
  std::string json_path;
  std::string dot_path;
  bool prime = false;
};

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw InputError("cannot write " + path);
  f << text;
}

void emit_json(const Flags& flags, const Json& j) {
  if (!flags.json_path.empty()) write_file(flags.json_path, j.dump(2) + "\n");
}

const Transducer& need_machine(const Fixture& f, const std::string& command) {
  const Transducer* m = f.single_machine();
  if (!m) throw InputError("`" + command + "` needs a machine fixture, not an expression");
  return *m;
}

int run(const Flags& flags, std::ostream& out) {
  Fixture fixture = load_fixture(flags.fixture);
  ReachOptions reach{flags.counter_cap};

  if (flags.command == "nsets") {
    const auto& m = need_machine(fixture, flags.command);
    check_well_formed(m);
    auto report = reach_sets(m, reach);
    out << nsets_text(m, report);
    emit_json(flags, nsets_json(m, report));
    return kOk;
  }
  if (flags.command == "mprime") {
    const auto& m = need_machine(fixture, flags.command);
    check_well_formed(m);
    auto report = reach_sets(m, reach);
    Json j = {{"period", report.period}, {"mprime", mprime_json(build_mprime(m, report))}};
    out << j.dump(2) << "\n";
    emit_json(flags, j);
    return kOk;
  }
  if (flags.command == "dot") {
    const auto& m = need_machine(fixture, flags.command);
    check_well_formed(m);
    std::string dot = flags.prime ? to_dot(build_mprime(m, reach)) : to_dot(m);
    if (flags.dot_path.empty()) {
      out << dot;
    } else {
      write_file(flags.dot_path, dot);
    }
    return kOk;
  }
  if (flags.command == "rank") {
    Json j;
    RankResult result;
    if (fixture.machine) {
      auto analysis = analyze_transducer(*fixture.machine, reach);
      j = analysis_json(analysis);
      result = analysis.result;
    } else {
      ExprOptions options;
      options.reach = reach;
      if (flags.input_cap) options.input_cap = *flags.input_cap;
      if (flags.output_cap) options.output_cap = *flags.output_cap;
      result = expr_rank_bound(*fixture.expr, options);
      j = rank_json(result);
    }
    out << j.dump(2) << "\n";
    emit_json(flags, j);
    switch (result.kind) {
      case ResultKind::Bound: return kOk;
      case ResultKind::NotScattered: return kNotScattered;
      case ResultKind::Unknown: return kUnknown;
    }
    return kUnknown;
  }
  if (flags.command == "enumerate") {
    std::size_t input_cap = flags.input_cap.value_or(8);
    std::size_t output_cap = flags.output_cap.value_or(12);
    auto words = fixture.machine ? enumerate(*fixture.machine, input_cap, output_cap)
                                 : enumerate(*fixture.expr, input_cap, output_cap);
    for (const auto& w : words) out << (w.empty() ? "ε" : w) << "\n";
    emit_json(flags, {{"input_cap", input_cap}, {"output_cap", output_cap}, {"words", words}});
    return kOk;
  }
  // check
  const auto& m = need_machine(fixture, flags.command);
  CheckOptions options;
  options.input_cap = flags.input_cap.value_or(options.input_cap);
  options.output_cap = flags.output_cap;
  options.reach = reach;
  auto results = check_machine(m, options);
  bool ok = true;
  for (const auto& r : results) {
    out << (r.passed ? "PASS " : "FAIL ") << r.name << (r.detail.empty() ? "" : "  " + r.detail) << "\n";
    ok = ok && r.passed;
  }
  emit_json(flags, check_json(results));
  return ok ? kOk : kCertificationFailure;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Flags flags;
  CLI::App app{"Order-type rank bounds for one-counter languages", "ocrank"};
  app.add_option("command", flags.command, "nsets | mprime | dot | rank | enumerate | check")
      ->required()
      ->check(CLI::IsMember({"nsets", "mprime", "dot", "rank", "enumerate", "check"}));
  app.add_option("fixture", flags.fixture, "Machine (.oct) or expression file")->required();
  app.add_option("--input-cap", flags.input_cap, "Longest Dyck input to enumerate");
  app.add_option("--output-cap", flags.output_cap, "Longest output word to enumerate");
  app.add_option("--counter-cap", flags.counter_cap, "Counter bound of the configuration search");
  app.add_option("--json", flags.json_path, "Write the JSON report to PATH");
  app.add_option("--dot", flags.dot_path, "Write DOT to PATH (dot command)");
  app.add_flag("--prime", flags.prime, "Draw M' instead of M (dot command)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    return run(flags, out);
  } catch (const CertificationError& e) {
    err << "ocrank: certification failed: " << e.what() << "\n";
    return kCertificationFailure;
  } catch (const std::invalid_argument& e) {
    err << "ocrank: " << e.what() << "\n";
    return kUsage;
  } catch (const std::logic_error& e) {
    err << "ocrank: internal error: " << e.what() << "\n";
    return kCertificationFailure;
  }
}

}  // namespace ocrank::cli
