// frobkit: Frobenius coin problem toolkit for two coprime denominations.
// Data goes to stdout, diagnostics to stderr. Exit codes: 0 success /
// representable, 1 non-representable or verification mismatches, 2 bad input.

#include <charconv>
#include <cstdlib>
#include <iostream>
#include <limits>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "frobkit/oracle.hpp"
#include "frobkit/solver.hpp"

using frobkit::Int;
using json = nlohmann::ordered_json;

namespace {

// Integers beyond 53-bit magnitude are emitted as decimal strings so that
// double-based JSON consumers never round them.
constexpr Int kJsonExactMax = (Int(1) << 53) - 1;

json json_int(Int v) {
  if (v > kJsonExactMax || v < -kJsonExactMax) return std::to_string(v);
  return v;
}

json expression_fields(const frobkit::Expression& e) {
  return {{"x", json_int(e.x())}, {"y", json_int(e.y())}};
}

json expression_node(const frobkit::Expression& e) {
  return {{"d", json_int(e.value())},
          {"x", json_int(e.x())},
          {"y", json_int(e.y())}};
}

std::string node_id(const frobkit::Expression& e) {
  return std::to_string(e.value()) + ":(" + std::to_string(e.x()) + "," +
         std::to_string(e.y()) + ")";
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (const char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

void print_expression_line(const frobkit::Denominations& den,
                           const frobkit::Expression& e) {
  std::cout << e.value() << " = " << den.a() << "*" << e.x() << " + "
            << den.b() << "*" << e.y() << "\n";
}

std::optional<Int> max_enum_override() {
  const char* raw = std::getenv("FROBKIT_MAX_ENUM");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  Int value = 0;
  const char* end = raw + std::string_view(raw).size();
  const auto [ptr, ec] = std::from_chars(raw, end, value);
  if (ec != std::errc() || ptr != end || value <= 0) {
    throw frobkit::Error("FROBKIT_MAX_ENUM must be a positive integer");
  }
  return value;
}

int run_frob(Int a, Int b, const std::string& format) {
  const auto den = frobkit::validate_denominations(a, b);
  const Int f = frobkit::frobenius_number(den);
  if (format == "json") {
    const json out = {
        {"a", json_int(a)}, {"b", json_int(b)}, {"frobenius", json_int(f)}};
    std::cout << out.dump() << "\n";
  } else {
    std::cout << f << "\n";
  }
  return 0;
}

int run_represent(Int a, Int b, Int d, bool all, const std::string& method,
                  const std::string& format) {
  const auto den = frobkit::validate_denominations(a, b);

  if (all) {
    const auto level = frobkit::all_acceptable_expressions(den, d);
    if (format == "json") {
      json expressions = json::array();
      for (const auto& e : level.expressions) {
        expressions.push_back(expression_fields(e));
      }
      const json out = {{"a", json_int(a)},
                        {"b", json_int(b)},
                        {"d", json_int(d)},
                        {"expressions", expressions}};
      std::cout << out.dump() << "\n";
    } else {
      for (const auto& e : level.expressions) print_expression_line(den, e);
    }
    if (level.expressions.empty()) {
      std::cerr << "note: " << d << " is not representable\n";
      return 1;
    }
    return 0;
  }

  std::optional<frobkit::Expression> expr;
  if (method == "direct") {
    expr = frobkit::represent_direct(den, d);
  } else if (method == "oracle") {
    expr = frobkit::oracle_representable(den, d);
  } else {
    if (d >= 0 && den.a() > 1 && den.b() > 1 &&
        d <= frobkit::frobenius_number(den)) {
      std::cerr << "note: " << d << " does not exceed the Frobenius number "
                << frobkit::frobenius_number(den)
                << "; falling back to the direct method\n";
    }
    expr = frobkit::represent(den, d);
  }

  if (!expr) {
    std::cerr << "note: " << d << " is not representable\n";
    return 1;
  }
  if (format == "json") {
    json out = {{"a", json_int(a)}, {"b", json_int(b)}, {"d", json_int(d)}};
    out.update(expression_fields(*expr));
    std::cout << out.dump() << "\n";
  } else {
    print_expression_line(den, *expr);
  }
  return 0;
}

int run_gaps(Int a, Int b, const std::string& format) {
  const auto den = frobkit::validate_denominations(a, b);
  const auto budget = max_enum_override();
  const auto report = budget ? frobkit::gaps(den, *budget) : frobkit::gaps(den);

  if (format == "json") {
    json gap_values = json::array();
    for (const Int g : report.gaps) gap_values.push_back(json_int(g));
    const json out = {{"a", json_int(a)},
                      {"b", json_int(b)},
                      {"gaps", gap_values},
                      {"count", json_int(report.count())},
                      {"frobenius", json_int(report.frobenius)}};
    std::cout << out.dump() << "\n";
  } else if (format == "csv") {
    for (const Int g : report.gaps) std::cout << g << "\n";
  } else {
    std::cout << "gaps:";
    for (const Int g : report.gaps) std::cout << " " << g;
    std::cout << "\n";
    std::cout << "count: " << report.count() << "\n";
    std::cout << "frobenius: " << report.frobenius << "\n";
  }
  return 0;
}

int run_tree(Int a, Int b, Int depth, const std::string& format) {
  const auto den = frobkit::validate_denominations(a, b);
  const auto tree = frobkit::expression_tree(den, depth, max_enum_override());

  if (format == "dot") {
    std::cout << "digraph expression_tree {\n";
    for (const auto& level : tree.levels) {
      for (const auto& e : level.expressions) {
        const std::string id = node_id(e);
        std::cout << "  \"" << id << "\" [label=\"" << id << "\"];\n";
      }
    }
    for (const auto& edge : tree.edges) {
      std::cout << "  \"" << node_id(edge.from) << "\" -> \""
                << node_id(edge.to) << "\" [label=\""
                << (edge.added == frobkit::UnitChoice::E1 ? "E1" : "E2")
                << "\"];\n";
    }
    std::cout << "}\n";
    return 0;
  }

  json levels = json::array();
  for (const auto& level : tree.levels) {
    json expressions = json::array();
    for (const auto& e : level.expressions) {
      expressions.push_back(expression_fields(e));
    }
    levels.push_back({{"d", json_int(level.d)}, {"expressions", expressions}});
  }
  json edges = json::array();
  for (const auto& edge : tree.edges) {
    edges.push_back(
        {{"from", expression_node(edge.from)},
         {"added", edge.added == frobkit::UnitChoice::E1 ? "E1" : "E2"},
         {"to", expression_node(edge.to)}});
  }
  const json out = {{"a", json_int(a)},
                    {"b", json_int(b)},
                    {"depth", json_int(depth)},
                    {"levels", levels},
                    {"edges", edges}};
  std::cout << out.dump() << "\n";
  return 0;
}

int run_verify(Int a, Int b, std::optional<Int> max_d,
               const std::string& format) {
  const auto den = frobkit::validate_denominations(a, b);
  Int d_hi;
  if (max_d) {
    d_hi = *max_d;
  } else {
    const __int128 scaled = __int128(4) * a * b;
    d_hi = scaled > std::numeric_limits<Int>::max()
               ? std::numeric_limits<Int>::max()
               : static_cast<Int>(scaled);
  }
  const auto report = frobkit::verify_range(den, 0, d_hi);

  if (format == "json") {
    json mismatches = json::array();
    for (const auto& m : report.mismatches) {
      mismatches.push_back(
          {{"d", json_int(m.d)}, {"method", m.method}, {"oracle", m.oracle}});
    }
    const json out = {{"a", json_int(a)},
                      {"b", json_int(b)},
                      {"d_lo", json_int(report.d_lo)},
                      {"d_hi", json_int(report.d_hi)},
                      {"checked", json_int(report.checked)},
                      {"mismatches", mismatches},
                      {"elapsed_ms", report.elapsed.count()}};
    std::cout << out.dump() << "\n";
  } else if (format == "csv") {
    for (const auto& m : report.mismatches) {
      std::cout << m.d << "," << csv_field(m.method) << ","
                << csv_field(m.oracle) << "\n";
    }
  } else {
    std::cout << "a: " << a << "\n";
    std::cout << "b: " << b << "\n";
    std::cout << "checked: " << report.checked << "\n";
    std::cout << "mismatches: " << report.mismatches.size() << "\n";
    for (const auto& m : report.mismatches) {
      std::cout << "mismatch d=" << m.d << " method=" << m.method
                << " oracle=" << m.oracle << "\n";
    }
    std::cout << "elapsed_ms: " << report.elapsed.count() << "\n";
  }
  return report.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Frobenius coin problem toolkit for two coprime denominations"};
  app.require_subcommand(1);

  Int a = 0, b = 0, d = 0, depth = 0;
  bool all = false;
  std::optional<Int> max_d;
  std::string format;
  std::string method = "recursive";
  int exit_code = 0;

  auto* frob = app.add_subcommand(
      "frob", "Print the Frobenius number (-1 when a or b is 1)");
  frob->alias("frobenius");
  frob->add_option("a", a, "first denomination")->required();
  frob->add_option("b", b, "second denomination")->required();
  frob->add_option("--format", format, "output format")
      ->default_val("text")
      ->transform(CLI::IsMember({"text", "json"}));
  frob->callback([&] { exit_code = run_frob(a, b, format); });

  auto* represent = app.add_subcommand(
      "represent", "Find a nonnegative representation d = a*x + b*y");
  represent->add_option("a", a, "first denomination")->required();
  represent->add_option("b", b, "second denomination")->required();
  represent->add_option("d", d, "target value")->required();
  represent->add_flag("--all", all,
                      "enumerate every acceptable expression of d");
  represent
      ->add_option("--method", method,
                   "solver path: recursive (default), direct, or oracle; "
                   "ignored with --all")
      ->default_val("recursive")
      ->transform(CLI::IsMember({"recursive", "direct", "oracle"}));
  represent->add_option("--format", format, "output format")
      ->default_val("text")
      ->transform(CLI::IsMember({"text", "json"}));
  represent->callback(
      [&] { exit_code = run_represent(a, b, d, all, method, format); });

  auto* gaps_cmd = app.add_subcommand(
      "gaps", "List every non-representable value with summary statistics");
  gaps_cmd->add_option("a", a, "first denomination")->required();
  gaps_cmd->add_option("b", b, "second denomination")->required();
  gaps_cmd->add_option("--format", format, "output format")
      ->default_val("text")
      ->transform(CLI::IsMember({"text", "json", "csv"}));
  gaps_cmd->callback([&] { exit_code = run_gaps(a, b, format); });

  auto* tree = app.add_subcommand(
      "tree", "Expression tree rooted at the value after the Frobenius "
              "number");
  tree->add_option("a", a, "first denomination")->required();
  tree->add_option("b", b, "second denomination")->required();
  tree->add_option("--depth", depth, "number of levels beyond the root")
      ->required();
  tree->add_option("--format", format, "output format")
      ->default_val("json")
      ->transform(CLI::IsMember({"json", "dot"}));
  tree->callback([&] { exit_code = run_tree(a, b, depth, format); });

  auto* verify = app.add_subcommand(
      "verify", "Differential sweep of the solver against the brute-force "
                "oracle");
  verify->add_option("a", a, "first denomination")->required();
  verify->add_option("b", b, "second denomination")->required();
  verify->add_option("--max-d", max_d, "sweep 0..N inclusive (default 4*a*b)");
  verify->add_option("--format", format, "output format")
      ->default_val("text")
      ->transform(CLI::IsMember({"text", "json", "csv"}));
  verify->callback([&] { exit_code = run_verify(a, b, max_d, format); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const frobkit::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
