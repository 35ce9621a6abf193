// igi — exact sexagesimal reciprocals, basic table families, and the
// AO 6456 reconstruction on the command line.

#include <exception>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "sexagesimal/sexagesimal.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;   // usage, IO, parse errors
constexpr int kExitDomain = 2;  // non-regular input, failed verification

// Multiplier syntax: "1", "3", "5", "3^J", "5^J".
void parse_multiplier(const std::string& text, sexagesimal::FamilySpec& spec) {
  const auto caret = text.find('^');
  const std::string base_part = text.substr(0, caret);
  int base = 0;
  int exp = caret == std::string::npos ? 1 : 0;
  try {
    base = std::stoi(base_part);
    if (caret != std::string::npos) {
      exp = std::stoi(text.substr(caret + 1));
    }
  } catch (const std::exception&) {
    throw std::invalid_argument("bad multiplier: " + text);
  }
  if (base == 1 && caret == std::string::npos) {
    exp = 0;
  }
  spec.multiplier_base = base;
  spec.multiplier_exp = exp;
  if (!(base == 1 || base == 3 || base == 5) || exp < 0 ||
      ((base == 1) != (exp == 0))) {
    throw std::invalid_argument("bad multiplier: " + text +
                                " (allowed: 1, 3^j, 5^j)");
  }
}

int run(int argc, char** argv) {
  CLI::App app{"exact base-60 reciprocal tables"};
  app.require_subcommand(1);

  std::string number_arg;
  std::string head_arg;
  std::string tail_arg;
  std::string style_name = "pointed";
  std::string format_name = "text";
  std::string multiplier_arg;
  std::string golden_path;
  int generator = 2;
  int n_max = 30;
  bool unsafe = false;

  auto* cmd_parse = app.add_subcommand("parse", "parse a transliteration and echo its canonical form");
  cmd_parse->add_option("number", number_arg)->required();

  auto* cmd_format = app.add_subcommand("format", "reformat a transliteration");
  cmd_format->add_option("number", number_arg)->required();
  cmd_format->add_option("--style", style_name)
      ->check(CLI::IsMember({"pointed", "integer"}));

  auto* cmd_recip = app.add_subcommand("recip", "print a number and its exact reciprocal");
  cmd_recip->add_option("number", number_arg)->required();

  auto* cmd_verify = app.add_subcommand("verify-pair", "check that head * tail is a power of 60");
  cmd_verify->add_option("head", head_arg)->required();
  cmd_verify->add_option("tail", tail_arg)->required();

  auto* cmd_family = app.add_subcommand("family", "generate one basic reciprocal-table family");
  cmd_family->add_option("generator", generator)->required();
  cmd_family->add_option("multiplier", multiplier_arg)->required();
  cmd_family->add_option("--n", n_max, "rows to generate (n = 1..N)");
  cmd_family->add_flag("--unsafe", unsafe, "allow specs outside the standard catalog");
  cmd_family->add_option("--format", format_name)
      ->check(CLI::IsMember({"text", "csv", "jsonl", "json"}));

  auto* cmd_table1 = app.add_subcommand("table1", "the 30-row doubling family with multiplier 5^3");
  cmd_table1->add_option("--format", format_name)
      ->check(CLI::IsMember({"text", "csv", "jsonl", "json"}));

  auto* cmd_reconstruct = app.add_subcommand("reconstruct", "rebuild the AO 6456 table and diff it against golden rows");
  cmd_reconstruct->add_option("--format", format_name)
      ->check(CLI::IsMember({"text", "csv", "jsonl", "json"}));
  cmd_reconstruct->add_option("--golden", golden_path, "external golden file (report JSON schema)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  using namespace sexagesimal;

  if (cmd_parse->parsed()) {
    std::cout << format(parse(number_arg)) << '\n';
    return kExitOk;
  }

  if (cmd_format->parsed()) {
    const Style style = style_name == "integer" ? Style::integer : Style::pointed;
    std::cout << format(parse(number_arg), style) << '\n';
    return kExitOk;
  }

  if (cmd_recip->parsed()) {
    const Number x = parse(number_arg);
    const Number r = reciprocal(x);
    std::cout << "igi " << format(x) << ' ' << format(r) << '\n';
    return kExitOk;
  }

  if (cmd_verify->parsed()) {
    const bool ok = verify_pair(parse(head_arg), parse(tail_arg));
    std::cout << (ok ? "true" : "false") << '\n';
    return ok ? kExitOk : kExitDomain;
  }

  const OutputFormat fmt = parse_output_format(format_name);

  if (cmd_family->parsed()) {
    FamilySpec spec;
    spec.generator = generator;
    spec.n_max = n_max;
    parse_multiplier(multiplier_arg, spec);
    if (!spec.well_formed()) {
      throw std::invalid_argument("malformed family spec");
    }
    if (!unsafe && !spec.in_standard_catalog()) {
      throw std::invalid_argument(
          "family spec outside the standard catalog (pass --unsafe to force)");
    }
    emit_family(std::cout, generate_family(spec), fmt);
    return kExitOk;
  }

  if (cmd_table1->parsed()) {
    emit_family(std::cout, table_one(), fmt);
    return kExitOk;
  }

  if (cmd_reconstruct->parsed()) {
    ReconstructionReport report;
    if (golden_path.empty()) {
      report = reconstruct();
    } else {
      std::ifstream in(golden_path);
      if (!in) {
        throw std::runtime_error("cannot read golden file: " + golden_path);
      }
      report = reconstruct(golden_from_json(in));
    }
    emit_report(std::cout, report, fmt);
    if (fmt != OutputFormat::json) {
      emit_report_summary(std::cerr, report);
    }
    const bool clean =
        report.mismatches.empty() && report.total == kAttestedPairCount;
    return clean ? kExitOk : kExitDomain;
  }

  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const sexagesimal::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const sexagesimal::NotRegularError& e) {
    std::cerr << e.what() << '\n';
    return kExitDomain;
  } catch (const std::length_error& e) {
    std::cerr << e.what() << '\n';
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
