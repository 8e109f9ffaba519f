// Command-line front end: certified radii tables, functional evaluation,
// randomized verification sweeps, and sharpness probes.
//
// Exit codes: 0 success/confirmed, 1 violation found, 2 usage or parse
// error, 3 inconclusive sharpness probe.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bohr/commands.hpp"
#include "bohr/output.hpp"

namespace {

struct Sink {
  std::string format = "csv";
  std::string out_path;

  void attach(CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", out_path, "Write output to a file instead of stdout");
  }

  int write(const bohr::OutputRecord& record, int code) const {
    const auto fmt = bohr::parse_format(format);
    bohr::emit(record, *fmt,
               out_path.empty() ? std::nullopt : std::optional<std::string>(out_path));
    return code;
  }
};

std::vector<double> parse_ladder(const std::string& text) {
  std::vector<double> ladder;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto comma = text.find(',', pos);
    const std::string tok = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
    ladder.push_back(std::stod(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return ladder;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certified Bohr-Rogosinski radii for bounded analytic functions"};
  app.require_subcommand(1);

  bohr::TablesOptions tables;
  Sink tables_sink;
  CLI::App* cmd_tab = app.add_subcommand("tables", "Certified radii tables per family and m");
  cmd_tab->add_option("--family", tables.families,
                      "Family: phi, psi, Phi, lambda, Lambda (repeatable; default all)");
  cmd_tab->add_option("--m", tables.m_range, "m or range, e.g. 3 or 1..5");
  cmd_tab->add_option("--k", tables.k, "Dilatation constant for lambda/Lambda");
  tables_sink.attach(cmd_tab);

  bohr::VerifyOptions verify;
  Sink verify_sink;
  CLI::App* cmd_ver = app.add_subcommand("verify", "Randomized sweep below the radius");
  cmd_ver->add_option("--family", verify.family, "Radius family or 'rogosinski'");
  cmd_ver->add_option("--m", verify.m, "Power index m");
  cmd_ver->add_option("--k", verify.k, "Dilatation constant");
  cmd_ver->add_option("--trials", verify.trials, "Number of sampled functions");
  cmd_ver->add_option("--r-fraction", verify.r_fraction, "Evaluate at r-fraction * radius");
  cmd_ver->add_option("--seed", verify.seed, "Deterministic sampling seed");
  cmd_ver->add_option("--kind", verify.kind, "Sample kind: mobius, blaschke, polynomial");
  cmd_ver->add_option("--order", verify.coeff_order, "Truncation order of sampled series");
  cmd_ver->add_option("--n-max", verify.n_max, "Largest partial-sum index (rogosinski)");
  verify_sink.attach(cmd_ver);

  bohr::EvaluateOptions evaluate;
  Sink evaluate_sink;
  CLI::App* cmd_eva = app.add_subcommand("evaluate", "Evaluate one functional at (f, m, r)");
  cmd_eva->add_option("--functional", evaluate.functional, "A, B, C, D, E or rogosinski");
  cmd_eva->add_option("--mobius-a", evaluate.mobius_a, "Use the Mobius witness with this a");
  cmd_eva->add_option("--sign", evaluate.mobius_sign, "Mobius sign (+1 or -1)");
  cmd_eva->add_option("--coeff-file", evaluate.coeff_file,
                      "Coefficient file: one `re im` pair per line, first line a_0");
  cmd_eva->add_option("--tail", evaluate.tail,
                      "Tail envelope scale,ratio for coefficient files");
  cmd_eva->add_option("--m", evaluate.m, "Power index m");
  cmd_eva->add_option("--r", evaluate.r, "Radius r in [0,1)");
  cmd_eva->add_option("--z", evaluate.z, "Evaluation point re or re,im (rogosinski)");
  cmd_eva->add_option("--n", evaluate.n, "Partial-sum index (rogosinski)");
  cmd_eva->add_option("--k", evaluate.k, "Dilatation constant (D/E)");
  cmd_eva->add_option("--lambda", evaluate.lambda, "Harmonic scale in (0,1] (D/E)");
  cmd_eva->add_option("--order", evaluate.order, "Truncation order for --mobius-a");
  evaluate_sink.attach(cmd_eva);

  bohr::SharpnessOptions sharp;
  Sink sharp_sink;
  std::string ladder_text;
  CLI::App* cmd_sha = app.add_subcommand("sharpness", "Extremal probe above the radius");
  cmd_sha->add_option("--family", sharp.family, "Radius family");
  cmd_sha->add_option("--m", sharp.m, "Power index m");
  cmd_sha->add_option("--k", sharp.k, "Dilatation constant");
  cmd_sha->add_option("--lambda", sharp.lambda, "Harmonic scale in (0,1]; default k");
  cmd_sha->add_option("--r-multiplier", sharp.r_multiplier, "Probe at r-multiplier * radius");
  cmd_sha->add_option("--a-ladder", ladder_text, "Comma list of a values in (0,1)");
  sharp_sink.attach(cmd_sha);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    bohr::OutputRecord record;
    if (cmd_tab->parsed()) return tables_sink.write(record, bohr::cmd_tables(tables, record));
    if (cmd_ver->parsed()) return verify_sink.write(record, bohr::cmd_verify(verify, record));
    if (cmd_eva->parsed())
      return evaluate_sink.write(record, bohr::cmd_evaluate(evaluate, record));
    if (cmd_sha->parsed()) {
      if (!ladder_text.empty()) sharp.a_ladder = parse_ladder(ladder_text);
      return sharp_sink.write(record, bohr::cmd_sharpness(sharp, record));
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
