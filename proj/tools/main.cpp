#include <iostream>

#include <CLI11.hpp>

#include "morphequiv/cli.hpp"

int main(int argc, char** argv) {
  namespace mc = morphequiv::cli;
  CLI::App app{"morphequiv: parametrized morphism equivalence, group-action orbits and Bessel-family comparison"};
  mc::RunConfig cfg;
  std::string verb_flag;
  std::string verb_pos;
  std::string format = "text";
  double tol_rank = 0;
  double tol_psd = 0;
  std::vector<std::string> positional_inputs;

  app.add_option("command", verb_pos, "validate | equiv | classes | orbit-check | preord-check | frame | bridge");
  app.add_option("files", positional_inputs, "Instance files");
  app.add_option("--verb", verb_flag, "Verb (alternative to the positional form)");
  app.add_option("-i,--input", cfg.inputs, "Instance file (repeatable)");
  auto* rank_opt = app.add_option("--tol-rank", tol_rank, "Relative eigenvalue threshold for rank (default 1e-10)");
  auto* psd_opt = app.add_option("--tol-psd", tol_psd, "Relative PSD clamp (default 1e-9)");
  app.add_option("--seed", cfg.seed, "Seed for probe vectors (default 0)");
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("-o,--out", cfg.out, "Write the report to this file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : mc::exit_input_error;
  }

  if (!verb_flag.empty() && !verb_pos.empty()) {
    // With --verb given, a leading positional is an input file.
    positional_inputs.insert(positional_inputs.begin(), verb_pos);
    verb_pos.clear();
  }
  cfg.verb = verb_flag.empty() ? verb_pos : verb_flag;
  cfg.inputs.insert(cfg.inputs.end(), positional_inputs.begin(), positional_inputs.end());
  if (*rank_opt) cfg.tol_rank = tol_rank;
  if (*psd_opt) cfg.tol_psd = tol_psd;
  cfg.format = format == "json" ? mc::Format::json : mc::Format::text;

  const mc::RunResult r = mc::run(cfg);
  if (!r.error.empty()) std::cerr << "morphequiv: " << r.error << '\n';
  if (!cfg.out) std::cout << r.report;
  return r.exit_code;
}
