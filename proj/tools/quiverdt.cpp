#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "qdt/commands.hpp"
#include "qdt/errors.hpp"
#include "qdt/kernels.hpp"

int main(int argc, char** argv) {
  CLI::App app{"quiverdt: motivic DT invariants of symmetric quivers"};
  app.require_subcommand(1, 1);

  std::string config_path;
  std::string format = "table";
  std::string out_path;
  bool strict = false;
  bool normalized = false;
  bool serial = false;

  const std::pair<const char*, const char*> commands[] = {
      {"dt", "DT invariants over the box, with integrality and positivity audits"},
      {"framed", "framed (PT-DT) generating series"},
      {"local", "local DT invariants from a Gram matrix"},
      {"betti", "IC Betti numbers of the moduli space for d"},
      {"nullcone", "nullcone dimension bound against thin decompositions"},
      {"oracle", "finite field point counts against motive evaluations"},
      {"check", "reconstruction, integrality, positivity and unimodality checks"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("config", config_path, "job config (.toml or .json)")->required()->check(CLI::ExistingFile);
    sub->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv", "table"}));
    sub->add_option("--out", out_path, "write output to FILE instead of stdout");
    sub->add_flag("--strict", strict, "audit failures exit with code 3");
    sub->add_flag("--serial", serial, "use the serial reference kernels");
    if (std::string(name) == "framed") sub->add_flag("--normalized", normalized, "normalized series (even framing)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : qdt::exit_codes::usage;
  }

  qdt::configure_threads_from_env();
  const std::string command = app.get_subcommands().front()->get_name();

  qdt::RunResult result;
  try {
    qdt::RunOptions opts;
    opts.format = qdt::parse_output_format(format);
    opts.strict = strict;
    opts.normalized = normalized;
    opts.exec = serial ? qdt::Exec::serial : qdt::Exec::parallel;
    result = qdt::run(command, qdt::load_config(config_path), opts);
  } catch (const std::exception& e) {
    std::cerr << qdt::error_kind(e) << ": " << e.what() << "\n";
    return qdt::exit_codes::usage;
  }

  if (!result.output.empty()) {
    if (out_path.empty()) {
      std::cout << result.output;
    } else {
      std::ofstream out(out_path);
      if (!out) {
        std::cerr << "cannot write '" << out_path << "'\n";
        return qdt::exit_codes::usage;
      }
      out << result.output;
    }
  }
  if (!result.diagnostics.empty()) std::cerr << result.diagnostics << "\n";
  return result.exit_code;
}
