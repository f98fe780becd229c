#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "adl/cli/commands.hpp"

int main(int argc, char** argv) {
  using adl::cli::CliConfig;
  CliConfig cfg;
  CLI::App app{"adcalc: typecheck, run and differentiate .adl programs"};
  app.require_subcommand(1);

  std::string mode, k, input, out, entry;

  auto* typecheck = app.add_subcommand("typecheck", "Typecheck a file and print the type of each entry");
  typecheck->add_option("file", cfg.path, "Source file")->required();

  auto* eval = app.add_subcommand("eval", "Evaluate the main term, or apply an entry to --input");
  eval->add_option("file", cfg.path, "Source file")->required();
  eval->add_option("--input", input, "Argument as a value literal");
  eval->add_option("--entry", entry, "Definition to use instead of the main term");

  auto* derive = app.add_subcommand("derive", "Apply the forward or reverse macro and print the result");
  derive->add_option("file", cfg.path, "Source file")->required();
  derive->add_option("--mode", mode, "fwd or rev")->required()->check(CLI::IsMember({"fwd", "rev"}));
  derive->add_option("--k", k, "Tangent width (default 1)");
  derive->add_flag("--wrapped", cfg.wrapped, "Emit gradient programs: wrap, reverse macro, unwrap");
  derive->add_option("--entry", entry, "Only this definition");

  auto* grad = app.add_subcommand("grad", "Value and Jacobian of a function at --input");
  grad->add_option("file", cfg.path, "Source file")->required();
  grad->add_option("--input", input, "Argument as a value literal")->required();
  grad->add_option("--k", k, "Tangent width, or 'auto' for the input's real-slot count (default)");
  grad->add_option("--mode", mode, "rev (default) or fwd")->check(CLI::IsMember({"fwd", "rev"}));
  grad->add_option("--entry", entry, "Definition to use instead of the main term");
  grad->add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* check = app.add_subcommand("check", "Run the correctness suite over a corpus directory");
  check->add_option("dir", cfg.path, "Corpus directory")->required();
  check->add_option("--seed", cfg.seed, "Random seed (default 42)");
  check->add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  for (auto* sub : {typecheck, eval, derive, grad, check}) sub->add_option("--out", out, "Write output to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n" << "run 'adcalc --help' for usage\n";
    return adl::cli::kFailure;
  }

  cfg.command = app.get_subcommands().front()->get_name();
  if (!mode.empty()) cfg.mode = mode;
  if (!k.empty()) cfg.k = k;
  if (!input.empty()) cfg.input = input;
  if (!entry.empty()) cfg.entry = entry;

  if (out.empty()) return adl::cli::run(cfg, std::cout, std::cerr);
  std::ostringstream buffer;
  int status = adl::cli::run(cfg, buffer, std::cerr);
  std::ofstream file(out, std::ios::binary);
  if (!file) {
    std::cerr << "error: cannot write '" << out << "'\n";
    return adl::cli::kFailure;
  }
  file << buffer.str();
  return status;
}
