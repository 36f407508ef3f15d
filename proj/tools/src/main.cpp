#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "dkit/cli/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"dkit: Darboux integrability toolkit for polynomial vector fields"};
  app.set_help_flag("--help", "Print this help message and exit");
  std::string command, input, output;
  std::uint64_t seed = 0;
  double tol = 0;
  unsigned count = 0;
  std::string g, h;
  dkit::cli::CommandArgs args;

  app.add_option("command", command, "Analysis to run")->required()->check(CLI::IsMember(dkit::cli::command_names()));
  app.add_option("--input", input, "System spec (JSON)")->required();
  app.add_option("--output", output, "Report destination; stdout when omitted");
  auto* seed_opt = app.add_option("--seed", seed, "Random seed");
  auto* tol_opt = app.add_option("--tol", tol, "Numeric tolerance");
  app.add_option("--basis", args.basis, "Basis of W for extactic (comma separated)");
  app.add_option("--surface", args.surfaces, "Surface for cofactor (repeatable)");
  auto* g_opt = app.add_option("--g", g, "Exponential factor numerator");
  auto* h_opt = app.add_option("--h", h, "Exponential factor denominator");
  auto* count_opt = app.add_option("--count", count, "Number of samples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return dkit::cli::kInputError;
  }
  if (*seed_opt) args.seed = seed;
  if (*tol_opt) args.tol = tol;
  if (*g_opt) args.g = g;
  if (*h_opt) args.h = h;
  if (*count_opt) args.count = count;

  std::ifstream in(input);
  if (!in) {
    std::cerr << "dkit: cannot read " << input << "\n";
    return dkit::cli::kInputError;
  }
  std::stringstream text;
  text << in.rdbuf();

  const auto result = dkit::cli::run_safely(command, text.str(), args);
  if (result.report.contains("error")) std::cerr << "dkit: " << result.report["error"].get<std::string>() << "\n";
  const std::string doc = result.report.dump(2) + "\n";
  if (output.empty()) {
    std::cout << doc;
  } else {
    std::ofstream out(output);
    if (!out) {
      std::cerr << "dkit: cannot write " << output << "\n";
      return dkit::cli::kInputError;
    }
    out << doc;
  }
  return result.exit_code;
}
