// Command-line front end: solve, check, spectrum, demo.

#include <CLI11.hpp>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "pstein/cli.hpp"
#include "pstein/solvers.hpp"

namespace {

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("PERIODIC_STEIN_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "warning: ignoring unparsable PERIODIC_STEIN_SEED '" << env
                << "'\n";
    }
  }
  return 12345;
}

/// Replays the subcommand output into --out when given, stdout otherwise.
int write_report(const std::string& report, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << report;
    return pstein::cli::kExitOk;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open '" << out_path << "' for writing\n";
    return pstein::cli::kExitError;
  }
  out << report;
  return pstein::cli::kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"periodic matrix equation toolkit"};
  app.require_subcommand(1);

  const std::map<std::string, pstein::SolveMethod> method_names{
      {"direct", pstein::SolveMethod::kDirect},
      {"smith", pstein::SolveMethod::kSmith},
      {"smith-l", pstein::SolveMethod::kSmithEll},
      {"r-smith", pstein::SolveMethod::kRSmith},
  };

  std::string input_path;
  std::string out_path;
  pstein::cli::SolveOverrides overrides;
  std::uint64_t seed = default_seed();

  CLI::App* solve = app.add_subcommand(
      "solve", "solve the equation in a JSON document and print the report");
  solve->add_option("file", input_path, "equation document")->required();
  solve
      ->add_option("--method", overrides.method,
                   "direct, smith, smith-l or r-smith")
      ->transform(CLI::CheckedTransformer(method_names, CLI::ignore_case));
  solve->add_option("--tol", overrides.tol,
                    "stop tolerance (iterative) or consistency gate (multiterm)");
  solve->add_option("--max-iter", overrides.max_iter, "iteration budget");
  solve->add_option("--ell", overrides.ell, "fused steps for smith-l");
  solve->add_option("--r", overrides.r, "power for r-smith (>= 2)");
  solve->add_option("--out", out_path, "write the report here instead of stdout");

  CLI::App* check = app.add_subcommand(
      "check", "verify operator laws and unique-solvability conditions");
  check->add_option("file", input_path, "equation document")->required();
  check->add_option("--seed", seed, "seed for the randomized operator checks");
  check->add_option("--out", out_path, "write the report here instead of stdout");

  CLI::App* spectrum = app.add_subcommand(
      "spectrum", "print the spectra governing convergence and uniqueness");
  spectrum->add_option("file", input_path, "equation document")->required();
  spectrum->add_option("--out", out_path,
                       "write the report here instead of stdout");

  std::string demo_name;
  CLI::App* demo =
      app.add_subcommand("demo", "run a named walkthrough with assertions");
  demo->add_option("name", demo_name, "one of: averaging, perm-similarity, "
                                      "anti-transpose, multiterm")
      ->required();
  demo->add_option("--seed", seed, "seed for the generated instances");
  demo->add_option("--out", out_path,
                   "write the transcript here instead of stdout");

  CLI11_PARSE(app, argc, argv);

  if (demo->parsed()) {
    std::ostringstream report;
    const int code = pstein::cli::run_demo(demo_name, seed, report, std::cerr);
    const int write_code = write_report(report.str(), out_path);
    return code != pstein::cli::kExitOk ? code : write_code;
  }

  const std::optional<std::string> text = read_file(input_path);
  if (!text) {
    std::cerr << "error: cannot read '" << input_path << "'\n";
    return pstein::cli::kExitError;
  }

  std::ostringstream report;
  int code = pstein::cli::kExitError;
  if (solve->parsed()) {
    code = pstein::cli::run_solve(*text, overrides, report, std::cerr);
  } else if (check->parsed()) {
    code = pstein::cli::run_check(*text, seed, report, std::cerr);
  } else if (spectrum->parsed()) {
    code = pstein::cli::run_spectrum(*text, report, std::cerr);
  }
  const int write_code = write_report(report.str(), out_path);
  return code != pstein::cli::kExitOk ? code : write_code;
}
