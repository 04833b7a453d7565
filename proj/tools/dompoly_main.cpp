// Command-line front end: exact domination polynomials of path and cycle
// powers, cross-validation suites, and grid scans of coefficient-sequence
// properties (unimodality, log-concavity, ultra-log-concavity).

#include <cstdint>
#include <exception>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "dompoly/cli_commands.hpp"
#include "dompoly/graph_spec.hpp"

namespace {

const std::map<std::string, dompoly::Family> kFamilies{
    {"path", dompoly::Family::PathPower},
    {"cycle", dompoly::Family::CyclePower},
};

const std::map<std::string, dompoly::ComputeMethod> kMethods{
    {"A", dompoly::ComputeMethod::SchemeA},
    {"B", dompoly::ComputeMethod::SchemeB},
    {"relaxed", dompoly::ComputeMethod::Relaxed},
    {"oracle", dompoly::ComputeMethod::Oracle},
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "dompoly — exact domination polynomials of powers of paths and cycles"};
  app.require_subcommand(1);

  dompoly::ComputeOptions compute_options;
  CLI::App* compute = app.add_subcommand(
      "compute", "Compute one domination polynomial and print it as JSON");
  compute
      ->add_option("--family", compute_options.family, "Graph family")
      ->required()
      ->transform(CLI::CheckedTransformer(kFamilies, CLI::ignore_case));
  compute->add_option("--n", compute_options.n, "Vertex count (>= 0)")
      ->required();
  compute->add_option("--ell", compute_options.ell, "Graph power (>= 1)")
      ->required();
  compute
      ->add_option("--method", compute_options.method,
                   "Evaluation route: A (default), B, relaxed, oracle")
      ->transform(CLI::CheckedTransformer(kMethods));

  dompoly::VerifyOptions verify_options;
  std::int64_t verify_n_max = -1;
  std::int64_t verify_ell_max = -1;
  CLI::App* verify = app.add_subcommand(
      "verify", "Run a cross-validation suite and report pass/fail");
  verify
      ->add_option("--suite", verify_options.suite,
                   "One of: routes, oracle, identities, theorem6")
      ->required()
      ->check(CLI::IsMember({"routes", "oracle", "identities", "theorem6"}));
  verify->add_option("--n-max", verify_n_max, "Override the suite's n bound")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--ell-max", verify_ell_max,
                     "Override the suite's ell bound")
      ->check(CLI::NonNegativeNumber);

  dompoly::ScanCommandOptions scan_options;
  bool full_grid = false;
  CLI::App* scan = app.add_subcommand(
      "scan", "Scan an (n, ell) grid and emit one verdict row per cell");
  scan->add_option("--family", scan_options.family, "Graph family")
      ->required()
      ->transform(CLI::CheckedTransformer(kFamilies, CLI::ignore_case));
  CLI::Option* n_max_opt =
      scan->add_option("--n-max", scan_options.n_max, "Largest n (default 150)");
  CLI::Option* ell_max_opt = scan->add_option(
      "--ell-max", scan_options.ell_max, "Largest ell (default 150)");
  scan->add_option("--out", scan_options.out_path,
                   "Output file (default: rows to stdout)");
  scan->add_option("--format", scan_options.format, "csv (default) or jsonl")
      ->check(CLI::IsMember({"csv", "jsonl"}));
  scan->add_option("--jobs", scan_options.jobs,
                   "Worker threads (output is identical for any value)")
      ->check(CLI::PositiveNumber);
  scan->add_flag("--full-grid", full_grid,
                 "Use the 500x500 grid (unless --n-max/--ell-max say "
                 "otherwise); takes minutes instead of seconds");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return dompoly::kExitUsage;
  }

  try {
    if (compute->parsed()) {
      return dompoly::run_compute(compute_options, std::cout, std::cerr);
    }
    if (verify->parsed()) {
      if (verify_n_max >= 0) verify_options.n_max = verify_n_max;
      if (verify_ell_max >= 0) verify_options.ell_max = verify_ell_max;
      return dompoly::run_verify(verify_options, std::cout, std::cerr);
    }
    if (full_grid) {
      if (n_max_opt->count() == 0) scan_options.n_max = 500;
      if (ell_max_opt->count() == 0) scan_options.ell_max = 500;
    }
    return dompoly::run_scan(scan_options, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return dompoly::kExitUsage;
  }
}
