#ifndef DOMPOLY_CLI_COMMANDS_HPP
#define DOMPOLY_CLI_COMMANDS_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "dompoly/graph_spec.hpp"
#include "dompoly/scan.hpp"

namespace dompoly {

// Exit-code contract shared by all subcommands: 0 = success, 1 = a checked
// property failed, 2 = usage error or I/O failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitPropertyFailure = 1;
inline constexpr int kExitUsage = 2;

enum class ComputeMethod { SchemeA, SchemeB, Relaxed, Oracle };

struct ComputeOptions {
  Family family = Family::PathPower;
  std::int64_t n = 0;
  std::int64_t ell = 1;
  ComputeMethod method = ComputeMethod::SchemeA;
};

/// Prints {"family","n","ell","method","coefficients"} as one JSON document,
/// coefficients as exact decimal strings indexed by degree. Returns kExitUsage
/// (with a one-line diagnostic on `err`) for invalid combinations: oracle
/// needs n <= 26, scheme B and the relaxed route are path-only, and the
/// relaxed route needs n >= ell+1.
int run_compute(const ComputeOptions& options, std::ostream& out,
                std::ostream& err);

struct VerifyOptions {
  std::string suite;  // routes | oracle | identities | theorem6
  std::optional<std::int64_t> n_max;
  std::optional<std::int64_t> ell_max;
};

/// Runs one verification suite and prints a human-readable report.
int run_verify(const VerifyOptions& options, std::ostream& out,
               std::ostream& err);

struct ScanCommandOptions {
  Family family = Family::PathPower;
  std::int64_t n_max = 150;
  std::int64_t ell_max = 150;
  std::string format = "csv";  // csv | jsonl
  std::string out_path;        // empty = rows to stdout
  int jobs = 1;
};

/// Writes one row per grid cell (sorted by ell then n, independent of the
/// worker count) and a one-line summary. Returns kExitPropertyFailure when
/// any row reports a violated property, kExitUsage on I/O failure.
int run_scan(const ScanCommandOptions& options, std::ostream& out,
             std::ostream& err);

}  // namespace dompoly

#endif  // DOMPOLY_CLI_COMMANDS_HPP
