#include "dompoly/cli_commands.hpp"

#include <fstream>
#include <ostream>

#include <json.hpp>

#include "dompoly/oracle.hpp"
#include "dompoly/recurrences.hpp"
#include "dompoly/verify.hpp"

namespace dompoly {

namespace {

const char* method_name(ComputeMethod m) {
  switch (m) {
    case ComputeMethod::SchemeA:
      return "A";
    case ComputeMethod::SchemeB:
      return "B";
    case ComputeMethod::Relaxed:
      return "relaxed";
    case ComputeMethod::Oracle:
      return "oracle";
  }
  return "?";
}

}  // namespace

int run_compute(const ComputeOptions& options, std::ostream& out,
                std::ostream& err) {
  const auto [family, n, ell, method] = options;
  if (n < 0 || ell < 1) {
    err << "compute: need n >= 0 and ell >= 1\n";
    return kExitUsage;
  }
  if (method == ComputeMethod::Oracle && n > kMaxBruteForceVertices) {
    err << "compute: method oracle enumerates subsets and needs n <= 26\n";
    return kExitUsage;
  }
  if (method == ComputeMethod::SchemeB && family != Family::PathPower) {
    err << "compute: method B applies to path powers only\n";
    return kExitUsage;
  }
  if (method == ComputeMethod::Relaxed) {
    if (family != Family::PathPower) {
      err << "compute: method relaxed applies to path powers only\n";
      return kExitUsage;
    }
    if (n < ell + 1) {
      err << "compute: method relaxed needs n >= ell+1\n";
      return kExitUsage;
    }
  }

  IntPolynomial poly;
  switch (method) {
    case ComputeMethod::SchemeA:
      poly = family == Family::PathPower ? path_domination_poly_a(n, ell)
                                         : cycle_domination_poly(n, ell);
      break;
    case ComputeMethod::SchemeB:
      poly = path_domination_poly_b(n, ell);
      break;
    case ComputeMethod::Relaxed:
      poly = path_domination_poly_via_relaxed(n, ell);
      break;
    case ComputeMethod::Oracle:
      poly = brute_domination_poly(build_power_graph({family, n, ell}));
      break;
  }

  nlohmann::ordered_json doc;
  doc["family"] = family_name(family);
  doc["n"] = n;
  doc["ell"] = ell;
  doc["method"] = method_name(method);
  nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
  for (const mpz_class& c : poly.coefficients()) coeffs.push_back(c.get_str());
  doc["coefficients"] = std::move(coeffs);
  out << doc.dump() << '\n';
  return kExitOk;
}

int run_verify(const VerifyOptions& options, std::ostream& out,
               std::ostream& err) {
  SuiteResult result;
  if (options.suite == "routes") {
    result = verify_routes(options.n_max.value_or(300),
                           options.ell_max.value_or(20));
  } else if (options.suite == "oracle") {
    const std::int64_t n_max = options.n_max.value_or(18);
    if (n_max > kMaxBruteForceVertices) {
      err << "verify: suite oracle needs n-max <= 26\n";
      return kExitUsage;
    }
    result = verify_oracle(n_max);
  } else if (options.suite == "identities") {
    result = verify_identities(options.ell_max.value_or(30));
  } else if (options.suite == "theorem6") {
    result = verify_certifier();
  } else {
    err << "verify: unknown suite '" << options.suite
        << "' (expected routes|oracle|identities|theorem6)\n";
    return kExitUsage;
  }

  out << "suite " << options.suite << ": "
      << (result.passed ? "PASS" : "FAIL") << " (" << result.checks
      << " checks)";
  if (!result.detail.empty()) out << " — " << result.detail;
  out << '\n';
  return result.passed ? kExitOk : kExitPropertyFailure;
}

int run_scan(const ScanCommandOptions& options, std::ostream& out,
             std::ostream& err) {
  if (options.n_max < 1 || options.ell_max < 1) {
    err << "scan: need n-max >= 1 and ell-max >= 1\n";
    return kExitUsage;
  }
  if (options.format != "csv" && options.format != "jsonl") {
    err << "scan: format must be csv or jsonl\n";
    return kExitUsage;
  }

  ScanOptions scan_options;
  scan_options.family = options.family;
  scan_options.n_max = options.n_max;
  scan_options.ell_max = options.ell_max;
  scan_options.jobs = options.jobs;
  const ScanResult result = scan_family_grid(scan_options);

  std::ofstream file;
  const bool to_file = !options.out_path.empty();
  if (to_file) {
    file.open(options.out_path, std::ios::binary);
    if (!file) {
      err << "scan: cannot open output file '" << options.out_path << "'\n";
      return kExitUsage;
    }
  }
  std::ostream& rows_out = to_file ? file : out;
  if (options.format == "csv") {
    write_scan_csv(rows_out, options.family, result.rows);
  } else {
    write_scan_jsonl(rows_out, options.family, result.rows);
  }
  rows_out.flush();
  if (to_file && !file) {
    err << "scan: write failed for '" << options.out_path << "'\n";
    return kExitUsage;
  }

  // Summary goes to stdout when rows went to a file, otherwise to stderr so
  // piped row output stays clean.
  std::ostream& summary = to_file ? out : err;
  summary << "scan family=" << family_name(options.family)
          << " rows=" << result.rows.size()
          << " violations=" << result.violations << '\n';
  return result.violations == 0 ? kExitOk : kExitPropertyFailure;
}

}  // namespace dompoly
