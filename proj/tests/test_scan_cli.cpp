#include <cstdio>
#include <sstream>
#include <string>

#include <doctest.h>

#include "dompoly/cli_commands.hpp"
#include "dompoly/scan.hpp"
#include "dompoly/verify.hpp"

namespace dompoly {
namespace {

std::string scan_to_string(const ScanOptions& options, const char* format) {
  const ScanResult result = scan_family_grid(options);
  std::ostringstream out;
  if (std::string(format) == "csv") {
    write_scan_csv(out, options.family, result.rows);
  } else {
    write_scan_jsonl(out, options.family, result.rows);
  }
  return out.str();
}

TEST_CASE("scan emits the pinned CSV") {
  ScanOptions options;
  options.family = Family::CyclePower;
  options.n_max = 4;
  options.ell_max = 1;
  const std::string expected =
      "family,n,ell,degree,min_support,mode_lo,mode_hi,unimodal,log_concave,"
      "ultra_log_concave\n"
      "cycle,1,1,1,1,1,1,true,true,true\n"
      "cycle,2,1,2,1,1,1,true,true,true\n"
      "cycle,3,1,3,1,1,2,true,true,true\n"
      "cycle,4,1,4,2,2,2,true,true,true\n";
  CHECK(scan_to_string(options, "csv") == expected);
}

TEST_CASE("scan emits the pinned JSONL") {
  ScanOptions options;
  options.family = Family::PathPower;
  options.n_max = 1;
  options.ell_max = 1;
  const std::string expected =
      "{\"family\":\"path\",\"n\":1,\"ell\":1,\"degree\":1,\"min_support\":1,"
      "\"mode_lo\":1,\"mode_hi\":1,\"unimodal\":true,\"log_concave\":true,"
      "\"ultra_log_concave\":true}\n";
  CHECK(scan_to_string(options, "jsonl") == expected);
}

TEST_CASE("scan output is identical across worker counts") {
  for (const char* format : {"csv", "jsonl"}) {
    std::string baseline;
    for (int jobs : {1, 2, 5}) {
      ScanOptions options;
      options.family = Family::PathPower;
      options.n_max = 40;
      options.ell_max = 13;
      options.jobs = jobs;
      const std::string rendered = scan_to_string(options, format);
      if (jobs == 1) {
        baseline = rendered;
      } else {
        CHECK(rendered == baseline);
      }
    }
  }
}

TEST_CASE("scan row counts and grid bounds") {
  ScanOptions options;
  options.family = Family::PathPower;
  options.n_max = 20;
  options.ell_max = 5;
  const ScanResult result = scan_family_grid(options);
  CHECK(result.rows.size() == 100);
  CHECK(result.violations == 0);
  CHECK(result.rows.front().ell == 1);
  CHECK(result.rows.front().n == 1);
  CHECK(result.rows.back().ell == 5);
  CHECK(result.rows.back().n == 20);
}

TEST_CASE("compute prints exact JSON") {
  std::ostringstream out, err;
  ComputeOptions options;
  options.family = Family::PathPower;
  options.n = 3;
  options.ell = 1;
  CHECK(run_compute(options, out, err) == kExitOk);
  CHECK(out.str() ==
        "{\"family\":\"path\",\"n\":3,\"ell\":1,\"method\":\"A\","
        "\"coefficients\":[\"0\",\"1\",\"3\",\"1\"]}\n");
  CHECK(err.str().empty());
}

TEST_CASE("compute covers every method") {
  auto run = [](Family family, std::int64_t n, std::int64_t ell,
                ComputeMethod method) {
    std::ostringstream out, err;
    ComputeOptions options{family, n, ell, method};
    const int code = run_compute(options, out, err);
    return std::pair<int, std::string>(code, out.str());
  };
  const auto [a_code, a_out] =
      run(Family::CyclePower, 4, 1, ComputeMethod::SchemeA);
  CHECK(a_code == kExitOk);
  CHECK(a_out.find("[\"0\",\"0\",\"6\",\"4\",\"1\"]") != std::string::npos);

  const auto [b_code, b_out] =
      run(Family::PathPower, 4, 1, ComputeMethod::SchemeB);
  CHECK(b_code == kExitOk);
  CHECK(b_out.find("[\"0\",\"0\",\"4\",\"4\",\"1\"]") != std::string::npos);

  const auto [r_code, r_out] =
      run(Family::PathPower, 4, 1, ComputeMethod::Relaxed);
  CHECK(r_code == kExitOk);
  CHECK(r_out.find("[\"0\",\"0\",\"4\",\"4\",\"1\"]") != std::string::npos);

  const auto [o_code, o_out] =
      run(Family::CyclePower, 5, 2, ComputeMethod::Oracle);
  CHECK(o_code == kExitOk);
  CHECK(o_out.find("[\"0\",\"5\",\"10\",\"10\",\"5\",\"1\"]") !=
        std::string::npos);

  const auto [empty_code, empty_out] =
      run(Family::PathPower, 0, 5, ComputeMethod::SchemeA);
  CHECK(empty_code == kExitOk);
  CHECK(empty_out.find("[\"1\"]") != std::string::npos);
}

TEST_CASE("compute rejects invalid combinations with exit code 2") {
  auto code = [](Family family, std::int64_t n, std::int64_t ell,
                 ComputeMethod method) {
    std::ostringstream out, err;
    ComputeOptions options{family, n, ell, method};
    const int result = run_compute(options, out, err);
    if (result != kExitOk) {
      CHECK_FALSE(err.str().empty());
      CHECK(out.str().empty());
    }
    return result;
  };
  CHECK(code(Family::PathPower, 27, 1, ComputeMethod::Oracle) == kExitUsage);
  CHECK(code(Family::CyclePower, 5, 1, ComputeMethod::SchemeB) == kExitUsage);
  CHECK(code(Family::CyclePower, 5, 1, ComputeMethod::Relaxed) == kExitUsage);
  CHECK(code(Family::PathPower, 3, 3, ComputeMethod::Relaxed) == kExitUsage);
  CHECK(code(Family::PathPower, -1, 1, ComputeMethod::SchemeA) == kExitUsage);
  CHECK(code(Family::PathPower, 3, 0, ComputeMethod::SchemeA) == kExitUsage);
  CHECK(code(Family::PathPower, 26, 1, ComputeMethod::Oracle) == kExitOk);
}

TEST_CASE("verify command reports and exits by suite outcome") {
  std::ostringstream out, err;
  VerifyOptions options;
  options.suite = "oracle";
  options.n_max = 10;
  CHECK(run_verify(options, out, err) == kExitOk);
  CHECK(out.str().find("suite oracle: PASS") == 0);

  std::ostringstream out2, err2;
  options.suite = "nonsense";
  CHECK(run_verify(options, out2, err2) == kExitUsage);
  CHECK_FALSE(err2.str().empty());
}

TEST_CASE("scan command writes files and summaries") {
  ScanCommandOptions options;
  options.family = Family::CyclePower;
  options.n_max = 6;
  options.ell_max = 2;
  options.format = "csv";
  options.out_path = "scan_test_output.csv";
  std::ostringstream out, err;
  CHECK(run_scan(options, out, err) == kExitOk);
  CHECK(out.str() == "scan family=cycle rows=12 violations=0\n");
  CHECK(err.str().empty());
  std::remove("scan_test_output.csv");

  ScanCommandOptions bad = options;
  bad.out_path = "no/such/dir/file.csv";
  std::ostringstream out3, err3;
  CHECK(run_scan(bad, out3, err3) == kExitUsage);

  ScanCommandOptions usage = options;
  usage.out_path.clear();
  usage.n_max = 0;
  std::ostringstream out4, err4;
  CHECK(run_scan(usage, out4, err4) == kExitUsage);
}

TEST_CASE("verify suite functions pass at reduced bounds") {
  CHECK(verify_routes(60, 4).passed);
  CHECK(verify_oracle(10).passed);
  CHECK(verify_identities(8).passed);
  CHECK(verify_monotone_bounds(60, 4).passed);
  CHECK(verify_ultra_log_concavity(30, 10, 2).passed);
}

TEST_CASE("mode structure suite reports the known first counterexample") {
  const SuiteResult result = verify_mode_structure(10, 2);
  CHECK_FALSE(result.passed);
  CHECK(result.detail.find("family=path n=6 ell=1") != std::string::npos);
}

}  // namespace
}  // namespace dompoly
