#include "dompoly/scan.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "dompoly/binomial.hpp"
#include "dompoly/recurrences.hpp"
#include "dompoly/sequence_checks.hpp"

namespace dompoly {

namespace {

std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  return (a + b - 1) / b;
}

// Facts that hold for every domination polynomial in both families; a breach
// here is an evaluator bug, not a scan finding.
void check_row_consistency(Family family, std::int64_t n, std::int64_t ell,
                           const IntPolynomial& p) {
  if (p.degree() != n || p[static_cast<std::size_t>(n)] != 1) {
    throw std::logic_error("domination polynomial must be monic of degree n");
  }
  if (n >= 1 && p[0] != 0) {
    throw std::logic_error("nonempty graphs have no size-0 dominating set");
  }
  if (p.has_negative_coefficient()) {
    throw std::logic_error("domination polynomial went negative");
  }
  const std::int64_t support = p.min_support();
  if (support != ceil_div(n, 2 * ell + 1)) {
    std::ostringstream msg;
    msg << "domination number mismatch: family=" << family_name(family)
        << " n=" << n << " ell=" << ell << " min_support=" << support;
    throw std::logic_error(msg.str());
  }
  for (std::int64_t k = support; k <= n; ++k) {
    if (p[static_cast<std::size_t>(k)] <= 0) {
      throw std::logic_error("domination polynomial support has a gap");
    }
  }
}

std::vector<ScanRow> scan_one_ell(const ScanOptions& options, std::int64_t ell,
                                  const BinomialTable& binomials) {
  std::vector<ScanRow> rows;
  rows.reserve(options.n_max);
  SlidingWindowSeries series = power_series(options.family, ell, options.n_max);
  series.next();  // n = 0 is not a grid row
  for (std::int64_t n = 1; n <= options.n_max; ++n) {
    const IntPolynomial& p = series.next();
    check_row_consistency(options.family, n, ell, p);

    ScanRow row;
    row.n = n;
    row.ell = ell;
    row.degree = p.degree();
    row.min_support = p.min_support();
    const auto coeffs = std::span<const mpz_class>(p.coefficients());
    const ModeReport mode = check_unimodal(coeffs);
    row.unimodal = mode.unimodal;
    row.mode_lo = mode.mode_lo;
    row.mode_hi = mode.mode_hi;
    if (mode.unimodal &&
        !(row.min_support <= row.mode_lo && row.mode_lo <= row.mode_hi &&
          row.mode_hi <= row.degree)) {
      throw std::logic_error("mode interval escaped [min_support, degree]");
    }
    if (options.checks.log_concave) {
      row.log_concave = check_log_concave(coeffs).holds;
    }
    if (options.checks.ultra_log_concave) {
      row.ultra_log_concave =
          check_ultra_log_concave(coeffs, static_cast<std::size_t>(n),
                                  binomials.row(static_cast<std::size_t>(n)))
              .holds;
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

ScanResult scan_family_grid(const ScanOptions& options) {
  if (options.n_max < 1 || options.ell_max < 1) {
    throw std::invalid_argument("scan needs n_max >= 1 and ell_max >= 1");
  }
  const BinomialTable binomials(static_cast<std::size_t>(options.n_max));

  std::vector<std::vector<ScanRow>> by_ell(options.ell_max + 1);
  std::atomic<std::int64_t> next_ell{1};
  std::exception_ptr worker_error;
  std::mutex error_mutex;

  auto worker = [&]() {
    try {
      while (true) {
        const std::int64_t ell = next_ell.fetch_add(1);
        if (ell > options.ell_max) break;
        by_ell[ell] = scan_one_ell(options, ell, binomials);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!worker_error) worker_error = std::current_exception();
    }
  };

  const int jobs = std::max(1, options.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  if (worker_error) std::rethrow_exception(worker_error);

  ScanResult result;
  result.rows.reserve(static_cast<std::size_t>(options.n_max) *
                      static_cast<std::size_t>(options.ell_max));
  for (std::int64_t ell = 1; ell <= options.ell_max; ++ell) {
    for (const ScanRow& row : by_ell[ell]) {
      const bool violated =
          (options.checks.unimodal && !row.unimodal) ||
          (options.checks.log_concave && !row.log_concave) ||
          (options.checks.ultra_log_concave && !row.ultra_log_concave);
      if (violated) ++result.violations;
      result.rows.push_back(row);
    }
  }
  return result;
}

void write_scan_csv(std::ostream& out, Family family,
                    std::span<const ScanRow> rows) {
  out << "family,n,ell,degree,min_support,mode_lo,mode_hi,unimodal,"
         "log_concave,ultra_log_concave\n";
  const char* name = family_name(family);
  for (const ScanRow& r : rows) {
    out << name << ',' << r.n << ',' << r.ell << ',' << r.degree << ','
        << r.min_support << ',' << r.mode_lo << ',' << r.mode_hi << ','
        << (r.unimodal ? "true" : "false") << ','
        << (r.log_concave ? "true" : "false") << ','
        << (r.ultra_log_concave ? "true" : "false") << '\n';
  }
}

void write_scan_jsonl(std::ostream& out, Family family,
                      std::span<const ScanRow> rows) {
  const char* name = family_name(family);
  for (const ScanRow& r : rows) {
    out << "{\"family\":\"" << name << "\",\"n\":" << r.n
        << ",\"ell\":" << r.ell << ",\"degree\":" << r.degree
        << ",\"min_support\":" << r.min_support << ",\"mode_lo\":" << r.mode_lo
        << ",\"mode_hi\":" << r.mode_hi
        << ",\"unimodal\":" << (r.unimodal ? "true" : "false")
        << ",\"log_concave\":" << (r.log_concave ? "true" : "false")
        << ",\"ultra_log_concave\":" << (r.ultra_log_concave ? "true" : "false")
        << "}\n";
  }
}

}  // namespace dompoly
