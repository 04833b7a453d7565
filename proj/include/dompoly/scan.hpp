#ifndef DOMPOLY_SCAN_HPP
#define DOMPOLY_SCAN_HPP

#include <cstdint>
#include <ostream>
#include <span>
#include <vector>

#include "dompoly/graph_spec.hpp"

namespace dompoly {

/// One grid cell: the per-(n, ell) verdicts for a family. mode_lo/mode_hi
/// are -1 when the sequence is not unimodal (never seen in practice).
struct ScanRow {
  std::int64_t n = 0;
  std::int64_t ell = 0;
  std::int64_t degree = 0;
  std::int64_t min_support = 0;
  std::int64_t mode_lo = 0;
  std::int64_t mode_hi = 0;
  bool unimodal = true;
  bool log_concave = true;
  bool ultra_log_concave = true;
};

struct ScanChecks {
  bool unimodal = true;
  bool log_concave = true;
  bool ultra_log_concave = true;
};

struct ScanOptions {
  Family family = Family::PathPower;
  std::int64_t n_max = 150;
  std::int64_t ell_max = 150;
  int jobs = 1;
  ScanChecks checks;
};

struct ScanResult {
  std::vector<ScanRow> rows;  // sorted by (ell, n); n and ell start at 1
  std::uint64_t violations = 0;  // rows with any enabled check false
};

/// Evaluates the whole (n, ell) grid for one family. Rows within one ell are
/// produced by a single incremental series sweep; distinct ell rows may be
/// computed by up to `jobs` worker threads. The result is identical, byte
/// for byte once serialized, for every jobs value: work items are assembled
/// into preallocated slots and emitted in sorted order.
ScanResult scan_family_grid(const ScanOptions& options);

/// Fixed header: family,n,ell,degree,min_support,mode_lo,mode_hi,unimodal,
/// log_concave,ultra_log_concave. Booleans serialize as true/false.
void write_scan_csv(std::ostream& out, Family family,
                    std::span<const ScanRow> rows);

/// One JSON object per line, keys in the CSV column order.
void write_scan_jsonl(std::ostream& out, Family family,
                      std::span<const ScanRow> rows);

}  // namespace dompoly

#endif  // DOMPOLY_SCAN_HPP
