#include "dompoly/oracle.hpp"

#include <bit>
#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace dompoly {

namespace {

// Tallies, by subset size, the subsets whose closed-neighborhood union
// contains `required`. Subsets are enumerated in increasing order of their
// characteristic mask; coverage comes from two precomputed half tables, so
// the inner loop is two loads, an or, a compare and a popcount.
IntPolynomial enumerate_covering_subsets(const SmallGraph& g,
                                         std::uint32_t required) {
  const int n = g.n;
  const int lo_bits = n < 13 ? n : 13;
  const int hi_bits = n - lo_bits;

  std::vector<std::uint32_t> cover_lo(std::size_t{1} << lo_bits, 0);
  for (std::uint32_t m = 1; m < cover_lo.size(); ++m) {
    const int i = std::countr_zero(m);
    cover_lo[m] = cover_lo[m & (m - 1)] | g.closed_adjacency[i];
  }
  std::vector<std::uint32_t> cover_hi(std::size_t{1} << hi_bits, 0);
  for (std::uint32_t m = 1; m < cover_hi.size(); ++m) {
    const int i = std::countr_zero(m) + lo_bits;
    cover_hi[m] = cover_hi[m & (m - 1)] | g.closed_adjacency[i];
  }

  // 64-bit tallies suffice: every count is at most C(26, 13) < 2^63.
  std::vector<std::uint64_t> tally(static_cast<std::size_t>(n) + 1, 0);
  const std::uint64_t lo_mask = (std::uint64_t{1} << lo_bits) - 1;
  const std::uint64_t end = std::uint64_t{1} << n;
  for (std::uint64_t m = 0; m < end; ++m) {
    const std::uint32_t cov = cover_lo[m & lo_mask] | cover_hi[m >> lo_bits];
    tally[std::popcount(m)] += ((cov & required) == required) ? 1 : 0;
  }

  std::vector<mpz_class> coeffs;
  coeffs.reserve(tally.size());
  for (std::uint64_t c : tally) coeffs.emplace_back(static_cast<unsigned long>(c));
  return IntPolynomial(std::move(coeffs));
}

void require_enumerable(int n) {
  if (n < 0 || n > kMaxBruteForceVertices) {
    throw std::invalid_argument(
        "brute-force enumeration supports 0 <= n <= 26 vertices");
  }
}

}  // namespace

SmallGraph build_power_graph(const GraphSpec& spec) {
  if (spec.ell < 1) throw std::invalid_argument("graph power ell must be >= 1");
  if (spec.n < 0 || spec.n > kMaxBruteForceVertices) {
    throw std::invalid_argument(
        "build_power_graph supports 0 <= n <= 26 vertices");
  }
  const int n = static_cast<int>(spec.n);
  SmallGraph g;
  g.n = n;
  g.adjacency.assign(n, 0);
  g.closed_adjacency.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      std::int64_t d = std::abs(i - j);
      if (spec.family == Family::CyclePower) d = std::min(d, spec.n - d);
      if (d <= spec.ell) g.adjacency[i] |= std::uint32_t{1} << j;
    }
    g.closed_adjacency[i] = g.adjacency[i] | (std::uint32_t{1} << i);
  }
  return g;
}

IntPolynomial brute_domination_poly(const SmallGraph& g) {
  require_enumerable(g.n);
  const std::uint32_t all =
      g.n == 0 ? 0 : ((std::uint32_t{1} << (g.n - 1) << 1) - 1);
  return enumerate_covering_subsets(g, all);
}

IntPolynomial brute_relaxed_domination_poly(const SmallGraph& g,
                                            int exempt_prefix) {
  require_enumerable(g.n);
  if (exempt_prefix < 0 || exempt_prefix > g.n) {
    throw std::invalid_argument("exempt_prefix must be in [0, n]");
  }
  const std::uint32_t all =
      g.n == 0 ? 0 : ((std::uint32_t{1} << (g.n - 1) << 1) - 1);
  const std::uint32_t exempt =
      exempt_prefix == 0
          ? 0
          : ((std::uint32_t{1} << (exempt_prefix - 1) << 1) - 1);
  return enumerate_covering_subsets(g, all & ~exempt);
}

}  // namespace dompoly
