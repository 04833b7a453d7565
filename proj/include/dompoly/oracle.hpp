#ifndef DOMPOLY_ORACLE_HPP
#define DOMPOLY_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "dompoly/graph_spec.hpp"
#include "dompoly/int_polynomial.hpp"

namespace dompoly {

/// Hard cap for exhaustive enumeration: 2^26 subsets is a desk-scale run
/// (well under a second with the split cover tables); anything larger is an
/// error rather than a silent long computation.
inline constexpr int kMaxBruteForceVertices = 26;

/// Small graph stored as adjacency bit masks, n <= 26. Bit j of
/// adjacency[i] is set iff vertices i and j are adjacent (no self-loops);
/// closed_adjacency[i] additionally has bit i set.
struct SmallGraph {
  int n = 0;
  std::vector<std::uint32_t> adjacency;
  std::vector<std::uint32_t> closed_adjacency;
};

/// Materializes a path or cycle power: path powers join i, j iff
/// 0 < |i-j| <= ell; cycle powers join i, j iff 0 < min(|i-j|, n-|i-j|) <= ell.
/// Throws std::invalid_argument for n > 26 or ell < 1.
SmallGraph build_power_graph(const GraphSpec& spec);

/// Coefficient k counts the size-k subsets whose closed neighborhoods cover
/// every vertex. The empty graph yields the constant 1.
IntPolynomial brute_domination_poly(const SmallGraph& g);

/// Same count with coverage waived for vertices 0..exempt_prefix-1; with
/// exempt_prefix == n every subset qualifies and the result is (1+x)^n.
IntPolynomial brute_relaxed_domination_poly(const SmallGraph& g,
                                            int exempt_prefix);

}  // namespace dompoly

#endif  // DOMPOLY_ORACLE_HPP
