#include "dompoly/oracle.hpp"

#include <bit>
#include <stdexcept>

#include <doctest.h>

#include "dompoly/binomial.hpp"

namespace dompoly {
namespace {

// Straight-line re-enumeration, independent of the production oracle's
// split cover tables: walks every subset and every vertex.
IntPolynomial naive_count(const SmallGraph& g, int exempt_prefix) {
  std::vector<mpz_class> tally(g.n + 1, 0);
  const std::uint32_t end_bit = 1u << g.n;
  for (std::uint32_t mask = 0; mask < end_bit; ++mask) {
    bool dominated = true;
    for (int v = exempt_prefix; v < g.n && dominated; ++v) {
      dominated = (g.closed_adjacency[v] & mask) != 0;
    }
    if (dominated) tally[std::popcount(mask)] += 1;
  }
  return IntPolynomial(std::move(tally));
}

TEST_CASE("path power adjacency") {
  const SmallGraph g = build_power_graph({Family::PathPower, 4, 2});
  REQUIRE(g.n == 4);
  // Edges 12,13,23,24,34 one-based; degree sequence (2,3,3,2).
  CHECK(g.adjacency[0] == 0b0110);
  CHECK(g.adjacency[1] == 0b1101);
  CHECK(g.adjacency[2] == 0b1011);
  CHECK(g.adjacency[3] == 0b0110);
  for (int i = 0; i < g.n; ++i) {
    CHECK(g.closed_adjacency[i] == (g.adjacency[i] | (1u << i)));
    CHECK((g.adjacency[i] & (1u << i)) == 0);  // no self-loops
    for (int j = 0; j < g.n; ++j) {
      CHECK(((g.adjacency[i] >> j) & 1) == ((g.adjacency[j] >> i) & 1));
    }
  }
}

TEST_CASE("cycle power conventions") {
  // All cyclic distances in the 5-cycle squared are <= 2: complete graph.
  const SmallGraph k5 = build_power_graph({Family::CyclePower, 5, 2});
  for (int i = 0; i < 5; ++i) CHECK(std::popcount(k5.adjacency[i]) == 4);

  const SmallGraph k2 = build_power_graph({Family::CyclePower, 2, 1});
  CHECK(k2.adjacency[0] == 0b10);
  CHECK(k2.adjacency[1] == 0b01);

  const SmallGraph isolated = build_power_graph({Family::CyclePower, 1, 3});
  CHECK(isolated.adjacency[0] == 0);

  CHECK(build_power_graph({Family::CyclePower, 0, 1}).n == 0);
}

TEST_CASE("brute domination polynomial") {
  CHECK(brute_domination_poly(build_power_graph({Family::PathPower, 3, 1})) ==
        IntPolynomial::from({0, 1, 3, 1}));
  CHECK(brute_domination_poly(build_power_graph({Family::PathPower, 0, 1})) ==
        IntPolynomial::from({1}));
  // Complete graphs: every nonempty subset dominates.
  for (std::int64_t n : {1, 2, 5, 9}) {
    IntPolynomial expected = binomial_expansion(n);
    expected -= IntPolynomial::one();
    CHECK(brute_domination_poly(build_power_graph(
              {Family::CyclePower, n, n})) == expected);
  }
}

TEST_CASE("brute relaxed domination polynomial") {
  const SmallGraph p2 = build_power_graph({Family::PathPower, 2, 1});
  CHECK(brute_relaxed_domination_poly(p2, 1) == IntPolynomial::from({0, 2, 1}));
  const SmallGraph p3 = build_power_graph({Family::PathPower, 3, 1});
  CHECK(brute_relaxed_domination_poly(p3, 1) ==
        IntPolynomial::from({0, 2, 3, 1}));
  // Fully exempt: every subset counts.
  for (std::int64_t n : {0, 1, 4, 7}) {
    const SmallGraph g = build_power_graph({Family::PathPower, n, 2});
    CHECK(brute_relaxed_domination_poly(g, static_cast<int>(n)) ==
          binomial_expansion(n));
  }
}

TEST_CASE("relaxed with empty prefix is plain domination") {
  for (std::int64_t n = 0; n <= 9; ++n) {
    for (std::int64_t ell = 1; ell <= n + 1; ++ell) {
      for (Family family : {Family::PathPower, Family::CyclePower}) {
        const SmallGraph g = build_power_graph({family, n, ell});
        CHECK(brute_domination_poly(g) == brute_relaxed_domination_poly(g, 0));
      }
    }
  }
}

TEST_CASE("production oracle matches a naive re-enumeration") {
  for (std::int64_t n = 0; n <= 11; ++n) {
    for (std::int64_t ell : {1, 2, 3}) {
      for (Family family : {Family::PathPower, Family::CyclePower}) {
        const SmallGraph g = build_power_graph({family, n, ell});
        CHECK(brute_domination_poly(g) == naive_count(g, 0));
        const int exempt = static_cast<int>(std::min(ell, n));
        CHECK(brute_relaxed_domination_poly(g, exempt) ==
              naive_count(g, exempt));
      }
    }
  }
}

TEST_CASE("coefficients never exceed the subset count") {
  const BinomialTable table(10);
  for (std::int64_t n = 0; n <= 10; ++n) {
    for (std::int64_t ell = 1; ell <= std::max<std::int64_t>(n, 1); ++ell) {
      const IntPolynomial p =
          brute_domination_poly(build_power_graph({Family::PathPower, n, ell}));
      const auto row = table.row(n);
      for (std::int64_t k = 0; k <= n; ++k) {
        CHECK(p[static_cast<std::size_t>(k)] <=
              row[static_cast<std::size_t>(k)]);
      }
    }
  }
}

TEST_CASE("supersets of dominating sets dominate") {
  const SmallGraph g = build_power_graph({Family::PathPower, 7, 1});
  const std::uint32_t full = (1u << 7) - 1;
  auto covers = [&](std::uint32_t mask) {
    std::uint32_t cov = 0;
    for (int v = 0; v < 7; ++v) {
      if (mask & (1u << v)) cov |= g.closed_adjacency[v];
    }
    return cov == full;
  };
  for (std::uint32_t mask = 0; mask <= full; ++mask) {
    if (!covers(mask)) continue;
    for (int v = 0; v < 7; ++v) CHECK(covers(mask | (1u << v)));
  }
}

TEST_CASE("oracle rejects out-of-range input") {
  CHECK_THROWS_AS(build_power_graph({Family::PathPower, 27, 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_power_graph({Family::PathPower, -1, 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_power_graph({Family::PathPower, 5, 0}),
                  std::invalid_argument);
  const SmallGraph g = build_power_graph({Family::PathPower, 4, 1});
  CHECK_THROWS_AS(brute_relaxed_domination_poly(g, 5), std::invalid_argument);
  CHECK_THROWS_AS(brute_relaxed_domination_poly(g, -1), std::invalid_argument);
}

}  // namespace
}  // namespace dompoly
