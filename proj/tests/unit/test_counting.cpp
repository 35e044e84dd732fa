#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "tourn/counting.hpp"
#include "tourn/generators.hpp"

namespace tourn {
namespace {

Tournament cyclic_triangle() {
  return Tournament::from_orientation(3, [](std::size_t i, std::size_t j) { return !(i == 0 && j == 2); });
}

TEST(CycleHoms, CyclicTriangle) {
  const Tournament t = cyclic_triangle();
  EXPECT_EQ(cycle_homs(t, 3), 3u);
  EXPECT_EQ(cycle_homs(t, 4), 0u);
  EXPECT_EQ(cycle_homs(t, 5), 0u);
  EXPECT_EQ(oracle::cycle_homs(t, 3), 3u);
  EXPECT_EQ(oracle::cycle_homs(t, 4), 0u);
}

TEST(CycleHoms, TransitiveHasNone) {
  for (int len : {3, 4, 5}) EXPECT_EQ(cycle_homs(gen_transitive(6), len), 0u);
}

TEST(CycleHoms, RejectsOtherLengths) {
  EXPECT_THROW(cycle_homs(cyclic_triangle(), 2), ValidationError);
  EXPECT_THROW(cycle_homs(cyclic_triangle(), 6), ValidationError);
}

TEST(CycleHoms, MatchesTupleEnumeration) {
  for (std::size_t n = 1; n <= 8; ++n) {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      const Tournament t = oracle::random_tournament(n, 31 * n + seed);
      for (int len : {3, 4, 5}) EXPECT_EQ(cycle_homs(t, len), oracle::cycle_homs(t, len)) << n << " " << len;
    }
  }
}

TEST(CycleHoms, MatchesIntegerPowersAcrossWordBoundaries) {
  for (std::size_t n : {63u, 64u, 65u, 130u}) {
    const Tournament t = oracle::random_tournament(n, n);
    for (int len : {3, 4, 5}) EXPECT_EQ(cycle_homs(t, len), oracle::trace_power(t, len)) << n << " " << len;
  }
}

TEST(CycleHoms, DivisibleByLength) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Tournament t = oracle::random_tournament(20 + seed, seed);
    for (int len : {3, 4, 5}) EXPECT_EQ(cycle_homs(t, len) % static_cast<unsigned>(len), 0u);
  }
}

TEST(Sigma, Examples) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    EXPECT_EQ(sigma(to_matrix(oracle::random_tournament(10 + seed, seed)), 1), 0.5);
  }
  const TournamentMatrix tri = to_matrix(cyclic_triangle());
  EXPECT_NEAR(sigma(tri, 3), 1.0 / 8, 1e-15);
  EXPECT_NEAR(sigma(tri, 4), 11.0 / 144, 1e-15);
  EXPECT_THROW(sigma(tri, 2), ValidationError);
}

TEST(Sigma, MatchesIndexLoops) {
  for (std::size_t n : {5u, 17u, 40u}) {
    const TournamentMatrix a = to_matrix(oracle::random_tournament(n, n + 2));
    for (int len : {3, 4}) EXPECT_NEAR(sigma(a, len), oracle::sigma(a, len), 1e-13);
  }
  const TournamentMatrix p = matrix_potential({0, .1, .35, .5, .2});
  for (int len : {3, 4}) EXPECT_NEAR(sigma(p, len), oracle::sigma(p, len), 1e-13);
}

TEST(TransDensity, Examples) {
  EXPECT_DOUBLE_EQ(trans_density(gen_transitive(4), 4), 1.0 / 256);
  EXPECT_EQ(trans_density(cyclic_triangle(), 3), 0.0);
  EXPECT_DOUBLE_EQ(trans_density(gen_transitive(6), 3), 20.0 / 216);
  EXPECT_THROW(trans_density(cyclic_triangle(), 5), ValidationError);
}

TEST(TransDensity, MatchesSubsetEnumeration) {
  for (std::size_t n = 1; n <= 20; ++n) {
    const Tournament t = oracle::random_tournament(n, 500 + n);
    EXPECT_EQ(transitive_subsets(t, 3), oracle::transitive_subsets(t, 3));
    EXPECT_EQ(transitive_subsets(t, 4), oracle::transitive_subsets(t, 4));
  }
}

TEST(TransDensity, FourSetCensusIdentity) {
  // Every non-transitive 4-set holds one or two cyclic triangles, and those
  // with two hold exactly one 4-cycle.
  for (std::size_t n : {30u, 64u, 65u, 150u}) {
    const Tournament t = oracle::random_tournament(n, 7 * n);
    const std::uint64_t c3 = cycle_homs(t, 3) / 3, c4 = cycle_homs(t, 4) / 4;
    EXPECT_EQ(transitive_subsets(t, 4), oracle::binomial(n, 4) - c3 * (n - 3) + c4);
    EXPECT_EQ(transitive_subsets(t, 3), oracle::binomial(n, 3) - c3);
  }
}

TEST(Counting, ReversalSymmetry) {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const Tournament t = oracle::random_tournament(25 + 9 * seed, seed);
    const Tournament r = t.reversed();
    for (int len : {3, 4, 5}) EXPECT_EQ(cycle_homs(t, len), cycle_homs(r, len));
    for (int k : {3, 4}) EXPECT_EQ(transitive_subsets(t, k), transitive_subsets(r, k));
  }
}

TEST(Counting, BridgeIdentities) {
  for (std::size_t n = 1; n <= 40; ++n) {
    const DensityReport r = density_report(oracle::random_tournament(n, 90 + n));
    const double dn = static_cast<double>(n);
    EXPECT_NEAR(r.sigma3, r.t3 + 1.0 / (8 * dn * dn), 1e-12);
    EXPECT_NEAR(r.sigma4, r.t4 + 2 * r.t3 / dn + 1.0 / (16 * dn * dn * dn), 1e-12);
    EXPECT_LE(r.t3, 0.125);
  }
}

TEST(DensityReport, TransitiveSix) {
  const DensityReport r = density_report(gen_transitive(6));
  EXPECT_EQ(r.homs3, 0u);
  EXPECT_EQ(r.homs4, 0u);
  EXPECT_EQ(r.t3, 0.0);
  EXPECT_EQ(r.t4, 0.0);
  EXPECT_DOUBLE_EQ(r.tT3, 20.0 / 216);
  EXPECT_DOUBLE_EQ(r.tT4, 15.0 / 1296);
  EXPECT_NEAR(r.identity_residual, 24.0 * 15 / 1296 - 1, 1e-15);
}

TEST(DensityReport, SingleVertex) {
  const DensityReport r = density_report(gen_transitive(1));
  EXPECT_EQ(r.n, 1u);
  EXPECT_EQ(r.homs3 + r.homs4 + r.homs5, 0u);
  EXPECT_EQ(r.tT3, 0.0);
  EXPECT_EQ(r.tT4, 0.0);
  EXPECT_EQ(r.identity_residual, -1.0);
  EXPECT_DOUBLE_EQ(r.sigma3, 0.125);
}

TEST(DensityReport, IdentityResidualShrinksLikeOneOverN) {
  const double r200 = density_report(gen_uniform(200, Seed{3})).identity_residual;
  const double r400 = density_report(gen_uniform(400, Seed{3})).identity_residual;
  EXPECT_LE(std::abs(r200), 0.1);
  const double ratio = std::abs(r400) / std::abs(r200);
  EXPECT_GT(ratio, 0.3);
  EXPECT_LT(ratio, 0.7);
}

TEST(DensityReport, FieldsConsistent) {
  const Tournament t = oracle::random_tournament(33, 1);
  const DensityReport r = density_report(t);
  EXPECT_EQ(r.homs5, oracle::trace_power(t, 5));
  EXPECT_DOUBLE_EQ(r.t5, static_cast<double>(r.homs5) / std::pow(33.0, 5));
  EXPECT_DOUBLE_EQ(r.identity_residual, 8 * r.t3 + 24 * r.tT4 - 6 * r.t4 - 1);
  for (double d : {r.t3, r.t4, r.t5, r.tT3, r.tT4, r.sigma3, r.sigma4}) {
    EXPECT_GE(d, 0.0);
    EXPECT_LE(d, 1.0);
  }
}

}  // namespace
}  // namespace tourn
