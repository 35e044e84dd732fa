#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "tourn/bounds.hpp"
#include "tourn/counting.hpp"
#include "tourn/generators.hpp"
#include "tourn/spectral.hpp"

namespace tourn {
namespace {

TournamentMatrix cyclic_triangle() {
  return to_matrix(Tournament::from_orientation(3, [](std::size_t i, std::size_t j) { return !(i == 0 && j == 2); }));
}

std::vector<double> random_potentials(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> u(0.0, 0.5);
  std::vector<double> z(n);
  for (auto& x : z) x = u(gen);
  return z;
}

double variance(const std::vector<double>& z) {
  double mean = 0, sq = 0;
  for (double x : z) mean += x;
  mean /= static_cast<double>(z.size());
  for (double x : z) sq += (x - mean) * (x - mean);
  return sq / static_cast<double>(z.size());
}

TEST(SkewDecompose, CyclicTriangle) {
  const SpectralProfile p = skew_decompose(cyclic_triangle());
  ASSERT_EQ(p.pairs.size(), 1u);
  EXPECT_NEAR(p.pairs[0].lambda, 1 / std::sqrt(3.0), 1e-12);
  EXPECT_NEAR(p.pairs[0].alpha, std::numbers::pi / 2, 1e-12);
  ASSERT_TRUE(p.alpha_extra.has_value());
  EXPECT_NEAR(*p.alpha_extra, 0.0, 1e-6);
  EXPECT_NEAR(reconstruct_sigma(p, 3), 1.0 / 8, 1e-12);
  EXPECT_NEAR(reconstruct_sigma(p, 4), 11.0 / 144, 1e-12);
}

TEST(SkewDecompose, PotentialMatrixHasOneBlock) {
  for (std::size_t n : {2u, 7u, 40u, 121u}) {
    const auto z = random_potentials(n, n);
    const SpectralProfile p = skew_decompose(matrix_potential(z));
    ASSERT_EQ(p.pairs.size(), n / 2);
    EXPECT_EQ(p.alpha_extra.has_value(), n % 2 == 1);
    EXPECT_GT(p.pairs[0].lambda, 0.0);
    for (std::size_t i = 1; i < p.pairs.size(); ++i) EXPECT_EQ(p.pairs[i].lambda, 0.0);
    const double c = std::cos(p.pairs[0].alpha);
    EXPECT_NEAR(p.pairs[0].lambda * p.pairs[0].lambda * c * c, 4 * variance(z), 1e-12);
  }
}

TEST(SkewDecompose, HalfMatrixIsZero) {
  for (std::size_t n : {1u, 4u, 9u}) {
    const SpectralProfile p = skew_decompose(TournamentMatrix(Eigen::MatrixXd::Constant(n, n, .5)));
    for (const auto& q : p.pairs) EXPECT_EQ(q.lambda, 0.0);
    EXPECT_NEAR(p.cos_square_sum(), 1.0, 1e-12);
    EXPECT_NEAR(reconstruct_sigma(p, 3), 1.0 / 8, 1e-15);
    EXPECT_NEAR(reconstruct_sigma(p, 4), 1.0 / 16, 1e-15);
  }
}

TEST(ReconstructSigma, ZeroProfile) {
  SpectralProfile p;
  p.n = 4;
  p.pairs = {{0, 0}, {0, std::numbers::pi / 2}};
  EXPECT_EQ(reconstruct_sigma(p, 3), 1.0 / 8);
  EXPECT_EQ(reconstruct_sigma(p, 4), 1.0 / 16);
  EXPECT_THROW(reconstruct_sigma(p, 5), ValidationError);
}

void expect_profile_identities(const TournamentMatrix& a, const std::string& label) {
  const SpectralProfile p = skew_decompose(a);
  ASSERT_EQ(p.pairs.size(), a.n() / 2) << label;
  EXPECT_EQ(p.alpha_extra.has_value(), a.n() % 2 == 1) << label;
  EXPECT_NEAR(reconstruct_sigma(p, 3), oracle::sigma(a, 3), 1e-8) << label;
  EXPECT_NEAR(reconstruct_sigma(p, 4), oracle::sigma(a, 4), 1e-8) << label;
  EXPECT_NEAR(p.cos_square_sum(), 1.0, 1e-8) << label;
  const double w = p.weighted_square_sum();
  EXPECT_GE(p.quartic_sum(), w * w - 1e-8) << label;
  EXPECT_LE(p.residual, 1e-7 * static_cast<double>(a.n())) << label;
  for (std::size_t i = 0; i < p.pairs.size(); ++i) {
    EXPECT_GE(p.pairs[i].lambda, 0.0);
    EXPECT_GE(p.pairs[i].alpha, 0.0);
    EXPECT_LE(p.pairs[i].alpha, std::numbers::pi / 2);
    if (i > 0) EXPECT_LE(p.pairs[i].lambda, p.pairs[i - 1].lambda);
  }
}

TEST(SkewDecompose, RandomTournamentIdentities) {
  for (std::size_t n : {50u, 51u, 100u, 300u}) {
    expect_profile_identities(to_matrix(oracle::random_tournament(n, n)), "random " + std::to_string(n));
  }
}

TEST(SkewDecompose, StructuredTournamentIdentities) {
  expect_profile_identities(to_matrix(gen_transitive(31)), "transitive");
  expect_profile_identities(to_matrix(gen_circular(0.5, 41)), "circular odd");
  expect_profile_identities(to_matrix(gen_circular(0.5, 40)), "circular even");
  expect_profile_identities(to_matrix(gen_blowup({0.25, 60, Seed{1}})), "blowup");
}

TEST(SkewDecompose, CauchySchwarzOnPotentials) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const SpectralProfile p = skew_decompose(matrix_potential(random_potentials(30 + seed, seed)));
    const double w = p.weighted_square_sum();
    EXPECT_GE(p.quartic_sum(), w * w - 1e-8);
  }
}

TEST(EigsNormalized, CyclicTriangle) {
  const EigenAnalysis e = eigs_normalized(cyclic_triangle());
  EXPECT_NEAR(e.spectrum.rho, 0.5, 1e-12);
  EXPECT_TRUE(e.spectrum.reals.empty());
  ASSERT_EQ(e.spectrum.complex_pairs.size(), 1u);
  EXPECT_NEAR(e.spectrum.complex_pairs[0].a, 0.0, 1e-12);
  EXPECT_NEAR(e.spectrum.complex_pairs[0].b, std::sqrt(3.0) / 6, 1e-12);
  EXPECT_TRUE(e.checks.ok);
}

TEST(EigsNormalized, HalfMatrix) {
  const EigenAnalysis e = eigs_normalized(TournamentMatrix(Eigen::MatrixXd::Constant(6, 6, .5)));
  EXPECT_NEAR(e.spectrum.rho, 0.5, 1e-12);
  for (double r : e.spectrum.reals) EXPECT_NEAR(r, 0.0, 1e-12);
  for (const auto& c : e.spectrum.complex_pairs) {
    EXPECT_NEAR(c.a, 0.0, 1e-9);
    EXPECT_NEAR(c.b, 0.0, 1e-7);
  }
}

TEST(EigsNormalized, Transitive) {
  for (std::size_t n : {1u, 5u, 12u}) {
    const EigenAnalysis e = eigs_normalized(to_matrix(gen_transitive(n)));
    const double expected = 1.0 / (2.0 * static_cast<double>(n));
    EXPECT_DOUBLE_EQ(e.spectrum.rho, expected);
    EXPECT_EQ(e.spectrum.reals.size(), n - 1);
    for (double r : e.spectrum.reals) EXPECT_DOUBLE_EQ(r, expected);
    EXPECT_TRUE(e.checks.ok);
  }
}

TEST(EigsNormalized, MomentConstraintsOnGeneratedTournaments) {
  std::vector<TournamentMatrix> cases;
  for (std::size_t n : {7u, 20u, 64u, 101u}) cases.push_back(to_matrix(oracle::random_tournament(n, 40 + n)));
  cases.push_back(to_matrix(gen_circular(0.5, 31)));
  cases.push_back(to_matrix(gen_circular(0.25, 40)));
  cases.push_back(to_matrix(gen_blowup({0.5, 50, Seed{2}})));
  cases.push_back(to_matrix(gen_potential(random_potentials(60, 5), Seed{5})));
  cases.push_back(matrix_potential(random_potentials(25, 6)));
  for (const auto& a : cases) {
    const EigenAnalysis e = eigs_normalized(a);
    const auto& s = e.spectrum;
    EXPECT_NEAR(s.linear_sum(), 0.5, 1e-9);
    EXPECT_NEAR(s.cubic_sum(), oracle::sigma(a, 3), 1e-9);
    EXPECT_NEAR(s.quartic_sum(), oracle::sigma(a, 4), 1e-9);
    for (double r : s.reals) {
      EXPECT_LE(r, s.rho + 1e-9);
      EXPECT_GE(r, -1e-9);
    }
    for (const auto& c : s.complex_pairs) {
      EXPECT_GE(c.a, -1e-9);
      EXPECT_GT(c.b, 0.0);
    }
    EXPECT_TRUE(e.checks.rho_dominates);
    EXPECT_TRUE(e.checks.ok) << a.n();
  }
}

TEST(Extremality, RecoversPotential) {
  const auto z = extremality_test(matrix_potential({0, .25, .5}), 1e-12);
  ASSERT_TRUE(z.has_value());
  EXPECT_NEAR((*z)[0], 0.0, 1e-15);
  EXPECT_NEAR((*z)[1], 0.25, 1e-15);
  EXPECT_NEAR((*z)[2], 0.5, 1e-15);
}

TEST(Extremality, RejectsCyclicTriangle) {
  EXPECT_FALSE(extremality_test(cyclic_triangle(), 1e-9).has_value());
  EXPECT_TRUE(extremality_test(cyclic_triangle(), 0.5 + 1e-12).has_value());
}

TEST(Extremality, HalfMatrix) {
  const auto z = extremality_test(TournamentMatrix(Eigen::MatrixXd::Constant(5, 5, .5)), 1e-12);
  ASSERT_TRUE(z.has_value());
  for (double x : *z) EXPECT_EQ(x, 0.0);
}

TEST(Extremality, RandomPotentialsUpToConstant) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto z = random_potentials(20 + 5 * seed, seed);
    const auto got = extremality_test(matrix_potential(z), 1e-9);
    ASSERT_TRUE(got.has_value());
    const double shift = (*got)[0] - z[0];
    for (std::size_t i = 0; i < z.size(); ++i) EXPECT_NEAR((*got)[i] - z[i], shift, 1e-12);
  }
}

TEST(EqualityFamily, PotentialsMeetG) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const TournamentMatrix a = matrix_potential(random_potentials(10 + 7 * seed, seed));
    const double s3 = sigma(a, 3);
    EXPECT_GE(s3, 1.0 / 32 - 1e-10);
    EXPECT_NEAR(sigma(a, 4), g(std::min(s3, 0.125)), 1e-9);
  }
}

}  // namespace
}  // namespace tourn
