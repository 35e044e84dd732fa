#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tourn/tournament.hpp"

namespace tourn {

/// One 2x2 block of the skew-symmetric form of B = J - 2A.
struct SpectralPair {
  double lambda = 0.0;  // block entry is lambda * n; lambda >= 0
  double alpha = 0.0;   // angle between the block's first basis vector and j/sqrt(n), in [0, pi/2]
};

/// Block parameters of B = J - 2A = U L U^T, where L pairs coordinates
/// (2i-1, 2i) into blocks [[0, lambda_i n], [-lambda_i n, 0]], every
/// second basis vector v_{2i} is orthogonal to the all-ones vector j, and
/// cos(alpha_i) = <v_{2i-1}, j/sqrt(n)> >= 0.
struct SpectralProfile {
  std::size_t n = 0;
  /// floor(n/2) pairs, lambda descending.
  std::vector<SpectralPair> pairs;
  /// Angle of the unpaired basis vector; present iff n is odd.
  std::optional<double> alpha_extra;
  /// max |B - U L U^T| of the computed factorisation.
  double residual = 0.0;

  /// sum_i lambda_i^2 cos^2 alpha_i
  double weighted_square_sum() const;
  /// sum_i lambda_i^4
  double quartic_sum() const;
  /// sum of cos^2 over all angles, including alpha_extra (equals 1).
  double cos_square_sum() const;
};

/// Computes the profile through the symmetric PSD matrix B^T B = -B^2.
/// Throws NumericalError if the factorisation residual exceeds 1e-7 * n.
SpectralProfile skew_decompose(const TournamentMatrix& a);

/// sigma_3 = (1 - 3 sum lambda^2 cos^2 alpha) / 8 and
/// sigma_4 = (1 - 4 sum lambda^2 cos^2 alpha + 2 sum lambda^4) / 16.
double reconstruct_sigma(const SpectralProfile& profile, int len);

struct ComplexPair {
  double a = 0.0;  // real part
  double b = 0.0;  // imaginary part, > 0
};

/// Eigenvalues of A divided by n: the Perron root rho, the other real
/// eigenvalues, and one representative a + ib (b > 0) per conjugate pair.
struct EigenSpectrum {
  double rho = 0.0;
  std::vector<double> reals;               // descending
  std::vector<ComplexPair> complex_pairs;  // by descending real part

  double linear_sum() const;  // rho + sum r + 2 sum a
  double cubic_sum() const;   // rho^3 + sum r^3 + 2 sum (a^3 - 3ab^2)
  double quartic_sum() const; // rho^4 + sum r^4 + 2 sum (a^4 - 6a^2b^2 + b^4)
};

struct EigenChecks {
  double linear_residual = 0.0;   // linear_sum - 1/2
  double cubic_residual = 0.0;    // cubic_sum - sigma_3(A)
  double quartic_residual = 0.0;  // quartic_sum - sigma_4(A)
  double min_real_part = 0.0;     // over every eigenvalue
  bool rho_dominates = true;      // rho >= every |eigenvalue| - 1e-9
  bool ok = true;                 // all of the above within 1e-9
};

struct EigenAnalysis {
  EigenSpectrum spectrum;
  EigenChecks checks;
};

/// Throws NumericalError when the solver fails or an eigenvalue has real
/// part below -1e-9 (impossible for a tournament matrix).
EigenAnalysis eigs_normalized(const TournamentMatrix& a);

/// Fits z_i = rowsum_i / n - 1/2, shifted so min z = 0, and returns it iff
/// max |A_ij - (1/2 + z_i - z_j)| <= tol.
std::optional<std::vector<double>> extremality_test(const TournamentMatrix& a, double tol);

}  // namespace tourn
