#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tourn/spectral.hpp"

namespace tourn {

/// Parameters of the normalized-eigenvalue minimisation problem: given the
/// Perron value rho and the cube sum s3, choose up to k_max further real
/// values in [0, rho] and up to l_max conjugate pairs a +- ib with a >= 0
/// so that all values sum to 1/2 and their cubes to s3, minimising the sum
/// of fourth powers.
struct SpectrumInstance {
  static constexpr int kUnbounded = 1 << 20;

  double s3 = 0.0;
  double rho = 0.0;
  int k_max = kUnbounded;
  int l_max = kUnbounded;
  /// Per-value multiplicity cap; 0 selects ceil(1/(2 max(rho, 1e-3))) + 2.
  int multiplicity_cap = 0;
};

/// Throws ValidationError unless s3 in [0, 1/8], rho in [0, 1/2] and
/// k_max, l_max >= 0 with k_max + l_max >= 1.
void validate(const SpectrumInstance& inst);

enum class CaseTag {
  kRealValues,   // every value real, at most two distinct besides 0 and rho
  kComplexPair,  // copies of rho plus copies of one pair a +- ib
  kNumeric,      // local search
};

std::string to_string(CaseTag tag);

struct SpectrumSolution {
  double value = 0.0;
  /// rho, the other reals and the pairs (here b >= 0; b = 0 is a real pair).
  EigenSpectrum witness;
  CaseTag case_tag = CaseTag::kRealValues;
};

/// max |constraint residual| of the witness, including the bound checks.
double constraint_violation(const SpectrumInstance& inst, const SpectrumSolution& sol);

/// The least rho compatible with s3: the unique z in (0, 1/2] with
/// s3 = m z^3 + (1/2 - m z)^3, m = floor(1/(2z)). s3 in (0, 1/8].
double rho_min(double s3);

/// Every feasible candidate of both structured families.
std::vector<SpectrumSolution> enumerate_candidates(const SpectrumInstance& inst);

/// Least candidate, or nullopt when no candidate is feasible.
std::optional<SpectrumSolution> try_solve_structured(const SpectrumInstance& inst);

/// As try_solve_structured; throws InfeasibleError when nothing is feasible.
SpectrumSolution solve_structured(const SpectrumInstance& inst);

struct NumericOptions {
  int restarts = 32;
  std::uint64_t seed = 1;
  double tolerance = 1e-8;  // accepted constraint violation
  unsigned threads = 0;     // 0 = hardware concurrency
};

/// Multistart augmented-Lagrangian search with exactly k reals and l pairs.
/// Start r is seeded with seed ^ r and the result does not depend on the
/// thread count. The box on imaginary parts grows while the winner presses
/// on it. `value` is the objective moved to first order onto the constraint
/// surface, which matters when 1/2 - rho is tiny and the objective huge; for
/// 1/2 - rho below about 1e-6 the search may stall above the optimum.
/// Throws NumericalError if no start reaches the constraint tolerance (the
/// linear residual is measured relative to min(1, 1 - 2 rho)).
SpectrumSolution solve_numeric(const SpectrumInstance& inst, int k, int l,
                               const NumericOptions& options = {});

struct RhoSweepResult {
  double value = 0.0;
  double rho = 0.0;
  SpectrumSolution solution;
};

/// Minimum of the structured value over rho in [rho_min(s3), 1/2]: a
/// uniform grid followed by golden-section refinement. s3 in (0, 1/8].
RhoSweepResult min_over_rho(double s3, int grid_points = 2000);

}  // namespace tourn
