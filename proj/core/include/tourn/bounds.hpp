#pragma once

#include <cstddef>

namespace tourn {

/// A 3-cycle density together with the part-size parameter realising it.
struct RegimePoint {
  double d = 0.0;       // in (0, 1/8]
  double z = 1.0;       // in [1/k, 1/(k-1)], capped at 1
  std::size_t k = 1;    // number of parts of the extremal blow-up
};

/// (1/8)(m z^3 + (1 - m z)^3) with m = floor(1/z): the asymptotic 3-cycle
/// density of the random blow-up with parameter z in (0, 1].
double blowup_c3(double z);

/// (1/16)(m z^4 + (1 - m z)^4), the matching 4-cycle density.
double blowup_c4(double z);

/// Solves blowup_c3(z) = d. The regime is the smallest k with
/// d >= 1/(8k^2); z is then bisected inside [1/k, 1/(k-1)].
/// Throws ValidationError unless d in (0, 1/8] (1e-12 slack at the top).
RegimePoint invert_z(double d);

/// The conjectured minimum 4-cycle density at 3-cycle density d:
/// g(0) = 0 and g(blowup_c3(z)) = blowup_c4(z). Inputs within 1e-12 of
/// [0, 1/8] are clamped; anything further out throws ValidationError.
double g(double d);

/// 12 d^2 / (1 + 16 d).
double lower_envelope_lm(double d);

/// 2 d / 3.
double upper_envelope(double d);

struct DensityPoint {
  double t3 = 0.0;
  double t4 = 0.0;
};

/// (blowup_c3(z), blowup_c4(z)) for z in (0, 1].
DensityPoint construction_point(double z);

}  // namespace tourn
