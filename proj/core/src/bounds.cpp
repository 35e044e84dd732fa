#include "tourn/bounds.hpp"

#include <cmath>
#include <sstream>

#include "tourn/error.hpp"

namespace tourn {

namespace {

constexpr double kSlack = 1e-12;
constexpr double kMaxDensity = 0.125;

double clamp_density(double d) {
  if (!(d >= -kSlack && d <= kMaxDensity + kSlack)) {
    std::ostringstream os;
    os.precision(17);
    os << "3-cycle density " << d << " outside [0, 1/8]";
    throw ValidationError(os.str());
  }
  return std::fmin(std::fmax(d, 0.0), kMaxDensity);
}

// Densities with an explicit part count m = k - 1 (plus the remainder part).
double c3_with(double m, double z) {
  const double rest = 1.0 - m * z;
  return (m * z * z * z + rest * rest * rest) / 8.0;
}

double c4_with(double m, double z) {
  const double rest = 1.0 - m * z;
  return (m * z * z * z * z + rest * rest * rest * rest) / 16.0;
}

void check_z(double z) {
  if (!(z > 0.0 && z <= 1.0)) throw ValidationError("part-size parameter z must lie in (0, 1]");
}

}  // namespace

double blowup_c3(double z) {
  check_z(z);
  return c3_with(std::floor(1.0 / z), z);
}

double blowup_c4(double z) {
  check_z(z);
  return c4_with(std::floor(1.0 / z), z);
}

RegimePoint invert_z(double d) {
  d = clamp_density(d);
  if (d <= 0.0) throw ValidationError("invert_z needs a positive density (g(0) = 0 has no regime)");
  if (d >= kMaxDensity) return {kMaxDensity, 1.0, 1};

  // Smallest k with d >= 1/(8k^2); the sqrt guess is corrected both ways.
  auto k = static_cast<std::size_t>(std::ceil(1.0 / std::sqrt(8.0 * d)));
  if (k < 2) k = 2;
  while (k > 2 && d >= 1.0 / (8.0 * static_cast<double>((k - 1) * (k - 1)))) --k;
  while (d < 1.0 / (8.0 * static_cast<double>(k * k))) ++k;

  // On [1/k, 1/(k-1)] the blow-up has k-1 full parts and d(z) increases.
  const double m = static_cast<double>(k - 1);
  double lo = 1.0 / static_cast<double>(k);
  double hi = 1.0 / m;
  if (c3_with(m, lo) >= d) return {d, lo, k};
  if (c3_with(m, hi) <= d) return {d, hi, k};
  for (int iter = 0; iter < 200 && hi - lo > 0.0; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (c3_with(m, mid) < d) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double z = std::abs(c3_with(m, lo) - d) <= std::abs(c3_with(m, hi) - d) ? lo : hi;
  if (std::abs(c3_with(m, z) - d) > 1e-13) {
    std::ostringstream os;
    os.precision(17);
    os << "invert_z failed to converge at d = " << d;
    throw NumericalError(os.str());
  }
  return {d, z, k};
}

double g(double d) {
  d = clamp_density(d);
  if (d <= 0.0) return 0.0;
  const RegimePoint p = invert_z(d);
  return c4_with(static_cast<double>(p.k - 1), p.z);
}

double lower_envelope_lm(double d) {
  d = clamp_density(d);
  return 12.0 * d * d / (1.0 + 16.0 * d);
}

double upper_envelope(double d) {
  d = clamp_density(d);
  return 2.0 * d / 3.0;
}

DensityPoint construction_point(double z) { return {blowup_c3(z), blowup_c4(z)}; }

}  // namespace tourn
