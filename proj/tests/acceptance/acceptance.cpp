// Acceptance suite: one PASS/FAIL line per criterion.
//
//   tourn_acceptance [--n7]
//
// The n = 7 exhaustive sweep (2^21 tournaments) also runs when the
// environment variable TOURN_ACCEPT_N7 is set to 1.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "tourn/bounds.hpp"
#include "tourn/counting.hpp"
#include "tourn/enumerate.hpp"
#include "tourn/generators.hpp"
#include "tourn/spectral.hpp"
#include "tourn/spectrum_opt.hpp"

namespace {

using namespace tourn;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void fail_if(bool bad, const std::string& why) {
    if (bad && pass) detail << "first failure: " << why << "; ";
    if (bad) pass = false;
  }
};

double hom_density(const Tournament& t, int len) {
  return static_cast<double>(cycle_homs(t, len)) / std::pow(static_cast<double>(t.n()), len);
}

std::vector<double> uniform_potentials(std::size_t n, std::mt19937_64& gen) {
  std::uniform_real_distribution<double> u(0.0, 0.5);
  std::vector<double> z(n);
  for (auto& x : z) x = u(gen);
  return z;
}

void exhaustive_bound(Outcome& o, bool with_seven) {
  std::vector<std::size_t> orders{6};
  if (with_seven) orders.push_back(7);
  for (std::size_t n : orders) {
    EnumerationOptions opts;
    opts.threads = 0;
    const EnumerationSummary s = summarize_all(n, opts);
    const double gap = s.min_gap.value_or(0.0);
    o.detail << "n=" << n << ": " << s.visited << " tournaments, " << s.checked
             << " with sigma3>=1/72, min sigma4-g(sigma3)=" << gap << "; ";
    o.fail_if(s.visited != tournament_count(n), "not every tournament visited");
    o.fail_if(gap < -1e-10, "bound violated at index " + std::to_string(s.argmin_index));
  }
  if (!with_seven) o.detail << "n=7 skipped (set TOURN_ACCEPT_N7=1 or pass --n7)";
}

void equality_family(Outcome& o) {
  std::mt19937_64 gen(20240501);
  const std::size_t orders[] = {20, 100, 500};
  double worst_g = 0, worst_z = 0, min_s3 = 1;
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = orders[i % 3];
    const auto z = uniform_potentials(n, gen);
    const TournamentMatrix a = matrix_potential(z);
    const double s3 = sigma(a, 3);
    min_s3 = std::min(min_s3, s3);
    worst_g = std::max(worst_g, std::abs(sigma(a, 4) - g(std::min(s3, 0.125))));
    o.fail_if(s3 < 1.0 / 32 - 1e-10, "sigma3 below 1/32");
    const auto got = extremality_test(a, 1e-9);
    o.fail_if(!got, "extremality test rejected a potential matrix");
    if (got) {
      const double shift = (*got)[0] - z[0];
      for (std::size_t v = 0; v < n; ++v) worst_z = std::max(worst_z, std::abs((*got)[v] - z[v] - shift));
    }
  }
  o.fail_if(worst_g > 1e-9, "|sigma4 - g(sigma3)| above 1e-9");
  o.fail_if(worst_z > 1e-9, "potential recovery error above 1e-9");
  o.detail << "100 matrices, min sigma3=" << min_s3 << ", max |sigma4-g|=" << worst_g
           << ", max z error=" << worst_z;
}

void spectral_identities(Outcome& o) {
  const std::size_t orders[] = {51, 100, 301};
  double worst_sigma = 0, worst_cos = 0, worst_cs = 0;
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = orders[i % 3];
    const TournamentMatrix a = to_matrix(oracle::random_tournament(n, 7000 + static_cast<std::uint64_t>(i)));
    const SpectralProfile p = skew_decompose(a);
    for (int len : {3, 4}) worst_sigma = std::max(worst_sigma, std::abs(reconstruct_sigma(p, len) - sigma(a, len)));
    worst_cos = std::max(worst_cos, std::abs(p.cos_square_sum() - 1));
    const double w = p.weighted_square_sum();
    worst_cs = std::max(worst_cs, w * w - p.quartic_sum());
  }
  o.fail_if(worst_sigma > 1e-8, "reconstructed sigma off by more than 1e-8");
  o.fail_if(worst_cos > 1e-8, "sum of cos^2 off by more than 1e-8");
  o.fail_if(worst_cs > 1e-8, "Cauchy-Schwarz inequality violated");
  o.detail << "50 tournaments, max sigma error=" << worst_sigma << ", max |sum cos^2-1|=" << worst_cos
           << ", max (sum l^2cos^2)^2 - sum l^4=" << worst_cs;
}

void bridge_identities(Outcome& o) {
  double worst = 0;
  std::uint64_t count = 0;
  auto check = [&](const Tournament& t) {
    const double n = static_cast<double>(t.n());
    const TournamentMatrix a = to_matrix(t);
    const double t3 = hom_density(t, 3), t4 = hom_density(t, 4);
    worst = std::max(worst, std::abs(sigma(a, 3) - (t3 + 1 / (8 * n * n))));
    worst = std::max(worst, std::abs(sigma(a, 4) - (t4 + 2 * t3 / n + 1 / (16 * n * n * n))));
    ++count;
  };
  for (std::size_t n = 1; n <= 6; ++n) enumerate_all(n, [&](std::uint64_t, const Tournament& t) { check(t); });
  for (int i = 0; i < 50; ++i) check(oracle::random_tournament(7 + 4 * static_cast<std::size_t>(i), 300 + static_cast<std::uint64_t>(i)));
  o.fail_if(worst > 1e-10, "bridge identity off by more than 1e-10");
  o.detail << count << " tournaments, max error=" << worst;
}

void construction_densities(Outcome& o) {
  struct Target {
    double z, t3, t4;
  };
  for (const Target& c : {Target{0.5, 1.0 / 32, 1.0 / 128}, Target{1.0 / 3, 1.0 / 72, 1.0 / 432}}) {
    const Tournament t = gen_blowup({c.z, 3000, Seed{2024}});
    const double t3 = hom_density(t, 3), t4 = hom_density(t, 4);
    o.fail_if(std::abs(t3 - c.t3) > 0.005 || std::abs(t4 - c.t4) > 0.005, "blow-up densities off target");
    o.detail << "blowup z=" << c.z << ": (" << t3 << ", " << t4 << "); ";
  }
  double worst = 0;
  for (double xi : {0.1, 0.2, 0.3, 0.4, 0.5}) {
    const Tournament t = gen_circular(xi, 1001);
    worst = std::max(worst, std::abs(hom_density(t, 4) - 2 * hom_density(t, 3) / 3));
  }
  o.fail_if(worst > 0.01, "circular family off the upper envelope");
  o.detail << "circular max |t4-2t3/3|=" << worst;
}

void optimizer(Outcome& o) {
  SpectrumInstance base;
  base.s3 = 1.0 / 72;
  base.rho = 1.0 / 6;
  const double v = solve_structured(base).value;
  o.fail_if(std::abs(v - 1.0 / 432) > 1e-9, "structured value at (1/72, 1/6) is not 1/432");
  o.detail << "solve_structured(1/72,1/6)-1/432=" << v - 1.0 / 432 << "; ";

  double worst_sweep = 1;
  for (int i = 0; i < 40; ++i) {
    const double s3 = 1.0 / 72 + (1.0 / 8 - 1.0 / 72) * i / 39.0;
    worst_sweep = std::min(worst_sweep, min_over_rho(s3).value - g(s3));
  }
  o.fail_if(worst_sweep < -1e-8, "min over rho below g");
  o.detail << "min over 40 s3 of (min_over_rho - g)=" << worst_sweep << "; ";

  std::mt19937_64 gen(77);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst_gap = 0;
  int compared = 0;
  for (int i = 0; i < 50; ++i) {
    SpectrumInstance inst;
    inst.s3 = 1.0 / 72 + u(gen) * (1.0 / 8 - 1.0 / 72);
    const double lo = rho_min(inst.s3);
    inst.rho = lo + u(gen) * (0.5 - lo);
    inst.k_max = 1 + i % 3;
    inst.l_max = 1 + (i / 3) % 2;
    const auto structured = try_solve_structured(inst);
    NumericOptions opts;
    opts.restarts = 48;
    opts.seed = 5000 + static_cast<std::uint64_t>(i);
    if (!structured) {
      bool numeric_found = true;
      try {
        solve_numeric(inst, inst.k_max, inst.l_max, opts);
      } catch (const NumericalError&) {
        numeric_found = false;
      }
      o.fail_if(numeric_found, "numeric solver found a point the structured solver missed");
      continue;
    }
    const double numeric = solve_numeric(inst, inst.k_max, inst.l_max, opts).value;
    worst_gap = std::max(worst_gap, std::abs(numeric - structured->value));
    ++compared;
  }
  o.fail_if(worst_gap > 1e-6, "structured and numeric disagree by more than 1e-6");
  o.detail << compared << " feasible instances cross-checked, max |structured-numeric|=" << worst_gap;
}

void identity_scaling(Outcome& o) {
  const std::size_t orders[] = {100, 200, 400};
  double mean[3] = {0, 0, 0};
  double fitted_c = 0;
  const int seeds = 3;
  for (int k = 0; k < 3; ++k) {
    for (int s = 0; s < seeds; ++s) {
      const DensityReport r = density_report(gen_uniform(orders[k], Seed{900 + static_cast<std::uint64_t>(s)}));
      mean[k] += std::abs(r.identity_residual) / seeds;
      fitted_c = std::max(fitted_c, std::abs(r.identity_residual) * static_cast<double>(orders[k]));
    }
  }
  const double ratio = mean[2] / mean[1];
  o.fail_if(fitted_c > 10, "fitted constant C above 10");
  o.fail_if(ratio > 0.6, "residual did not shrink to 0.6x from n=200 to n=400");
  o.detail << "mean |residual| at n=100,200,400: " << mean[0] << ", " << mean[1] << ", " << mean[2]
           << "; C=" << fitted_c << "; ratio 400/200=" << ratio;
}

void envelope_consistency(Outcome& o) {
  const int intervals = 100000;
  double worst_lower = 0, worst_upper = 0;
  int touching = 0;
  bool touch_zero = false, touch_32 = false, touch_8 = false;
  for (int i = 0; i <= intervals; ++i) {
    const double d = 0.125 * i / intervals;
    const double gd = g(d), lm = lower_envelope_lm(d), up = upper_envelope(d);
    worst_lower = std::min(worst_lower, gd - lm);
    worst_upper = std::min(worst_upper, up - gd);
    if (std::abs(gd - lm) <= 1e-9) {
      ++touching;
      const bool near0 = d <= 1e-4, near32 = std::abs(d - 1.0 / 32) <= 1e-4, near8 = 0.125 - d <= 1e-4;
      touch_zero |= near0;
      touch_32 |= near32;
      touch_8 |= near8;
      o.fail_if(!(near0 || near32 || near8), "lower envelope touches g away from 0, 1/32, 1/8");
    }
  }
  o.fail_if(worst_lower < -1e-12, "g below the lower envelope");
  o.fail_if(worst_upper < -1e-12, "g above the upper envelope");
  o.fail_if(!(touch_zero && touch_32 && touch_8), "missing contact at one of 0, 1/32, 1/8");
  o.detail << (intervals + 1) << " grid points, min g-lm=" << worst_lower << ", min upper-g=" << worst_upper
           << ", contact points=" << touching;
}

}  // namespace

int main(int argc, char** argv) {
  bool with_seven = false;
  if (const char* env = std::getenv("TOURN_ACCEPT_N7")) with_seven = std::string(env) == "1";
  for (int i = 1; i < argc; ++i) {
    if (std::string(argv[i]) == "--n7") with_seven = true;
  }

  struct Criterion {
    const char* name;
    std::function<void(Outcome&)> run;
  };
  const std::vector<Criterion> criteria = {
      {"exhaustive-bound", [&](Outcome& o) { exhaustive_bound(o, with_seven); }},
      {"equality-family", equality_family},
      {"spectral-identities", spectral_identities},
      {"bridge-identities", bridge_identities},
      {"construction-densities", construction_densities},
      {"optimizer", optimizer},
      {"identity-scaling", identity_scaling},
      {"envelope-consistency", envelope_consistency},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].run(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << i + 1 << "] " << criteria[i].name << " (" << secs
              << " s): " << o.detail.str() << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
