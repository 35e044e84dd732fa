#include <cmath>
#include <functional>
#include <iostream>
#include <map>
#include <random>

#include "commands.hpp"
#include "io.hpp"
#include "tourn/bounds.hpp"
#include "tourn/counting.hpp"
#include "tourn/enumerate.hpp"
#include "tourn/error.hpp"
#include "tourn/generators.hpp"
#include "tourn/serialize.hpp"
#include "tourn/spectral.hpp"
#include "tourn/spectrum_opt.hpp"
#include "tourn/trn.hpp"

namespace tourn::cli {

using nlohmann::json;

namespace {

struct Report {
  bool pass = true;
  json checks = json::array();
  json witness = nullptr;

  // `value` must not exceed `limit` (or, with at_least, must not fall below it).
  bool check(const std::string& name, double value, double limit, bool at_least = false) {
    const bool ok = at_least ? value >= limit : value <= limit;
    checks.push_back({{"name", name}, {"value", value}, {at_least ? "min" : "max", limit}, {"pass", ok}});
    pass = pass && ok;
    return ok;
  }

  void fail_with(json w) {
    if (witness.is_null()) witness = std::move(w);
  }
};

struct Context {
  std::size_t max_n;
  std::uint64_t seed;
  int samples;
  unsigned threads;

  int count(int fallback) const { return samples > 0 ? samples : fallback; }
};

double hom_density(const Tournament& t, int len) {
  return static_cast<double>(cycle_homs(t, len)) / std::pow(static_cast<double>(t.n()), len);
}

void small_exhaustive(const Context& c, Report& r) {
  if (c.max_n > EnumerationOptions::kDefaultMaxOrder) throw ValidationError("--max-n is capped at 7");
  double worst = std::numeric_limits<double>::infinity();
  std::optional<EnumerationSummary> worst_summary;
  for (std::size_t n = 3; n <= c.max_n; ++n) {
    EnumerationOptions opts;
    opts.threads = c.threads;
    const EnumerationSummary s = summarize_all(n, opts);
    if (s.min_gap && *s.min_gap < worst) {
      worst = *s.min_gap;
      worst_summary = s;
    }
  }
  if (!worst_summary) return;
  if (!r.check("min sigma4 - g(sigma3) over sigma3 >= 1/72", worst, -1e-10, true))
    r.fail_with(summary_json(*worst_summary)["argmin"]);
}

void equality_family(const Context& c, Report& r) {
  std::mt19937_64 gen(c.seed);
  std::uniform_real_distribution<double> u(0.0, 0.5);
  const std::size_t orders[] = {20, 100, 500};
  double min_s3 = 1, worst_g = 0, worst_z = 0;
  json worst_instance;
  for (int i = 0; i < c.count(100); ++i) {
    std::vector<double> z(orders[i % 3]);
    for (auto& x : z) x = u(gen);
    const TournamentMatrix a = matrix_potential(z);
    const double s3 = sigma(a, 3);
    const double err = std::abs(sigma(a, 4) - g(std::min(s3, 0.125)));
    double zerr = std::numeric_limits<double>::infinity();
    if (const auto got = extremality_test(a, 1e-9)) {
      zerr = 0;
      for (std::size_t v = 0; v < z.size(); ++v) zerr = std::max(zerr, std::abs((*got)[v] - (*got)[0] - z[v] + z[0]));
    }
    if (s3 < min_s3 || err > worst_g || zerr > worst_z) worst_instance = {{"index", i}, {"z", z}};
    min_s3 = std::min(min_s3, s3);
    worst_g = std::max(worst_g, err);
    worst_z = std::max(worst_z, zerr);
  }
  bool ok = r.check("min sigma3", min_s3, 1.0 / 32 - 1e-10, true);
  ok &= r.check("max |sigma4 - g(sigma3)|", worst_g, 1e-9);
  ok &= r.check("max potential recovery error", worst_z, 1e-9);
  if (!ok) r.fail_with(worst_instance);
}

void spectral_identities(const Context& c, Report& r) {
  const std::size_t orders[] = {51, 100, 301};
  double worst_sigma = 0, worst_cos = 0, worst_cs = -1;
  std::string worst_trn;
  for (int i = 0; i < c.count(50); ++i) {
    const Tournament t = gen_uniform(orders[i % 3], Seed{c.seed ^ static_cast<std::uint64_t>(i)});
    const TournamentMatrix a = to_matrix(t);
    const SpectralProfile p = skew_decompose(a);
    double e = 0;
    for (int len : {3, 4}) e = std::max(e, std::abs(reconstruct_sigma(p, len) - sigma(a, len)));
    const double w = p.weighted_square_sum();
    const double cs = w * w - p.quartic_sum();
    const double cos_err = std::abs(p.cos_square_sum() - 1);
    if (e > worst_sigma || cos_err > worst_cos || cs > worst_cs) worst_trn = write_trn(t);
    worst_sigma = std::max(worst_sigma, e);
    worst_cos = std::max(worst_cos, cos_err);
    worst_cs = std::max(worst_cs, cs);
  }
  bool ok = r.check("max |reconstruct_sigma - sigma|", worst_sigma, 1e-8);
  ok &= r.check("max |sum cos^2 - 1|", worst_cos, 1e-8);
  ok &= r.check("max (sum lambda^2 cos^2)^2 - sum lambda^4", worst_cs, 1e-8);
  if (!ok) r.fail_with(worst_trn);
}

void bridge_identities(const Context& c, Report& r) {
  if (c.max_n > EnumerationOptions::kDefaultMaxOrder) throw ValidationError("--max-n is capped at 7");
  double worst = 0;
  std::string worst_trn;
  auto visit = [&](const Tournament& t) {
    const double n = static_cast<double>(t.n());
    const TournamentMatrix a = to_matrix(t);
    const double t3 = hom_density(t, 3), t4 = hom_density(t, 4);
    const double e = std::max(std::abs(sigma(a, 3) - (t3 + 1 / (8 * n * n))),
                              std::abs(sigma(a, 4) - (t4 + 2 * t3 / n + 1 / (16 * n * n * n))));
    if (e > worst) {
      worst = e;
      worst_trn = write_trn(t);
    }
  };
  for (std::size_t n = 1; n <= c.max_n; ++n) enumerate_all(n, [&](std::uint64_t, const Tournament& t) { visit(t); });
  for (int i = 0; i < c.count(50); ++i)
    visit(gen_uniform(7 + 4 * static_cast<std::size_t>(i), Seed{c.seed ^ static_cast<std::uint64_t>(i)}));
  if (!r.check("max bridge identity error", worst, 1e-10)) r.fail_with(worst_trn);
}

void identity_t4(const Context& c, Report& r) {
  const std::size_t orders[] = {100, 200, 400};
  const int seeds = c.count(3);
  double mean[3] = {0, 0, 0};
  double fitted = 0;
  for (int k = 0; k < 3; ++k) {
    for (int s = 0; s < seeds; ++s) {
      const DensityReport d = density_report(gen_uniform(orders[k], Seed{c.seed ^ static_cast<std::uint64_t>(s)}));
      mean[k] += std::abs(d.identity_residual) / seeds;
      fitted = std::max(fitted, std::abs(d.identity_residual) * static_cast<double>(orders[k]));
    }
  }
  bool ok = r.check("fitted C in |residual| <= C/n", fitted, 10);
  ok &= r.check("mean residual ratio n=400 / n=200", mean[2] / mean[1], 0.6);
  if (!ok) r.fail_with({{"mean_residual", {{"100", mean[0]}, {"200", mean[1]}, {"400", mean[2]}}}});
}

void construction_densities(const Context& c, Report& r) {
  struct Target {
    double z, t3, t4;
  };
  double worst_blowup = 0;
  json worst;
  for (const Target& target : {Target{0.5, 1.0 / 32, 1.0 / 128}, Target{1.0 / 3, 1.0 / 72, 1.0 / 432}}) {
    const Tournament t = gen_blowup({target.z, 3000, Seed{c.seed}});
    const double e = std::max(std::abs(hom_density(t, 3) - target.t3), std::abs(hom_density(t, 4) - target.t4));
    if (e > worst_blowup) worst = {{"family", "blowup"}, {"z", target.z}, {"n", 3000}, {"seed", c.seed}};
    worst_blowup = std::max(worst_blowup, e);
  }
  double worst_circ = 0;
  for (double xi : {0.1, 0.2, 0.3, 0.4, 0.5}) {
    const Tournament t = gen_circular(xi, 1001);
    worst_circ = std::max(worst_circ, std::abs(hom_density(t, 4) - 2 * hom_density(t, 3) / 3));
  }
  if (!r.check("max blow-up density error", worst_blowup, 0.005)) r.fail_with(worst);
  if (!r.check("max circular |t4 - 2 t3 / 3|", worst_circ, 0.01)) r.fail_with({{"family", "circular"}, {"n", 1001}});
}

void optimizer_crosscheck(const Context& c, Report& r) {
  std::mt19937_64 gen(c.seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst = 0, worst_bound = 1;
  json worst_instance;
  for (int i = 0; i < c.count(20); ++i) {
    SpectrumInstance inst;
    inst.s3 = 1.0 / 72 + u(gen) * (1.0 / 8 - 1.0 / 72);
    const double lo = rho_min(inst.s3);
    inst.rho = lo + u(gen) * (0.5 - lo);
    inst.k_max = 1 + i % 3;
    inst.l_max = 1 + (i / 3) % 2;
    const json instance{{"s3", inst.s3}, {"rho", inst.rho}, {"k_max", inst.k_max}, {"l_max", inst.l_max}};
    NumericOptions opts;
    opts.restarts = 48;
    opts.seed = c.seed ^ static_cast<std::uint64_t>(i);
    const auto structured = try_solve_structured(inst);
    std::optional<double> numeric;
    try {
      numeric = solve_numeric(inst, inst.k_max, inst.l_max, opts).value;
    } catch (const NumericalError&) {
    }
    double gap = 0;
    if (structured && numeric) {
      gap = std::abs(*numeric - structured->value);
      worst_bound = std::min(worst_bound, structured->value - g(inst.s3));
    } else if (structured.has_value() != numeric.has_value()) {
      gap = std::numeric_limits<double>::infinity();
    }
    if (gap > worst) {
      worst = gap;
      worst_instance = instance;
    }
  }
  if (!r.check("max |structured - numeric|", worst, 1e-6)) r.fail_with(worst_instance);
  r.check("min structured - g(s3)", worst_bound, -1e-9, true);
}

void region_consistency(const Context& c, Report& r) {
  const int intervals = c.count(100000);
  double worst_lower = 0, worst_upper = 0, stray = -1;
  for (int i = 0; i <= intervals; ++i) {
    const double d = 0.125 * i / intervals;
    const double gd = g(d), lm = lower_envelope_lm(d);
    worst_lower = std::min(worst_lower, gd - lm);
    worst_upper = std::min(worst_upper, upper_envelope(d) - gd);
    const bool near = d <= 1e-4 || std::abs(d - 1.0 / 32) <= 1e-4 || 0.125 - d <= 1e-4;
    if (std::abs(gd - lm) <= 1e-9 && !near && stray < 0) stray = d;
  }
  r.check("min g - lower envelope", worst_lower, -1e-12, true);
  r.check("min upper envelope - g", worst_upper, -1e-12, true);
  if (!r.check("contacts away from 0, 1/32, 1/8", stray < 0 ? 0 : 1, 0)) r.fail_with({{"d", stray}});
}

const std::map<std::string, std::function<void(const Context&, Report&)>>& suites() {
  static const std::map<std::string, std::function<void(const Context&, Report&)>> table = {
      {"small-exhaustive", small_exhaustive},
      {"equality-family", equality_family},
      {"spectral-identities", spectral_identities},
      {"bridge-identities", bridge_identities},
      {"identity-t4", identity_t4},
      {"construction-densities", construction_densities},
      {"optimizer-crosscheck", optimizer_crosscheck},
      {"region-consistency", region_consistency},
  };
  return table;
}

}  // namespace

int cmd_verify(const VerifyOptions& o) {
  const Context c{o.max_n, o.seed, o.samples, o.threads};
  std::vector<std::string> names;
  if (o.suite == "all") {
    for (const auto& [name, fn] : suites()) names.push_back(name);
  } else if (suites().count(o.suite)) {
    names.push_back(o.suite);
  } else {
    throw ValidationError("unknown suite '" + o.suite + "'");
  }

  json reports = json::array();
  bool pass = true;
  for (const auto& name : names) {
    std::cerr << "running " << name << '\n';
    Report r;
    try {
      suites().at(name)(c, r);
    } catch (const ValidationError&) {
      throw;
    } catch (const std::exception& e) {
      r.pass = false;
      r.fail_with({{"error", e.what()}});
    }
    pass = pass && r.pass;
    reports.push_back({{"suite", name}, {"pass", r.pass}, {"checks", r.checks}, {"witness", r.witness}});
  }
  print_json(std::cout, names.size() == 1 ? reports[0] : json{{"pass", pass}, {"suites", reports}});
  return pass ? kExitOk : kExitVerification;
}

}  // namespace tourn::cli
