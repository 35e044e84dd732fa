#include "tourn/spectrum_opt.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>
#include <thread>
#include <type_traits>

#include "tourn/error.hpp"

namespace tourn {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kFitTol = 1e-13;    // accepted cube-sum mismatch of an exact fit
constexpr double kBoundSlack = 1e-12;
constexpr double kWitnessTol = 1e-10;

int multiplicity_cap(const SpectrumInstance& inst) {
  if (inst.multiplicity_cap > 0) return inst.multiplicity_cap;
  return static_cast<int>(std::ceil(1.0 / (2.0 * std::max(inst.rho, 1e-3)))) + 2;
}

// How copies of one value are spread over real slots (x) and real pairs (y).
struct Split {
  int x = 0;
  int y = 0;
};

struct Range {
  int lo = 0;
  int hi = 0;
};

// Real-slot counts a value of multiplicity m may use. A value capped by rho
// needs at least one real slot; an uncapped one lives on pairs only.
std::optional<Range> real_slot_range(int m, bool capped) {
  if (m == 0) return Range{0, 0};
  if (!capped) {
    if (m % 2 != 0) return std::nullopt;
    return Range{0, 0};
  }
  return Range{m % 2 == 0 ? 2 : 1, m};
}

std::optional<std::array<Split, 2>> assign_slots(int m1, bool capped1, int m2, bool capped2,
                                                 int reals, int pairs) {
  auto r1 = real_slot_range(m1, capped1);
  auto r2 = real_slot_range(m2, capped2);
  if (!r1 || !r2) return std::nullopt;
  const int base = r1->lo + r2->lo;
  int need = std::max(base, m1 + m2 - 2 * pairs);
  if ((need - base) % 2 != 0) ++need;
  if (need > std::min(reals, r1->hi + r2->hi)) return std::nullopt;
  int extra = need - base;
  const int add1 = std::min(extra, r1->hi - r1->lo);
  const int x1 = r1->lo + add1;
  const int x2 = r2->lo + (extra - add1);
  return std::array<Split, 2>{Split{x1, (m1 - x1) / 2}, Split{x2, (m2 - x2) / 2}};
}

// Roots of f on [lo, hi] where f decreases up to `crit` and increases after.
std::vector<double> valley_roots(const auto& f, double lo, double hi, double crit) {
  std::vector<double> roots;
  auto add = [&](double r) {
    for (double q : roots) {
      if (std::abs(q - r) <= 1e-9) return;
    }
    roots.push_back(r);
  };
  auto scan = [&](double p, double q) {
    if (p > q) return;
    const double fp = f(p), fq = f(q);
    if (std::abs(fp) <= kFitTol) add(p);
    if (std::abs(fq) <= kFitTol) add(q);
    if ((fp < 0) == (fq < 0)) return;
    double a = p, b = q, fa = fp;
    for (int it = 0; it < 200 && b - a > 0; ++it) {
      const double mid = 0.5 * (a + b);
      if (mid <= a || mid >= b) break;
      const double fm = f(mid);
      if ((fm < 0) == (fa < 0)) {
        a = mid;
        fa = fm;
      } else {
        b = mid;
      }
    }
    add(std::abs(f(a)) <= std::abs(f(b)) ? a : b);
  };
  if (crit >= lo && crit <= hi && std::abs(f(crit)) <= kFitTol) add(crit);
  scan(lo, std::min(crit, hi));
  scan(std::max(crit, lo), hi);
  return roots;
}

SpectrumSolution make_solution(double rho, std::vector<double> reals, std::vector<ComplexPair> pairs,
                               CaseTag tag) {
  SpectrumSolution s;
  s.case_tag = tag;
  s.witness.rho = rho;
  std::sort(reals.begin(), reals.end(), std::greater<>());
  std::sort(pairs.begin(), pairs.end(),
            [](const ComplexPair& x, const ComplexPair& y) { return x.a > y.a; });
  s.witness.reals = std::move(reals);
  s.witness.complex_pairs = std::move(pairs);
  s.value = s.witness.quartic_sum();
  return s;
}

void add_real_values(const SpectrumInstance& inst, int cap, std::vector<SpectrumSolution>& out) {
  const double rho = inst.rho;
  const int max_extra_rho = std::min(inst.k_max, cap);
  for (int mr = 0; mr <= max_extra_rho; ++mr) {
    const double lin = 0.5 - rho * (1 + mr);
    if (lin < -1e-15) break;
    const double cub = inst.s3 - rho * rho * rho * (1 + mr);
    const int free_reals = inst.k_max - mr;
    std::vector<double> rhos(static_cast<std::size_t>(mr), rho);

    if (std::abs(lin) <= 1e-15) {
      if (std::abs(cub) <= kFitTol) out.push_back(make_solution(rho, rhos, {}, CaseTag::kRealValues));
      continue;
    }
    for (int m1 = 1; m1 <= cap; ++m1) {
      for (int m2 = 0; m2 <= cap; ++m2) {
        for (int opt = 0; opt < 4; ++opt) {
          const bool capped1 = (opt & 1) != 0;
          const bool capped2 = (opt & 2) != 0;
          if (m2 == 0 && capped2) continue;
          auto slots = assign_slots(m1, capped1, m2, capped2, free_reals, inst.l_max);
          if (!slots) continue;
          const double ub1 = capped1 ? rho + kBoundSlack : kInf;
          const double ub2 = capped2 ? rho + kBoundSlack : kInf;

          std::vector<std::array<double, 2>> fits;
          if (m2 == 0) {
            const double r = lin / m1;
            if (r <= ub1 && std::abs(m1 * r * r * r - cub) <= kFitTol) fits.push_back({r, 0.0});
          } else {
            auto other = [&](double r) { return (lin - m1 * r) / m2; };
            auto f = [&](double r) {
              const double q = other(r);
              return m1 * r * r * r + m2 * q * q * q - cub;
            };
            const double lo = std::max(0.0, (lin - m2 * ub2) / m1);
            const double hi = std::min(ub1, lin / m1);
            for (double r : valley_roots(f, lo, hi, lin / (m1 + m2))) {
              const double q = std::max(other(r), 0.0);
              if (r > 0 && q > 0) fits.push_back({r, q});
            }
          }
          for (const auto& [r1, r2] : fits) {
            std::vector<double> reals = rhos;
            std::vector<ComplexPair> pairs;
            reals.insert(reals.end(), static_cast<std::size_t>((*slots)[0].x), r1);
            reals.insert(reals.end(), static_cast<std::size_t>((*slots)[1].x), r2);
            pairs.insert(pairs.end(), static_cast<std::size_t>((*slots)[0].y), ComplexPair{r1, 0.0});
            pairs.insert(pairs.end(), static_cast<std::size_t>((*slots)[1].y), ComplexPair{r2, 0.0});
            out.push_back(make_solution(rho, std::move(reals), std::move(pairs), CaseTag::kRealValues));
          }
        }
      }
    }
  }
}

void add_complex_pairs(const SpectrumInstance& inst, int cap, std::vector<SpectrumSolution>& out) {
  const double rho = inst.rho;
  int max_m = std::min(inst.k_max + 1, cap);
  if (rho > 0) max_m = std::min(max_m, static_cast<int>(std::floor(0.5 / rho + 1e-12)));
  const int max_pairs = std::min(inst.l_max, cap);
  for (int m = 1; m <= max_m; ++m) {
    for (int mp = 1; mp <= max_pairs; ++mp) {
      double a = (0.5 - m * rho) / (2.0 * mp);
      if (a < -1e-15) continue;
      a = std::max(a, 0.0);
      double b = 0.0;
      if (a <= 1e-15) {
        a = 0.0;
        if (std::abs(m * rho * rho * rho - inst.s3) > kFitTol) continue;
      } else {
        const double b2 = (m * rho * rho * rho + 2.0 * mp * a * a * a - inst.s3) / (6.0 * mp * a);
        if (b2 < -1e-14) continue;
        b = std::sqrt(std::max(b2, 0.0));
      }
      std::vector<double> reals(static_cast<std::size_t>(m - 1), rho);
      std::vector<ComplexPair> pairs(static_cast<std::size_t>(mp), ComplexPair{a, b});
      out.push_back(make_solution(rho, std::move(reals), std::move(pairs), CaseTag::kComplexPair));
    }
  }
}

}  // namespace

void validate(const SpectrumInstance& inst) {
  std::ostringstream msg;
  if (!(inst.s3 >= 0.0 && inst.s3 <= 0.125)) {
    msg << "s3 must lie in [0, 1/8], got " << inst.s3;
  } else if (!(inst.rho >= 0.0 && inst.rho <= 0.5)) {
    msg << "rho must lie in [0, 1/2], got " << inst.rho;
  } else if (inst.k_max < 0 || inst.l_max < 0 || inst.k_max + inst.l_max < 1) {
    msg << "need k_max, l_max >= 0 and k_max + l_max >= 1";
  } else if (inst.multiplicity_cap < 0) {
    msg << "multiplicity cap must be nonnegative";
  } else {
    return;
  }
  throw ValidationError(msg.str());
}

std::string to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::kRealValues:
      return "real-values";
    case CaseTag::kComplexPair:
      return "complex-pair";
    case CaseTag::kNumeric:
      return "numeric";
  }
  return "unknown";
}

double constraint_violation(const SpectrumInstance& inst, const SpectrumSolution& sol) {
  const auto& w = sol.witness;
  double v = std::max(std::abs(w.linear_sum() - 0.5), std::abs(w.cubic_sum() - inst.s3));
  v = std::max(v, std::abs(w.rho - inst.rho));
  for (double r : w.reals) v = std::max({v, r - inst.rho, -r});
  for (const auto& p : w.complex_pairs) v = std::max(v, -p.a);
  v = std::max(v, std::abs(w.quartic_sum() - sol.value));
  return v;
}

double rho_min(double s3) {
  if (!(s3 > 0.0 && s3 <= 0.125)) {
    std::ostringstream msg;
    msg << "rho_min needs s3 in (0, 1/8], got " << s3;
    throw ValidationError(msg.str());
  }
  // Regime m: z in [1/(2(m+1)), 1/(2m)], where s3 runs over [1/(8(m+1)^2), 1/(8m^2)].
  auto top = [](double m) { return 1.0 / (8.0 * m * m); };
  double m = std::max(1.0, std::floor(1.0 / std::sqrt(8.0 * s3)));
  while (m > 1 && s3 > top(m)) m -= 1;
  while (s3 <= top(m + 1)) m += 1;
  if (s3 == top(m)) return 1.0 / (2.0 * m);
  auto h = [m](double z) {
    const double rest = 0.5 - m * z;
    return m * z * z * z + rest * rest * rest;
  };
  double lo = 1.0 / (2.0 * (m + 1)), hi = 1.0 / (2.0 * m);
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (h(mid) < s3 ? lo : hi) = mid;
  }
  const double z = std::abs(h(lo) - s3) <= std::abs(h(hi) - s3) ? lo : hi;
  if (std::abs(h(z) - s3) > 1e-13) {
    std::ostringstream msg;
    msg << "rho_min bisection stalled at residual " << h(z) - s3;
    throw NumericalError(msg.str());
  }
  return z;
}

std::vector<SpectrumSolution> enumerate_candidates(const SpectrumInstance& inst) {
  validate(inst);
  std::vector<SpectrumSolution> out;
  if (inst.s3 > 0 && inst.rho < rho_min(inst.s3) - 1e-9) return out;
  const int cap = multiplicity_cap(inst);
  add_real_values(inst, cap, out);
  add_complex_pairs(inst, cap, out);
  std::erase_if(out, [&](const SpectrumSolution& s) { return constraint_violation(inst, s) > kWitnessTol; });
  return out;
}

std::optional<SpectrumSolution> try_solve_structured(const SpectrumInstance& inst) {
  auto all = enumerate_candidates(inst);
  if (all.empty()) return std::nullopt;
  return *std::min_element(all.begin(), all.end(),
                           [](const SpectrumSolution& x, const SpectrumSolution& y) { return x.value < y.value; });
}

SpectrumSolution solve_structured(const SpectrumInstance& inst) {
  if (auto s = try_solve_structured(inst)) return *s;
  std::ostringstream msg;
  msg << "no feasible spectrum for s3=" << inst.s3 << ", rho=" << inst.rho;
  if (inst.s3 > 0) msg << " (rho_min=" << rho_min(inst.s3) << ")";
  throw InfeasibleError(msg.str());
}

namespace {

// Imaginary parts are unbounded. The box on them starts here and grows
// while the best point sits on it.
constexpr double kInitialImagCap = 8.0;
constexpr double kMaxImagCap = 1e7;

// Variables: k reals, then l real parts, then l imaginary parts.
struct NumericProblem {
  double s3, rho;
  int k, l;
  std::vector<double> lower, upper;

  NumericProblem(const SpectrumInstance& inst, int k_, int l_, double imag_cap)
      : s3(inst.s3), rho(inst.rho), k(k_), l(l_) {
    const auto n = static_cast<std::size_t>(k + 2 * l);
    lower.assign(n, 0.0);
    upper.assign(n, 0.0);
    for (int i = 0; i < k; ++i) upper[static_cast<std::size_t>(i)] = rho;
    for (int i = 0; i < l; ++i) {
      upper[static_cast<std::size_t>(k + i)] = 0.25;
      upper[static_cast<std::size_t>(k + l + i)] = imag_cap;
    }
  }

  std::size_t size() const { return lower.size(); }

  void project(std::vector<double>& x) const {
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = std::clamp(x[i], lower[i], upper[i]);
  }

  // Objective f, constraints c and their gradients.
  template <typename T>
  void eval(const std::vector<double>& x, T& f, std::array<T, 2>& c, std::type_identity_t<std::vector<T>>* gf,
            std::type_identity_t<std::array<std::vector<T>, 2>>* gc) const {
    const T p = rho;
    f = p * p * p * p;
    c = {p - T(0.5), p * p * p - T(s3)};
    if (gf) {
      gf->assign(size(), T(0));
      (*gc)[0].assign(size(), T(0));
      (*gc)[1].assign(size(), T(0));
    }
    for (int i = 0; i < k; ++i) {
      const auto u = static_cast<std::size_t>(i);
      const T r = x[u];
      f += r * r * r * r;
      c[0] += r;
      c[1] += r * r * r;
      if (gf) {
        (*gf)[u] = 4 * r * r * r;
        (*gc)[0][u] = 1;
        (*gc)[1][u] = 3 * r * r;
      }
    }
    for (int i = 0; i < l; ++i) {
      const auto ia = static_cast<std::size_t>(k + i);
      const auto ib = static_cast<std::size_t>(k + l + i);
      const T a = x[ia], b = x[ib];
      f += 2 * (a * a * a * a - 6 * a * a * b * b + b * b * b * b);
      c[0] += 2 * a;
      c[1] += 2 * (a * a * a - 3 * a * b * b);
      if (gf) {
        (*gf)[ia] = 2 * (4 * a * a * a - 12 * a * b * b);
        (*gf)[ib] = 2 * (4 * b * b * b - 12 * a * a * b);
        (*gc)[0][ia] = 2;
        (*gc)[1][ia] = 6 * (a * a - b * b);
        (*gc)[1][ib] = -12 * a * b;
      }
    }
  }

  double violation(const std::vector<double>& x) const {
    double f;
    std::array<double, 2> c;
    eval(x, f, c, nullptr, nullptr);
    return std::max(std::abs(c[0]), std::abs(c[1]));
  }
};

struct Augmented {
  explicit Augmented(const NumericProblem& problem) : p(problem) {}

  const NumericProblem& p;
  std::array<double, 2> mu{};
  double beta = 100.0;

  // Scratch space reused across evaluations.
  mutable std::vector<double> gf;
  mutable std::array<std::vector<double>, 2> gc;

  double value(const std::vector<double>& x, std::vector<double>* grad) const {
    double f;
    std::array<double, 2> c;
    p.eval(x, f, c, grad ? &gf : nullptr, grad ? &gc : nullptr);
    if (grad) {
      grad->assign(x.size(), 0.0);
      for (std::size_t i = 0; i < x.size(); ++i) {
        (*grad)[i] = gf[i];
        for (int e = 0; e < 2; ++e) (*grad)[i] += (mu[e] + beta * c[e]) * gc[e][i];
      }
    }
    return f + mu[0] * c[0] + mu[1] * c[1] + 0.5 * beta * (c[0] * c[0] + c[1] * c[1]);
  }
};

// Projected gradient with Barzilai-Borwein steps and Armijo backtracking.
void minimize_box(const Augmented& aug, std::vector<double>& x, int max_iter) {
  const auto& p = aug.p;
  std::vector<double> g, x_new, g_new;
  double fx = aug.value(x, &g);
  double step = 1e-2;
  int stalled = 0;
  for (int it = 0; it < max_iter; ++it) {
    double pg = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      pg = std::max(pg, std::abs(std::clamp(x[i] - g[i], p.lower[i], p.upper[i]) - x[i]));
    }
    if (pg < 1e-14) return;
    double t = step;
    double f_new = fx;
    bool accepted = false;
    for (int bt = 0; bt < 60; ++bt) {
      x_new = x;
      for (std::size_t i = 0; i < x.size(); ++i) x_new[i] -= t * g[i];
      p.project(x_new);
      double decrease = 0.0;
      for (std::size_t i = 0; i < x.size(); ++i) decrease += g[i] * (x[i] - x_new[i]);
      f_new = aug.value(x_new, &g_new);
      if (f_new <= fx - 1e-4 * decrease) {
        accepted = true;
        break;
      }
      t *= 0.5;
    }
    if (!accepted) return;
    stalled = fx - f_new <= 1e-15 * std::max(1.0, std::abs(fx)) ? stalled + 1 : 0;
    if (stalled >= 20) return;
    double ss = 0.0, sy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double s = x_new[i] - x[i], y = g_new[i] - g[i];
      ss += s * s;
      sy += s * y;
    }
    step = sy > 0 ? std::clamp(ss / sy, 1e-12, 1e6) : std::min(t * 4, 1e6);
    x.swap(x_new);
    g.swap(g_new);
    fx = f_new;
  }
}

// Minimum-norm Newton steps on the two equality constraints over the free
// coordinates.
void polish(const NumericProblem& p, std::vector<double>& x) {
  for (int it = 0; it < 50; ++it) {
    double f;
    std::array<double, 2> c;
    std::vector<double> gf;
    std::array<std::vector<double>, 2> gc;
    p.eval(x, f, c, &gf, &gc);
    if (std::max(std::abs(c[0]), std::abs(c[1])) <= 1e-15) return;
    std::vector<char> free(x.size(), 1);
    double m00 = 0, m01 = 0, m11 = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const bool at_lo = x[i] <= p.lower[i] && (gc[0][i] * c[0] + gc[1][i] * c[1]) > 0;
      const bool at_hi = x[i] >= p.upper[i] && (gc[0][i] * c[0] + gc[1][i] * c[1]) < 0;
      if (at_lo || at_hi) {
        free[i] = 0;
        continue;
      }
      m00 += gc[0][i] * gc[0][i];
      m01 += gc[0][i] * gc[1][i];
      m11 += gc[1][i] * gc[1][i];
    }
    const double det = m00 * m11 - m01 * m01;
    double y0, y1;
    if (std::abs(det) > 1e-24 * std::max(1.0, m00 * m11)) {
      y0 = (m11 * c[0] - m01 * c[1]) / det;
      y1 = (m00 * c[1] - m01 * c[0]) / det;
    } else {
      const double s = m00 + m11;
      if (s <= 0) return;
      y0 = c[0] / s;
      y1 = c[1] / s;
    }
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (free[i]) x[i] -= gc[0][i] * y0 + gc[1][i] * y1;
    }
    p.project(x);
  }
}

// Objective moved to first order onto the constraint surface, f - lambda.c,
// with least-squares multipliers over the coordinates off their bounds.
// Near rho = 1/2 the objective scales like 1/a^2 for tiny a, so round-off in
// the constraints would otherwise dominate the reported value.
double corrected_value(const NumericProblem& p, const std::vector<double>& x) {
  using L = long double;
  L f;
  std::array<L, 2> c;
  std::vector<L> gf;
  std::array<std::vector<L>, 2> gc;
  p.eval(x, f, c, &gf, &gc);
  L m00 = 0, m01 = 0, m11 = 0, r0 = 0, r1 = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] <= p.lower[i] || x[i] >= p.upper[i]) continue;
    m00 += gc[0][i] * gc[0][i];
    m01 += gc[0][i] * gc[1][i];
    m11 += gc[1][i] * gc[1][i];
    r0 += gc[0][i] * gf[i];
    r1 += gc[1][i] * gf[i];
  }
  const L det = m00 * m11 - m01 * m01;
  if (!(std::abs(det) > 1e-20L * std::max<L>(1, m00 * m11))) return static_cast<double>(f);
  const L l0 = (m11 * r0 - m01 * r1) / det;
  const L l1 = (m00 * r1 - m01 * r0) / det;
  return static_cast<double>(f - l0 * c[0] - l1 * c[1]);
}

}  // namespace

SpectrumSolution solve_numeric(const SpectrumInstance& inst, int k, int l, const NumericOptions& options) {
  if (!(inst.s3 >= 0.0 && inst.s3 <= 0.125) || !(inst.rho >= 0.0 && inst.rho <= 0.5)) validate(inst);
  if (k < 0 || l < 0) throw ValidationError("k and l must be nonnegative");
  if (options.restarts < 1) throw ValidationError("need at least one restart");
  std::optional<std::vector<double>> best;
  double best_value = kInf;
  double closest = kInf;
  double cap = kInitialImagCap;
  std::optional<NumericProblem> current;
  struct Outcome {
    double violation = kInf;
    double value = kInf;
    std::vector<double> x;
  };
  std::vector<Outcome> outcomes(static_cast<std::size_t>(options.restarts));
  auto run_one = [&](int run) {
    const NumericProblem& problem = *current;
    Outcome& out = outcomes[static_cast<std::size_t>(run)];
    std::mt19937_64 gen(options.seed ^ static_cast<std::uint64_t>(run));
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> x(problem.size());
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = std::min(problem.upper[i], 1.0) * unit(gen);
    double mass = 0.0;
    for (int i = 0; i < k; ++i) mass += x[static_cast<std::size_t>(i)];
    for (int i = 0; i < l; ++i) mass += 2 * x[static_cast<std::size_t>(k + i)];
    if (mass > 0) {
      const double scale = (0.5 - inst.rho) / mass;
      for (int i = 0; i < k + l; ++i) x[static_cast<std::size_t>(i)] *= scale;
      problem.project(x);
    }
    // Every other start picks a common imaginary part that meets the cubic constraint.
    if (l > 0 && run % 2 == 1) {
      double need = inst.rho * inst.rho * inst.rho - inst.s3, re = 0.0;
      for (int i = 0; i < k; ++i) need += std::pow(x[static_cast<std::size_t>(i)], 3);
      for (int i = 0; i < l; ++i) {
        const double a = x[static_cast<std::size_t>(k + i)];
        need += 2 * a * a * a;
        re += a;
      }
      if (need > 0 && re > 0) {
        const double b = std::sqrt(need / (6 * re));
        for (int i = 0; i < l; ++i) x[static_cast<std::size_t>(k + l + i)] = b;
        problem.project(x);
      }
    }

    Augmented aug(problem);
    double prev = kInf;
    for (int outer = 0; outer < 40; ++outer) {
      minimize_box(aug, x, 3000);
      double f;
      std::array<double, 2> c;
      problem.eval(x, f, c, nullptr, nullptr);
      const double viol = std::max(std::abs(c[0]), std::abs(c[1]));
      if (viol <= 1e-12) break;
      aug.mu[0] += aug.beta * c[0];
      aug.mu[1] += aug.beta * c[1];
      if (viol > 0.25 * prev) aug.beta = std::min(aug.beta * 10.0, 1e12);
      prev = viol;
    }
    polish(problem, x);
    double f;
    std::array<double, 2> c;
    problem.eval(x, f, c, nullptr, nullptr);
    // The linear residual is measured against the mass left after rho; the
    // pairs' real parts live on that scale.
    const double mass_left = std::min(1.0, 1.0 - 2.0 * inst.rho);
    out.violation = std::max(std::abs(c[0]) / (mass_left > 0 ? mass_left : 1.0), std::abs(c[1]));
    out.value = f;
    out.x = std::move(x);
  };

  // Restarts are independent; results are reduced in run order so the
  // answer does not depend on the worker count.
  const unsigned workers = std::min<unsigned>(
      options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency()),
      static_cast<unsigned>(options.restarts));
  for (;;) {
    current.emplace(inst, k, l, cap);
    if (workers <= 1) {
      for (int run = 0; run < options.restarts; ++run) run_one(run);
    } else {
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
          for (int run = static_cast<int>(w); run < options.restarts; run += static_cast<int>(workers)) run_one(run);
        });
      }
      for (auto& t : pool) t.join();
    }
    std::optional<std::size_t> winner;
    for (std::size_t r = 0; r < outcomes.size(); ++r) {
      closest = std::min(closest, outcomes[r].violation);
      if (outcomes[r].violation <= options.tolerance &&
          (!winner || outcomes[r].value < outcomes[*winner].value))
        winner = r;
    }
    bool on_cap = false;
    if (winner) {
      // Rounds keep the best corrected value seen so far.
      const double v = corrected_value(*current, outcomes[*winner].x);
      if (v < best_value) {
        best_value = v;
        best = outcomes[*winner].x;
      }
    }
    // Without a feasible start any run pressing on the cap may need more
    // room; otherwise only the winner matters.
    for (std::size_t r = 0; r < outcomes.size(); ++r) {
      if (winner && r != *winner) continue;
      for (int i = 0; i < l; ++i) on_cap = on_cap || outcomes[r].x[static_cast<std::size_t>(k + l + i)] > cap / 2;
    }
    if (!on_cap || cap >= kMaxImagCap) break;
    cap *= 8;
  }
  if (!best) {
    std::ostringstream msg;
    msg << "no start met the constraints for s3=" << inst.s3 << ", rho=" << inst.rho << ", k=" << k
        << ", l=" << l << " after " << options.restarts << " restarts; smallest violation " << closest;
    throw NumericalError(msg.str());
  }
  std::vector<double> reals(best->begin(), best->begin() + k);
  std::vector<ComplexPair> pairs;
  for (int i = 0; i < l; ++i) {
    pairs.push_back({(*best)[static_cast<std::size_t>(k + i)], (*best)[static_cast<std::size_t>(k + l + i)]});
  }
  SpectrumSolution sol = make_solution(inst.rho, std::move(reals), std::move(pairs), CaseTag::kNumeric);
  sol.value = best_value;
  return sol;
}

RhoSweepResult min_over_rho(double s3, int grid_points) {
  if (grid_points < 2) throw ValidationError("rho grid needs at least two points");
  const double lo = rho_min(s3);
  const double hi = 0.5;
  RhoSweepResult best;
  best.value = kInf;
  auto value_at = [&](double rho) {
    SpectrumInstance inst;
    inst.s3 = s3;
    inst.rho = std::clamp(rho, 0.0, 0.5);
    auto sol = try_solve_structured(inst);
    if (!sol) return kInf;
    if (sol->value < best.value) {
      best.value = sol->value;
      best.rho = inst.rho;
      best.solution = *sol;
    }
    return sol->value;
  };

  int arg = -1;
  double grid_best = kInf;
  for (int i = 0; i < grid_points; ++i) {
    const double rho = i + 1 == grid_points ? hi : lo + (hi - lo) * i / (grid_points - 1);
    const double v = value_at(rho);
    if (v < grid_best) {
      grid_best = v;
      arg = i;
    }
  }
  if (arg < 0) {
    std::ostringstream msg;
    msg << "no feasible rho for s3=" << s3;
    throw InfeasibleError(msg.str());
  }
  const double h = (hi - lo) / (grid_points - 1);
  double a = std::max(lo, lo + h * (arg - 1));
  double b = std::min(hi, lo + h * (arg + 1));
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - phi * (b - a), d = a + phi * (b - a);
  double fc = value_at(c), fd = value_at(d);
  for (int it = 0; it < 200 && b - a > 1e-14; ++it) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - phi * (b - a);
      fc = value_at(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + phi * (b - a);
      fd = value_at(d);
    }
  }
  return best;
}

}  // namespace tourn
