#include "tourn/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "tourn/counting.hpp"
#include "tourn/error.hpp"

namespace tourn {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kAngleCut = 1e-12;

double angle_from_cos(double c) {
  if (c < kAngleCut) return std::numbers::pi / 2;
  return std::acos(std::min(c, 1.0));
}

// Removes the components along `basis` twice (classical Gram-Schmidt with
// reorthogonalisation).
void orthogonalize(Eigen::VectorXd& v, const std::vector<Eigen::VectorXd>& basis) {
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& b : basis) v -= b.dot(v) * b;
  }
}

struct Plane {
  Eigen::VectorXd u;
  Eigen::VectorXd w;
  double sigma = 0.0;  // lambda * n
  double cos = 0.0;
};

}  // namespace

double SpectralProfile::weighted_square_sum() const {
  double s = 0.0;
  for (const auto& p : pairs) {
    double c = std::cos(p.alpha);
    s += p.lambda * p.lambda * c * c;
  }
  return s;
}

double SpectralProfile::quartic_sum() const {
  double s = 0.0;
  for (const auto& p : pairs) s += std::pow(p.lambda, 4);
  return s;
}

double SpectralProfile::cos_square_sum() const {
  double s = 0.0;
  for (const auto& p : pairs) s += std::pow(std::cos(p.alpha), 2);
  if (alpha_extra) s += std::pow(std::cos(*alpha_extra), 2);
  return s;
}

SpectralProfile skew_decompose(const TournamentMatrix& a) {
  const auto n = static_cast<Eigen::Index>(a.n());
  const double dn = static_cast<double>(n);
  const double sqrt_n = std::sqrt(dn);
  const Eigen::MatrixXd b = Eigen::MatrixXd::Ones(n, n) - 2.0 * a.entries();
  const Eigen::MatrixXd s = b.transpose() * b;
  const Eigen::VectorXd j = Eigen::VectorXd::Ones(n);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(s);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("symmetric eigensolver did not converge");
  }
  // Eigen returns ascending order; walk it from the top.
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::reverse(order.begin(), order.end());
  auto mu = [&](std::size_t k) { return solver.eigenvalues()(order[k]); };
  auto vec = [&](std::size_t k) -> Eigen::VectorXd { return solver.eigenvectors().col(order[k]); };

  const double mu_max = n > 0 ? std::max(mu(0), 0.0) : 0.0;
  const double noise = 64.0 * kEps * mu_max;
  const double zero_mu = std::max(std::pow(1e-10 * dn, 2), noise);

  std::size_t nonzero = 0;
  while (nonzero < order.size() && mu(nonzero) > zero_mu) ++nonzero;
  if (nonzero % 2 == 1) --nonzero;

  std::vector<Plane> planes;
  std::vector<Eigen::VectorXd> used;
  std::size_t start = 0;
  while (start < nonzero) {
    std::size_t end = start + 1;
    while (end < nonzero &&
           ((end - start) % 2 == 1 || mu(end - 1) - mu(end) <= 1e-10 * mu(end - 1) + noise)) {
      ++end;
    }
    std::vector<Eigen::VectorXd> group;
    for (std::size_t k = start; k < end; ++k) group.push_back(vec(k));

    Eigen::VectorXd pj = Eigen::VectorXd::Zero(n);
    for (const auto& q : group) pj += q.dot(j) * q;

    std::vector<Eigen::VectorXd> local;
    const std::size_t plane_count = group.size() / 2;
    for (std::size_t p = 0; p < plane_count; ++p) {
      Eigen::VectorXd u;
      if (p == 0 && pj.norm() / sqrt_n >= kAngleCut) {
        u = pj;
      } else {
        double best = -1.0;
        for (const auto& q : group) {
          Eigen::VectorXd cand = q;
          orthogonalize(cand, local);
          if (cand.norm() > best) {
            best = cand.norm();
            u = cand;
          }
        }
      }
      orthogonalize(u, local);
      u.normalize();
      Eigen::VectorXd w = -(b * u);
      const double sigma = w.norm();
      local.push_back(u);
      orthogonalize(w, local);
      w.normalize();
      local.push_back(w);

      double dot = u.dot(j) / sqrt_n;
      if (dot < 0) {
        u = -u;
        w = -w;
        dot = -dot;
      }
      planes.push_back({u, w, sigma, dot});
    }
    for (auto& v : local) used.push_back(std::move(v));
    start = end;
  }

  // Zero space: the remaining eigenvectors, with j's component gathered
  // into a single vector.
  Eigen::VectorXd p0 = Eigen::VectorXd::Zero(n);
  for (std::size_t k = nonzero; k < order.size(); ++k) {
    Eigen::VectorXd q = vec(k);
    p0 += q.dot(j) * q;
  }
  const double zero_cos = std::min(p0.norm() / sqrt_n, 1.0);

  // Factorisation checks.
  const auto m = static_cast<Eigen::Index>(planes.size());
  Eigen::MatrixXd us(n, m), ws(n, m);
  Eigen::VectorXd sig(m);
  for (Eigen::Index k = 0; k < m; ++k) {
    us.col(k) = planes[static_cast<std::size_t>(k)].u;
    ws.col(k) = planes[static_cast<std::size_t>(k)].w;
    sig(k) = planes[static_cast<std::size_t>(k)].sigma;
  }
  const Eigen::MatrixXd scaled_w = ws * sig.asDiagonal();
  const Eigen::MatrixXd b_hat = us * scaled_w.transpose() - scaled_w * us.transpose();
  const double residual = n > 0 ? (b - b_hat).cwiseAbs().maxCoeff() : 0.0;
  double w_dot_j = 0.0;
  for (const auto& p : planes) w_dot_j = std::max(w_dot_j, std::abs(p.w.dot(j)));
  double gram_err = 0.0;
  if (m > 0) {
    Eigen::MatrixXd all(n, 2 * m);
    all << us, ws;
    gram_err = (all.transpose() * all - Eigen::MatrixXd::Identity(2 * m, 2 * m)).cwiseAbs().maxCoeff();
  }
  if (residual > 1e-7 * dn || w_dot_j > 1e-8 * dn || gram_err > 1e-8) {
    std::ostringstream msg;
    msg << "skew decomposition failed: residual " << residual << " (limit " << 1e-7 * dn
        << "), max |<v_even, j>| " << w_dot_j << ", orthonormality error " << gram_err;
    throw NumericalError(msg.str());
  }

  SpectralProfile profile;
  profile.n = static_cast<std::size_t>(n);
  profile.residual = residual;
  for (const auto& p : planes) profile.pairs.push_back({p.sigma / dn, angle_from_cos(p.cos)});
  const std::size_t total_pairs = profile.n / 2;
  bool zero_cos_placed = false;
  if (profile.n % 2 == 1) {
    profile.alpha_extra = angle_from_cos(zero_cos);
    zero_cos_placed = true;
  }
  while (profile.pairs.size() < total_pairs) {
    double c = zero_cos_placed ? 0.0 : zero_cos;
    zero_cos_placed = true;
    profile.pairs.push_back({0.0, angle_from_cos(c)});
  }
  std::stable_sort(profile.pairs.begin(), profile.pairs.end(),
                   [](const SpectralPair& x, const SpectralPair& y) { return x.lambda > y.lambda; });
  return profile;
}

double reconstruct_sigma(const SpectralProfile& profile, int len) {
  const double w2 = profile.weighted_square_sum();
  switch (len) {
    case 3:
      return (1.0 - 3.0 * w2) / 8.0;
    case 4:
      return (1.0 - 4.0 * w2 + 2.0 * profile.quartic_sum()) / 16.0;
    default:
      throw ValidationError("reconstruct_sigma supports lengths 3 and 4, got " + std::to_string(len));
  }
}

double EigenSpectrum::linear_sum() const {
  double s = rho;
  for (double r : reals) s += r;
  for (const auto& c : complex_pairs) s += 2.0 * c.a;
  return s;
}

double EigenSpectrum::cubic_sum() const {
  double s = rho * rho * rho;
  for (double r : reals) s += r * r * r;
  for (const auto& c : complex_pairs) s += 2.0 * (c.a * c.a * c.a - 3.0 * c.a * c.b * c.b);
  return s;
}

double EigenSpectrum::quartic_sum() const {
  double s = std::pow(rho, 4);
  for (double r : reals) s += std::pow(r, 4);
  for (const auto& c : complex_pairs) {
    const double a2 = c.a * c.a, b2 = c.b * c.b;
    s += 2.0 * (a2 * a2 - 6.0 * a2 * b2 + b2 * b2);
  }
  return s;
}

EigenAnalysis eigs_normalized(const TournamentMatrix& a) {
  const double dn = static_cast<double>(a.n());
  Eigen::EigenSolver<Eigen::MatrixXd> solver(a.entries(), false);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("general eigensolver did not converge");
  }
  const Eigen::VectorXcd values = solver.eigenvalues() / dn;

  constexpr double kImagCut = 1e-10;
  EigenAnalysis out;
  auto& sp = out.spectrum;
  std::vector<double> reals;
  double min_re = std::numeric_limits<double>::infinity();
  double max_abs = 0.0;
  for (Eigen::Index k = 0; k < values.size(); ++k) {
    const auto v = values(k);
    min_re = std::min(min_re, v.real());
    max_abs = std::max(max_abs, std::abs(v));
    if (std::abs(v.imag()) <= kImagCut) {
      reals.push_back(v.real());
    } else if (v.imag() > 0) {
      sp.complex_pairs.push_back({v.real(), v.imag()});
    }
  }
  if (min_re < -1e-9) {
    std::ostringstream msg;
    msg << "eigenvalue with real part " << min_re << " < -1e-9";
    throw NumericalError(msg.str());
  }
  if (reals.empty()) throw NumericalError("no real eigenvalue found for the Perron root");
  std::sort(reals.begin(), reals.end(), std::greater<>());
  sp.rho = reals.front();
  sp.reals.assign(reals.begin() + 1, reals.end());
  std::sort(sp.complex_pairs.begin(), sp.complex_pairs.end(),
            [](const ComplexPair& x, const ComplexPair& y) { return x.a > y.a; });

  auto& ch = out.checks;
  ch.linear_residual = sp.linear_sum() - 0.5;
  ch.cubic_residual = sp.cubic_sum() - sigma(a, 3);
  ch.quartic_residual = sp.quartic_sum() - sigma(a, 4);
  ch.min_real_part = min_re;
  ch.rho_dominates = sp.rho >= max_abs - 1e-9;
  ch.ok = std::abs(ch.linear_residual) <= 1e-9 && std::abs(ch.cubic_residual) <= 1e-9 &&
          std::abs(ch.quartic_residual) <= 1e-9 && ch.rho_dominates;
  return out;
}

std::optional<std::vector<double>> extremality_test(const TournamentMatrix& a, double tol) {
  const std::size_t n = a.n();
  const Eigen::VectorXd rows = a.entries().rowwise().sum() / static_cast<double>(n);
  const double shift = rows.minCoeff();
  std::vector<double> z(n);
  for (std::size_t i = 0; i < n; ++i) z[i] = rows(static_cast<Eigen::Index>(i)) - shift;
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      worst = std::max(worst, std::abs(a(i, k) - (0.5 + z[i] - z[k])));
    }
  }
  if (worst > tol) return std::nullopt;
  return z;
}

}  // namespace tourn
