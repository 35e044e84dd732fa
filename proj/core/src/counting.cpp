#include "tourn/counting.hpp"

#include <bit>
#include <cmath>
#include <vector>

namespace tourn {

namespace {

using Counts = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

// In-neighbourhood rows, i.e. the packed transpose.
ArcMatrix in_rows(const Tournament& t) {
  ArcMatrix in(t.n());
  for (std::size_t i = 0; i < t.n(); ++i) {
    for (std::size_t j = 0; j < t.n(); ++j) {
      if (t.arc(i, j)) in.set(j, i, true);
    }
  }
  return in;
}

std::uint64_t and_popcount(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  std::uint64_t c = 0;
  for (std::size_t w = 0; w < a.size(); ++w) c += static_cast<std::uint64_t>(std::popcount(a[w] & b[w]));
  return c;
}

// (M^2)_{ij} = |out(i) & in(j)|.
Counts square_counts(const Tournament& t) {
  const std::size_t n = t.n();
  const ArcMatrix in = in_rows(t);
  Counts p(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      p(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          static_cast<std::int64_t>(and_popcount(t.out_row(i), in.row(j)));
    }
  }
  return p;
}

std::uint64_t trace3(const Tournament& t, const Counts& p) {
  std::uint64_t tr = 0;
  for (std::size_t i = 0; i < t.n(); ++i) {
    for (std::size_t j = 0; j < t.n(); ++j) {
      if (t.arc(j, i)) tr += static_cast<std::uint64_t>(p(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)));
    }
  }
  return tr;
}

std::uint64_t trace4(const Counts& p) {
  std::uint64_t tr = 0;
  for (Eigen::Index i = 0; i < p.rows(); ++i) {
    for (Eigen::Index j = 0; j < p.cols(); ++j) tr += static_cast<std::uint64_t>(p(i, j) * p(j, i));
  }
  return tr;
}

// Exact in double precision: every partial sum of (M^2 M)_{ij} is an
// integer below n^2 < 2^53.
std::uint64_t trace5(const Tournament& t, const Counts& p) {
  const auto n = static_cast<Eigen::Index>(t.n());
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      m(i, j) = t.arc(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) ? 1.0 : 0.0;
    }
  }
  const Eigen::MatrixXd cube = p.cast<double>() * m;
  std::uint64_t tr = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      tr += static_cast<std::uint64_t>(p(i, j)) * static_cast<std::uint64_t>(std::llround(cube(j, i)));
    }
  }
  return tr;
}

double power_of(std::size_t n, int k) { return std::pow(static_cast<double>(n), k); }

}  // namespace

std::uint64_t cycle_homs(const Tournament& t, int len) {
  if (len < 3 || len > 5) throw ValidationError("cycle length must be 3, 4 or 5");
  const Counts p = square_counts(t);
  switch (len) {
    case 3:
      return trace3(t, p);
    case 4:
      return trace4(p);
    default:
      return trace5(t, p);
  }
}

double sigma(const TournamentMatrix& a, int len) {
  const Eigen::MatrixXd& m = a.entries();
  const double n = static_cast<double>(a.n());
  switch (len) {
    case 1:
      return m.trace() / n;
    case 3: {
      const Eigen::MatrixXd sq = m * m;
      return sq.cwiseProduct(m.transpose()).sum() / (n * n * n);
    }
    case 4: {
      const Eigen::MatrixXd sq = m * m;
      return sq.cwiseProduct(sq.transpose()).sum() / (n * n * n * n);
    }
    default:
      throw ValidationError("sigma is defined here for len in {1, 3, 4}");
  }
}

std::uint64_t transitive_subsets(const Tournament& t, int k) {
  // A transitive k-set has a unique source v; the rest is a transitive
  // (k-1)-set inside out(v).
  const std::size_t n = t.n();
  std::uint64_t count = 0;
  if (k == 3) {
    for (std::size_t v = 0; v < n; ++v) {
      const std::uint64_t d = t.out_degree(v);
      count += d * (d - 1) / 2;
    }
    return count;
  }
  if (k == 4) {
    for (std::size_t v = 0; v < n; ++v) {
      for (std::size_t u = 0; u < n; ++u) {
        if (!t.arc(v, u)) continue;
        const std::uint64_t c = and_popcount(t.out_row(v), t.out_row(u));
        count += c * (c - 1) / 2;
      }
    }
    return count;
  }
  throw ValidationError("transitive density is defined here for k in {3, 4}");
}

double trans_density(const Tournament& t, int k) {
  return static_cast<double>(transitive_subsets(t, k)) / power_of(t.n(), k);
}

DensityReport density_report(const Tournament& t) {
  DensityReport r;
  r.n = t.n();
  const Counts p = square_counts(t);
  r.homs3 = trace3(t, p);
  r.homs4 = trace4(p);
  r.homs5 = trace5(t, p);
  r.t3 = static_cast<double>(r.homs3) / power_of(r.n, 3);
  r.t4 = static_cast<double>(r.homs4) / power_of(r.n, 4);
  r.t5 = static_cast<double>(r.homs5) / power_of(r.n, 5);
  r.tT3 = trans_density(t, 3);
  r.tT4 = trans_density(t, 4);
  const TournamentMatrix a = to_matrix(t);
  r.sigma3 = sigma(a, 3);
  r.sigma4 = sigma(a, 4);
  r.identity_residual = 8.0 * r.t3 + 24.0 * r.tT4 - 6.0 * r.t4 - 1.0;
  return r;
}

}  // namespace tourn
