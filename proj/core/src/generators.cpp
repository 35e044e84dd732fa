#include "tourn/generators.hpp"

#include <cmath>
#include <sstream>

namespace tourn {

namespace {

// floor() that forgives representation error, so that e.g. 0.29 * 100
// resolves to 29 rather than 28.
std::size_t floor_count(double x) {
  return static_cast<std::size_t>(std::floor(x + 1e-9));
}

std::uint64_t pair_index(std::size_t i, std::size_t j, std::size_t n) {
  return static_cast<std::uint64_t>(i) * n + j;
}

void check_potentials(const std::vector<double>& p, const char* what) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!(p[i] >= 0.0 && p[i] <= 0.5)) {
      std::ostringstream os;
      os << what << "[" << i + 1 << "] = " << p[i] << " outside [0, 1/2]";
      throw ValidationError(os.str());
    }
  }
}

}  // namespace

Tournament gen_transitive(std::size_t n) {
  return Tournament::from_orientation(n, [](std::size_t, std::size_t) { return true; });
}

Tournament gen_uniform(std::size_t n, Seed seed) {
  return Tournament::from_orientation(
      n, [&](std::size_t i, std::size_t j) { return uniform_at(seed, pair_index(i, j, n)) < 0.5; });
}

std::vector<std::size_t> blowup_part_sizes(double z, std::size_t n) {
  if (!(z > 0.0 && z <= 1.0)) throw ValidationError("blow-up parameter z must lie in (0, 1]");
  const std::size_t parts = floor_count(1.0 / z);
  const std::size_t size = floor_count(z * static_cast<double>(n));
  if (parts * size > n) throw ValidationError("blow-up parts exceed the vertex count");
  std::vector<std::size_t> sizes(parts, size);
  sizes.push_back(n - parts * size);
  return sizes;
}

namespace {

std::vector<std::size_t> part_of_vertex(const std::vector<std::size_t>& sizes, std::size_t n) {
  std::vector<std::size_t> part(n);
  std::size_t v = 0;
  for (std::size_t p = 0; p < sizes.size(); ++p) {
    for (std::size_t c = 0; c < sizes[p]; ++c) part[v++] = p;
  }
  return part;
}

}  // namespace

Tournament gen_blowup(const BlowupParams& params) {
  const std::size_t n = params.n;
  if (n == 0) throw ValidationError("tournament order must be positive");
  const auto part = part_of_vertex(blowup_part_sizes(params.z, n), n);
  return Tournament::from_orientation(n, [&](std::size_t i, std::size_t j) {
    if (part[i] != part[j]) return part[i] < part[j];
    return uniform_at(params.seed, pair_index(i, j, n)) < 0.5;
  });
}

Tournament gen_circular(double xi, std::size_t n) {
  if (!(xi >= 0.0 && xi <= 0.5)) throw ValidationError("circular parameter xi must lie in [0, 1/2]");
  const std::size_t reach = floor_count((1.0 - xi) * static_cast<double>(n));
  return Tournament::from_orientation(n, [&](std::size_t i, std::size_t j) { return j - i <= reach; });
}

TournamentMatrix matrix_potential(const std::vector<double>& z) {
  if (z.empty()) throw ValidationError("potential vector must be non-empty");
  check_potentials(z, "z");
  const auto n = static_cast<Eigen::Index>(z.size());
  Eigen::MatrixXd a(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      a(i, j) = i == j ? 0.5 : 0.5 + (z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)]);
    }
  }
  return TournamentMatrix(std::move(a));
}

Tournament gen_potential(const std::vector<double>& p, Seed seed) {
  if (p.empty()) throw ValidationError("potential vector must be non-empty");
  check_potentials(p, "p");
  const std::size_t n = p.size();
  return Tournament::from_orientation(n, [&](std::size_t i, std::size_t j) {
    return uniform_at(seed, pair_index(i, j, n)) < 0.5 + (p[i] - p[j]);
  });
}

Tournament gen_wrandom(const TournamentMatrix& a, std::size_t big_n, Seed seed) {
  if (big_n == 0) throw ValidationError("tournament order must be positive");
  const std::size_t classes = a.n();
  return Tournament::from_orientation(big_n, [&](std::size_t v, std::size_t w) {
    return uniform_at(seed, pair_index(v, w, big_n)) < a(v % classes, w % classes);
  });
}

std::vector<std::size_t> mixed_part_sizes(const MixedParams& params) {
  const std::size_t k = params.k;
  if (k == 0) throw ValidationError("mixed construction needs k >= 1");
  const double lo = 1.0 / static_cast<double>(k + 1);
  const double hi = 1.0 / static_cast<double>(k);
  if (!(params.z >= lo - 1e-12 && params.z <= hi + 1e-12)) {
    throw ValidationError("mixed construction needs z in [1/(k+1), 1/k]");
  }
  if (params.part_i > k || params.part_i2 > k) throw ValidationError("part index out of range");
  const std::size_t gap =
      params.part_i > params.part_i2 ? params.part_i - params.part_i2 : params.part_i2 - params.part_i;
  if (gap != 1) throw ValidationError("merged parts must be neighbours (|i - i'| = 1)");
  const std::size_t size = floor_count(params.z * static_cast<double>(params.n));
  if (k * size > params.n) throw ValidationError("mixed parts exceed the vertex count");
  std::vector<std::size_t> sizes(k + 1, size);
  sizes[params.part_i] = params.n - k * size;
  return sizes;
}

Tournament gen_mixed(const MixedParams& params) {
  const std::size_t n = params.n;
  if (n == 0) throw ValidationError("tournament order must be positive");
  const auto sizes = mixed_part_sizes(params);
  const auto part = part_of_vertex(sizes, n);
  const std::size_t merged = sizes[params.part_i] + sizes[params.part_i2];
  if (params.p.size() != merged) {
    std::ostringstream os;
    os << "mixed construction needs " << merged << " potentials, got " << params.p.size();
    throw ValidationError(os.str());
  }
  check_potentials(params.p, "p");

  // Potential slot of each vertex in V_i u V_i2, counted in vertex order.
  std::vector<std::size_t> slot(n, 0);
  for (std::size_t v = 0, s = 0; v < n; ++v) {
    if (part[v] == params.part_i || part[v] == params.part_i2) slot[v] = s++;
  }
  auto in_merged = [&](std::size_t v) { return part[v] == params.part_i || part[v] == params.part_i2; };

  return Tournament::from_orientation(n, [&](std::size_t v, std::size_t w) {
    const double u = uniform_at(params.seed, pair_index(v, w, n));
    if (in_merged(v) && in_merged(w)) return u < 0.5 + (params.p[slot[v]] - params.p[slot[w]]);
    if (part[v] != part[w]) return part[v] < part[w];
    return u < 0.5;
  });
}

}  // namespace tourn
