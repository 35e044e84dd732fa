#pragma once

#include <cstddef>
#include <vector>

#include "tourn/rng.hpp"
#include "tourn/tournament.hpp"

namespace tourn {

// Every randomized generator orients the pair (i, j), i < j, as i -> j iff
// uniform_at(seed, i*n + j) < P(i -> j).

Tournament gen_transitive(std::size_t n);

/// Every pair oriented by a fair coin.
Tournament gen_uniform(std::size_t n, Seed seed);

struct BlowupParams {
  double z = 1.0;  // part-size parameter, in (0, 1]
  std::size_t n = 1;
  Seed seed;
};

/// floor(1/z) parts of floor(z*n) vertices followed by one remainder part
/// (possibly empty). Parts are consecutive vertex ranges.
std::vector<std::size_t> blowup_part_sizes(double z, std::size_t n);

/// Random blow-up of a transitive tournament: forward arcs between parts,
/// fair coins inside each part.
Tournament gen_blowup(const BlowupParams& params);

/// For i < j: arc i -> j iff j - i <= floor((1 - xi) * n). xi in [0, 1/2].
Tournament gen_circular(double xi, std::size_t n);

/// A(i,j) = 1/2 + z_i - z_j with every z_i in [0, 1/2].
TournamentMatrix matrix_potential(const std::vector<double>& z);

/// Pair (i, j) oriented i -> j with probability 1/2 + p_i - p_j.
Tournament gen_potential(const std::vector<double>& p, Seed seed);

/// N vertices, vertex v in class v mod n; pair (v, w) oriented v -> w with
/// probability A(class v, class w).
Tournament gen_wrandom(const TournamentMatrix& a, std::size_t big_n, Seed seed);

struct MixedParams {
  std::size_t k = 1;         // k + 1 parts
  double z = 0.5;            // in [1/(k+1), 1/k]
  std::size_t part_i = 0;    // 0-based part carrying the remainder
  std::size_t part_i2 = 1;   // 0-based neighbour, |part_i - part_i2| = 1
  std::vector<double> p;     // potentials of V_i u V_i2 in vertex order
  std::size_t n = 1;
  Seed seed;
};

/// |V_i| = n - k*floor(z*n), every other part floor(z*n).
std::vector<std::size_t> mixed_part_sizes(const MixedParams& params);

/// Random blow-up with k + 1 parts in which the two neighbouring parts
/// V_i and V_i2 are merged into one potential-governed block.
Tournament gen_mixed(const MixedParams& params);

}  // namespace tourn
