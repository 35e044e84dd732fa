#pragma once

#include <cstddef>
#include <cstdint>

#include "tourn/tournament.hpp"

namespace tourn {

/// Number of homomorphisms of the directed cycle C_len into t, i.e. the
/// exact trace of M^len for the 0/1 adjacency matrix M. len in {3,4,5}.
///
/// Every such homomorphism is injective, so the count is len times the
/// number of directed len-cycles. Exact for n <= 7000.
std::uint64_t cycle_homs(const Tournament& t, int len);

/// Tr(A^len) / n^len in double precision, len in {1,3,4}.
double sigma(const TournamentMatrix& a, int len);

/// Number of k-subsets inducing a transitive subtournament, k in {3,4}.
/// Each such subset is the image of exactly one homomorphism of T_k.
std::uint64_t transitive_subsets(const Tournament& t, int k);

/// transitive_subsets(t, k) / n^k.
double trans_density(const Tournament& t, int k);

struct DensityReport {
  std::size_t n = 0;
  std::uint64_t homs3 = 0;
  std::uint64_t homs4 = 0;
  std::uint64_t homs5 = 0;
  double t3 = 0.0;
  double t4 = 0.0;
  double t5 = 0.0;
  double tT3 = 0.0;
  double tT4 = 0.0;
  double sigma3 = 0.0;
  double sigma4 = 0.0;
  /// 8 t3 + 24 tT4 - 6 t4 - 1; vanishes like O(1/n).
  double identity_residual = 0.0;
};

/// Fills every field; sigma3/sigma4 come from the dense matrix route.
DensityReport density_report(const Tournament& t);

}  // namespace tourn
