#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "tourn/error.hpp"

namespace tourn {

/// Square 0/1 matrix stored as packed bit rows (64 columns per word).
///
/// This is the raw, unchecked form: any bit pattern is representable, so it
/// is what parsers and tests feed to validate(). Row i holds the out-arcs of
/// vertex i.
class ArcMatrix {
 public:
  ArcMatrix() = default;
  explicit ArcMatrix(std::size_t n);

  std::size_t n() const { return n_; }
  std::size_t words_per_row() const { return words_; }

  bool get(std::size_t i, std::size_t j) const {
    return (bits_[i * words_ + (j >> 6)] >> (j & 63)) & 1u;
  }
  void set(std::size_t i, std::size_t j, bool value);

  std::span<const std::uint64_t> row(std::size_t i) const {
    return {bits_.data() + i * words_, words_};
  }

  friend bool operator==(const ArcMatrix&, const ArcMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

struct Violation {
  enum class Kind { kLoop, kBothOrientations, kUnoriented };
  std::size_t i = 0;  // 0-based
  std::size_t j = 0;
  Kind kind = Kind::kLoop;

  friend bool operator==(const Violation&, const Violation&) = default;
};

std::string describe(const Violation& v);

/// Every loop and every unordered pair {i,j} (reported with i < j) that is
/// not oriented exactly once. Empty means the matrix is a tournament.
std::vector<Violation> validate(const ArcMatrix& adj);

/// Thrown when an ArcMatrix fails validation; carries the full list.
class InvalidTournament : public ValidationError {
 public:
  explicit InvalidTournament(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

/// A tournament on n >= 1 vertices. Immutable; always valid.
class Tournament {
 public:
  /// Validates and adopts `adj`; throws InvalidTournament on any violation.
  explicit Tournament(ArcMatrix adj);

  /// Builds a tournament from an orientation rule: for every i < j,
  /// `forward(i, j)` decides whether the arc is i -> j (else j -> i).
  template <typename Forward>
  static Tournament from_orientation(std::size_t n, Forward&& forward) {
    if (n == 0) throw ValidationError("tournament order must be positive");
    ArcMatrix adj(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (forward(i, j)) {
          adj.set(i, j, true);
        } else {
          adj.set(j, i, true);
        }
      }
    }
    return Tournament(std::move(adj), Trusted{});
  }

  std::size_t n() const { return adj_.n(); }
  bool arc(std::size_t i, std::size_t j) const { return adj_.get(i, j); }
  std::span<const std::uint64_t> out_row(std::size_t i) const { return adj_.row(i); }
  std::size_t words_per_row() const { return adj_.words_per_row(); }
  std::size_t out_degree(std::size_t i) const;
  const ArcMatrix& arcs() const { return adj_; }

  /// Same vertex set with every arc flipped.
  Tournament reversed() const;

  friend bool operator==(const Tournament&, const Tournament&) = default;

 private:
  struct Trusted {};
  Tournament(ArcMatrix adj, Trusted) : adj_(std::move(adj)) {}

  ArcMatrix adj_;
};

/// Real n x n matrix with entries in [0,1] and A + A^T = J.
///
/// Covers tournament adjacency matrices (off-diagonal 0/1, diagonal 1/2),
/// potential matrices and step kernels.
class TournamentMatrix {
 public:
  static constexpr double kTolerance = 1e-12;

  /// Throws ValidationError if the entries break the invariants by more
  /// than kTolerance.
  explicit TournamentMatrix(Eigen::MatrixXd entries);

  std::size_t n() const { return static_cast<std::size_t>(entries_.rows()); }
  const Eigen::MatrixXd& entries() const { return entries_; }
  double operator()(std::size_t i, std::size_t j) const {
    return entries_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }

 private:
  Eigen::MatrixXd entries_;
};

/// The adjacency matrix with 1/2 on the diagonal.
TournamentMatrix to_matrix(const Tournament& t);

}  // namespace tourn
