#include "tourn/tournament.hpp"

#include <bit>
#include <cmath>
#include <sstream>

namespace tourn {

ArcMatrix::ArcMatrix(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

void ArcMatrix::set(std::size_t i, std::size_t j, bool value) {
  std::uint64_t& w = bits_[i * words_ + (j >> 6)];
  const std::uint64_t mask = std::uint64_t{1} << (j & 63);
  w = value ? (w | mask) : (w & ~mask);
}

std::string describe(const Violation& v) {
  std::ostringstream os;
  switch (v.kind) {
    case Violation::Kind::kLoop:
      os << "loop at vertex " << v.i + 1;
      break;
    case Violation::Kind::kBothOrientations:
      os << "pair (" << v.i + 1 << "," << v.j + 1 << ") oriented both ways";
      break;
    case Violation::Kind::kUnoriented:
      os << "pair (" << v.i + 1 << "," << v.j + 1 << ") unoriented";
      break;
  }
  return os.str();
}

std::vector<Violation> validate(const ArcMatrix& adj) {
  std::vector<Violation> out;
  const std::size_t n = adj.n();
  for (std::size_t i = 0; i < n; ++i) {
    if (adj.get(i, i)) out.push_back({i, i, Violation::Kind::kLoop});
    for (std::size_t j = i + 1; j < n; ++j) {
      const int sum = int{adj.get(i, j)} + int{adj.get(j, i)};
      if (sum == 2) out.push_back({i, j, Violation::Kind::kBothOrientations});
      if (sum == 0) out.push_back({i, j, Violation::Kind::kUnoriented});
    }
  }
  return out;
}

namespace {

std::string violations_message(const std::vector<Violation>& vs) {
  std::ostringstream os;
  os << "invalid tournament (" << vs.size() << " violation" << (vs.size() == 1 ? "" : "s") << ")";
  const std::size_t shown = std::min<std::size_t>(vs.size(), 8);
  for (std::size_t k = 0; k < shown; ++k) os << (k == 0 ? ": " : "; ") << describe(vs[k]);
  if (shown < vs.size()) os << "; ...";
  return os.str();
}

}  // namespace

InvalidTournament::InvalidTournament(std::vector<Violation> violations)
    : ValidationError(violations_message(violations)), violations_(std::move(violations)) {}

Tournament::Tournament(ArcMatrix adj) : adj_(std::move(adj)) {
  if (adj_.n() == 0) throw ValidationError("tournament order must be positive");
  auto violations = validate(adj_);
  if (!violations.empty()) throw InvalidTournament(std::move(violations));
}

std::size_t Tournament::out_degree(std::size_t i) const {
  std::size_t d = 0;
  for (std::uint64_t w : out_row(i)) d += static_cast<std::size_t>(std::popcount(w));
  return d;
}

Tournament Tournament::reversed() const {
  ArcMatrix rev(n());
  for (std::size_t i = 0; i < n(); ++i) {
    for (std::size_t j = 0; j < n(); ++j) {
      if (arc(i, j)) rev.set(j, i, true);
    }
  }
  return Tournament(std::move(rev), Trusted{});
}

TournamentMatrix::TournamentMatrix(Eigen::MatrixXd entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols()) throw ValidationError("tournament matrix must be square");
  if (entries_.rows() == 0) throw ValidationError("tournament matrix order must be positive");
  const Eigen::Index n = entries_.rows();
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const double a = entries_(i, j);
      if (!std::isfinite(a) || a < -kTolerance || a > 1.0 + kTolerance) {
        std::ostringstream os;
        os << "tournament matrix entry (" << i + 1 << "," << j + 1 << ") = " << a
           << " outside [0,1]";
        throw ValidationError(os.str());
      }
      if (j >= i && std::abs(a + entries_(j, i) - 1.0) > kTolerance) {
        std::ostringstream os;
        os << "tournament matrix entries (" << i + 1 << "," << j + 1 << ") and (" << j + 1 << ","
           << i + 1 << ") do not sum to 1";
        throw ValidationError(os.str());
      }
    }
  }
}

TournamentMatrix to_matrix(const Tournament& t) {
  const auto n = static_cast<Eigen::Index>(t.n());
  Eigen::MatrixXd a(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      a(i, j) = i == j ? 0.5 : (t.arc(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) ? 1.0 : 0.0);
    }
  }
  return TournamentMatrix(std::move(a));
}

}  // namespace tourn
