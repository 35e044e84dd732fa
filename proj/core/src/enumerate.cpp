#include "tourn/enumerate.hpp"

#include <algorithm>
#include <sstream>
#include <thread>
#include <vector>

#include "tourn/bounds.hpp"
#include "tourn/counting.hpp"

namespace tourn {

std::uint64_t tournament_count(std::size_t n) {
  const std::size_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
  if (pairs >= 64) throw ValidationError("too many tournaments to index with 64 bits");
  return std::uint64_t{1} << pairs;
}

Tournament tournament_from_index(std::size_t n, std::uint64_t index) {
  const std::size_t pairs = n * (n - 1) / 2;
  if (n == 0) throw ValidationError("tournament order must be positive");
  if (index >= tournament_count(n)) throw ValidationError("tournament index out of range");
  std::size_t p = 0;
  ArcMatrix adj(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j, ++p) {
      const bool forward = (index >> (pairs - 1 - p)) & 1u;
      adj.set(forward ? i : j, forward ? j : i, true);
    }
  }
  return Tournament(std::move(adj));
}

void EnumerationSummary::merge(const EnumerationSummary& other) {
  if (other.visited == 0) return;
  if (visited == 0) {
    *this = other;
    return;
  }
  first = std::min(first, other.first);
  last = std::max(last, other.last);
  visited += other.visited;
  with_triangle += other.with_triangle;
  checked += other.checked;
  if (other.min_gap &&
      (!min_gap || *other.min_gap < *min_gap ||
       (*other.min_gap == *min_gap && other.argmin_index < argmin_index))) {
    min_gap = other.min_gap;
    argmin_index = other.argmin_index;
    argmin_sigma3 = other.argmin_sigma3;
    argmin_sigma4 = other.argmin_sigma4;
  }
}

namespace {

struct Range {
  std::uint64_t first;
  std::uint64_t last;
};

Range resolve(std::size_t n, const EnumerationOptions& options) {
  if (n == 0) throw ValidationError("tournament order must be positive");
  if (n > EnumerationOptions::kDefaultMaxOrder && !options.allow_large) {
    std::ostringstream os;
    os << "exhaustive enumeration at n = " << n << " is refused without the large-order override";
    throw ValidationError(os.str());
  }
  const std::uint64_t total = tournament_count(n);
  const std::uint64_t last = options.last == 0 ? total : options.last;
  if (options.first > last || last > total) throw ValidationError("enumeration range out of bounds");
  return {options.first, last};
}

EnumerationSummary run_range(std::size_t n, Range range, double threshold,
                             const EnumerationVisitor* visitor) {
  EnumerationSummary s;
  s.n = n;
  s.first = range.first;
  s.last = range.last;
  s.sigma3_threshold = threshold;
  for (std::uint64_t index = range.first; index < range.last; ++index) {
    const Tournament t = tournament_from_index(n, index);
    if (visitor) (*visitor)(index, t);
    ++s.visited;
    const TournamentMatrix a = to_matrix(t);
    const Eigen::MatrixXd sq = a.entries() * a.entries();
    const double nn = static_cast<double>(n);
    const double s3 = sq.cwiseProduct(a.entries().transpose()).sum() / (nn * nn * nn);
    const double s4 = sq.cwiseProduct(sq.transpose()).sum() / (nn * nn * nn * nn);
    // A triangle adds 3/n^3 to sigma3 above its triangle-free floor 1/(8n^2).
    if (s3 > 1.0 / (8.0 * nn * nn) + 1.0 / (nn * nn * nn)) ++s.with_triangle;
    if (s3 < threshold) continue;
    ++s.checked;
    const double gap = s4 - g(std::min(s3, 0.125));
    if (!s.min_gap || gap < *s.min_gap) {
      s.min_gap = gap;
      s.argmin_index = index;
      s.argmin_sigma3 = s3;
      s.argmin_sigma4 = s4;
    }
  }
  return s;
}

}  // namespace

EnumerationSummary enumerate_all(std::size_t n, const EnumerationVisitor& visitor,
                                 const EnumerationOptions& options) {
  const Range range = resolve(n, options);
  return run_range(n, range, options.sigma3_threshold, visitor ? &visitor : nullptr);
}

EnumerationSummary summarize_all(std::size_t n, const EnumerationOptions& options) {
  const Range range = resolve(n, options);
  unsigned workers = options.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : options.threads;
  const std::uint64_t span = range.last - range.first;
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, std::max<std::uint64_t>(span, 1)));

  std::vector<EnumerationSummary> parts(workers);
  std::vector<std::thread> pool;
  const std::uint64_t block = span / workers;
  const std::uint64_t extra = span % workers;
  std::uint64_t begin = range.first;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t end = begin + block + (w < extra ? 1 : 0);
    if (workers == 1) {
      parts[w] = run_range(n, {begin, end}, options.sigma3_threshold, nullptr);
    } else {
      pool.emplace_back([&parts, w, n, begin, end, &options] {
        parts[w] = run_range(n, {begin, end}, options.sigma3_threshold, nullptr);
      });
    }
    begin = end;
  }
  for (auto& th : pool) th.join();

  EnumerationSummary total;
  total.n = n;
  total.first = range.first;
  total.last = range.last;
  total.sigma3_threshold = options.sigma3_threshold;
  for (const auto& part : parts) total.merge(part);
  return total;
}

}  // namespace tourn
