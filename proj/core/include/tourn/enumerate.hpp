#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "tourn/tournament.hpp"

namespace tourn {

/// Number of labelled tournaments on n vertices, 2^(n(n-1)/2).
std::uint64_t tournament_count(std::size_t n);

/// The tournament with the given index in lexicographic order of the
/// upper-triangle bit string. Pairs are ordered (0,1), (0,2), ..., (n-2,n-1)
/// and the first pair is the most significant bit; bit 1 means i -> j.
Tournament tournament_from_index(std::size_t n, std::uint64_t index);

struct EnumerationOptions {
  /// Orders above kDefaultMaxOrder are rejected unless this is set.
  bool allow_large = false;
  /// Worker threads for summarize_all (0 = hardware concurrency).
  unsigned threads = 1;
  /// Tournaments with sigma3 below this are skipped by the gap minimum.
  double sigma3_threshold = 1.0 / 72.0;
  /// Half-open index range [first, last); last = 0 means "to the end".
  std::uint64_t first = 0;
  std::uint64_t last = 0;

  static constexpr std::size_t kDefaultMaxOrder = 7;
};

struct EnumerationSummary {
  std::size_t n = 0;
  std::uint64_t first = 0;
  std::uint64_t last = 0;
  std::uint64_t visited = 0;
  /// Tournaments containing at least one directed triangle.
  std::uint64_t with_triangle = 0;
  /// Tournaments with sigma3 >= threshold.
  std::uint64_t checked = 0;
  double sigma3_threshold = 1.0 / 72.0;
  /// min over checked tournaments of sigma4 - g(sigma3), with its witness.
  std::optional<double> min_gap;
  std::uint64_t argmin_index = 0;
  double argmin_sigma3 = 0.0;
  double argmin_sigma4 = 0.0;

  /// Associative merge of two disjoint ranges (ties keep the lower index).
  void merge(const EnumerationSummary& other);
};

using EnumerationVisitor = std::function<void(std::uint64_t index, const Tournament&)>;

/// Visits every index in the selected range exactly once, in increasing
/// order, on the calling thread, and returns the summary.
EnumerationSummary enumerate_all(std::size_t n, const EnumerationVisitor& visitor,
                                 const EnumerationOptions& options = {});

/// Summary only; the range is split into contiguous blocks across
/// `options.threads` workers and merged in index order.
EnumerationSummary summarize_all(std::size_t n, const EnumerationOptions& options = {});

}  // namespace tourn
