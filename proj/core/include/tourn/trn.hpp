#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "tourn/tournament.hpp"

namespace tourn {

/// TRN text format, version 1:
///
///   TRN 1 <n>\n
///   <n lines of exactly n characters from {0,1}, each ending in \n>
///
/// Row i lists the out-arcs of vertex i. The trailing newline is mandatory.
class TrnError : public ValidationError {
 public:
  /// `line` and `column` are 1-based; column 0 means "whole line".
  TrnError(std::size_t line, std::size_t column, const std::string& what);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

Tournament read_trn(std::string_view text);
std::string write_trn(const Tournament& t);

Tournament read_trn_file(const std::string& path);
void write_trn_file(const std::string& path, const Tournament& t);

}  // namespace tourn
