#include "tourn/trn.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace tourn {

namespace {

std::string located(std::size_t line, std::size_t column, const std::string& what) {
  std::ostringstream os;
  os << "TRN line " << line;
  if (column > 0) os << ", column " << column;
  os << ": " << what;
  return os.str();
}

}  // namespace

TrnError::TrnError(std::size_t line, std::size_t column, const std::string& what)
    : ValidationError(located(line, column, what)), line_(line), column_(column) {}

Tournament read_trn(std::string_view text) {
  std::size_t pos = 0;
  std::size_t line_no = 0;
  auto next_line = [&](std::string_view& out) {
    ++line_no;
    const std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) {
      if (pos >= text.size()) throw TrnError(line_no, 0, "unexpected end of input");
      throw TrnError(line_no, text.size() - pos + 1, "missing trailing newline");
    }
    out = text.substr(pos, eol - pos);
    pos = eol + 1;
  };

  std::string_view header;
  next_line(header);
  constexpr std::string_view kTag = "TRN 1 ";
  if (!header.starts_with(kTag)) throw TrnError(1, 1, "header must start with 'TRN 1 '");
  const std::string_view count = header.substr(kTag.size());
  std::size_t n = 0;
  const auto [end, ec] = std::from_chars(count.data(), count.data() + count.size(), n);
  if (ec != std::errc{} || end != count.data() + count.size() || count.empty() ||
      count.front() == '+' || (count.size() > 1 && count.front() == '0')) {
    throw TrnError(1, kTag.size() + 1, "malformed vertex count");
  }
  if (n == 0) throw TrnError(1, kTag.size() + 1, "vertex count must be positive");

  ArcMatrix adj(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::string_view row;
    next_line(row);
    for (std::size_t j = 0; j < row.size() && j < n; ++j) {
      const char c = row[j];
      if (c != '0' && c != '1') {
        throw TrnError(line_no, j + 1, std::string("invalid character '") + c + "'");
      }
      adj.set(i, j, c == '1');
    }
    if (row.size() != n) {
      std::ostringstream os;
      os << "expected " << n << " characters, found " << row.size();
      throw TrnError(line_no, 0, os.str());
    }
  }
  if (pos != text.size()) throw TrnError(n + 2, 1, "trailing content after last row");

  const auto violations = validate(adj);
  if (!violations.empty()) {
    const Violation& v = violations.front();
    // Pair violations point at the upper-triangle cell.
    throw TrnError(v.i + 2, v.j + 1, describe(v));
  }
  return Tournament(std::move(adj));
}

std::string write_trn(const Tournament& t) {
  const std::size_t n = t.n();
  std::string out = "TRN 1 " + std::to_string(n) + "\n";
  out.reserve(out.size() + n * (n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out.push_back(t.arc(i, j) ? '1' : '0');
    out.push_back('\n');
  }
  return out;
}

Tournament read_trn_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return read_trn(buf.str());
}

void write_trn_file(const std::string& path, const Tournament& t) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write " + path);
  out << write_trn(t);
  if (!out) throw ValidationError("write failed for " + path);
}

}  // namespace tourn
