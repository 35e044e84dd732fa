#include "io.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <locale>
#include <sstream>
#include <thread>

#include "tourn/error.hpp"
#include "tourn/trn.hpp"

namespace tourn::cli {

namespace {

std::string slurp(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::vector<double> parse_reals(const std::string& text, const std::string& path) {
  std::istringstream in(text);
  in.imbue(std::locale::classic());
  std::vector<double> out;
  std::string token;
  while (in >> token) {
    std::istringstream field(token);
    field.imbue(std::locale::classic());
    double x;
    if (!(field >> x) || !field.eof()) throw ValidationError(path + ": not a number: " + token);
    out.push_back(x);
  }
  return out;
}

}  // namespace

Tournament load_tournament(const std::string& path) { return read_trn(slurp(path)); }

std::vector<double> load_reals(const std::string& path) { return parse_reals(slurp(path), path); }

TournamentMatrix load_matrix(const std::string& path) {
  const std::vector<double> v = load_reals(path);
  std::size_t n = 0;
  while (n * n < v.size()) ++n;
  if (n == 0 || n * n != v.size()) throw ValidationError(path + ": expected a square matrix");
  Eigen::MatrixXd m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = v[i * n + j];
  return TournamentMatrix(std::move(m));
}

void with_output(const std::string& path, const std::function<void(std::ostream&)>& write) {
  if (path.empty() || path == "-") {
    write(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write " + path);
  write(out);
  if (!out) throw ValidationError("write failed: " + path);
}

void print_json(std::ostream& out, const nlohmann::json& j) { out << j.dump(2) << '\n'; }

unsigned resolve_threads(int flag) {
  if (flag > 0) return static_cast<unsigned>(flag);
  if (const char* env = std::getenv("TOURN_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
    throw ValidationError("TOURN_THREADS must be a positive integer");
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::string format_real(double x) {
  std::ostringstream s;
  s.imbue(std::locale::classic());
  s << std::setprecision(17) << x;
  return s.str();
}

}  // namespace tourn::cli
