#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace tourn::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitNumerical = 2;
inline constexpr int kExitVerification = 3;

struct GenOptions {
  std::string family;
  std::size_t n = 0;
  std::optional<std::uint64_t> seed;
  double z = 0.5;
  double xi = 0.0;
  std::size_t k = 1;
  std::size_t part_i = 0;
  std::size_t part_i2 = 1;
  std::string z_file;
  std::string p_file;
  std::string matrix_file;
  std::string out;
};

struct CountOptions {
  std::string in;
  std::string format = "json";
};

struct SpectralOptions {
  std::string in;
  double tol = 1e-9;
};

struct OptimizeOptions {
  std::optional<double> s3;
  std::optional<double> rho;
  bool sweep = false;
  std::string batch;
  int k_max = 0;  // 0 = unbounded
  int l_max = 0;
  int grid = 2000;
};

struct RegionOptions {
  int grid = 129;
  std::size_t sample_n = 0;  // 0 = no empirical columns
  std::uint64_t seed = 1;
  std::string out;
  unsigned threads = 1;
};

struct EnumerateOptions {
  std::size_t n = 0;
  std::uint64_t first = 0;
  std::uint64_t last = 0;
  bool allow_large = false;
  unsigned threads = 1;
  bool progress = true;
};

struct VerifyOptions {
  std::string suite;
  std::size_t max_n = 6;
  std::uint64_t seed = 1;
  int samples = 0;  // 0 = suite default
  unsigned threads = 1;
};

int cmd_gen(const GenOptions& o);
int cmd_count(const CountOptions& o);
int cmd_spectral(const SpectralOptions& o);
int cmd_bound(double d);
int cmd_optimize(const OptimizeOptions& o);
int cmd_region(const RegionOptions& o);
int cmd_enumerate(const EnumerateOptions& o);
int cmd_verify(const VerifyOptions& o);

}  // namespace tourn::cli
