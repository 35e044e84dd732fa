#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>
#include <vector>

#include "io.hpp"
#include "tourn/bounds.hpp"
#include "tourn/counting.hpp"
#include "tourn/enumerate.hpp"
#include "tourn/error.hpp"
#include "tourn/generators.hpp"
#include "tourn/serialize.hpp"
#include "tourn/spectral.hpp"
#include "tourn/spectrum_opt.hpp"
#include "tourn/trn.hpp"

namespace tourn::cli {

using nlohmann::json;

namespace {

Seed require_seed(const GenOptions& o) {
  if (!o.seed) throw ValidationError("family '" + o.family + "' samples random arcs and needs --seed");
  return Seed{*o.seed};
}

void require_n(const GenOptions& o) {
  if (o.n == 0) throw ValidationError("--n must be positive");
}

double hom_density(const Tournament& t, int len) {
  return static_cast<double>(cycle_homs(t, len)) / std::pow(static_cast<double>(t.n()), len);
}

SpectrumInstance make_instance(double s3, double rho, const OptimizeOptions& o) {
  SpectrumInstance inst;
  inst.s3 = s3;
  inst.rho = rho;
  if (o.k_max > 0) inst.k_max = o.k_max;
  if (o.l_max > 0) inst.l_max = o.l_max;
  validate(inst);
  return inst;
}

json solve_row(double s3, std::optional<double> rho, const OptimizeOptions& o) {
  json row{{"s3", s3}};
  if (!rho) {
    row["rho"] = nullptr;
    row["sweep"] = min_over_rho(s3, o.grid);
    return row;
  }
  row["rho"] = *rho;
  const auto sol = try_solve_structured(make_instance(s3, *rho, o));
  row["feasible"] = sol.has_value();
  row["solution"] = sol ? json(*sol) : json(nullptr);
  return row;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) {
    cell.erase(0, cell.find_first_not_of(" \t\r"));
    cell.erase(cell.find_last_not_of(" \t\r") + 1);
    out.push_back(cell);
  }
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

double parse_real(const std::string& s, std::size_t line) {
  std::istringstream in(s);
  in.imbue(std::locale::classic());
  double x;
  if (!(in >> x) || !in.eof()) throw ValidationError("batch line " + std::to_string(line) + ": bad number '" + s + "'");
  return x;
}

}  // namespace

int cmd_gen(const GenOptions& o) {
  json echo{{"family", o.family}};
  std::optional<Tournament> t;
  if (o.family == "transitive") {
    require_n(o);
    t = gen_transitive(o.n);
  } else if (o.family == "uniform") {
    require_n(o);
    t = gen_uniform(o.n, require_seed(o));
  } else if (o.family == "blowup") {
    require_n(o);
    t = gen_blowup({o.z, o.n, require_seed(o)});
    echo["z"] = o.z;
    echo["part_sizes"] = blowup_part_sizes(o.z, o.n);
  } else if (o.family == "circular") {
    require_n(o);
    t = gen_circular(o.xi, o.n);
    echo["xi"] = o.xi;
  } else if (o.family == "potential") {
    if (o.z_file.empty()) throw ValidationError("family 'potential' needs --z-file");
    const auto z = load_reals(o.z_file);
    if (o.n != 0 && o.n != z.size()) throw ValidationError("--n does not match the length of --z-file");
    t = gen_potential(z, require_seed(o));
    echo["z_file"] = o.z_file;
  } else if (o.family == "mixed") {
    MixedParams p;
    p.k = o.k;
    p.z = o.z;
    p.part_i = o.part_i;
    p.part_i2 = o.part_i2;
    p.n = o.n;
    p.seed = require_seed(o);
    require_n(o);
    const auto sizes = mixed_part_sizes(p);
    const std::size_t block = sizes.at(p.part_i) + sizes.at(p.part_i2);
    if (o.p_file.empty()) {
      p.p.assign(block, 0.0);
    } else {
      p.p = load_reals(o.p_file);
    }
    t = gen_mixed(p);
    echo["k"] = p.k;
    echo["z"] = p.z;
    echo["part_i"] = p.part_i;
    echo["part_i2"] = p.part_i2;
    echo["part_sizes"] = sizes;
    echo["p_file"] = o.p_file.empty() ? json(nullptr) : json(o.p_file);
  } else if (o.family == "wrandom") {
    if (o.matrix_file.empty()) throw ValidationError("family 'wrandom' needs --matrix-file");
    require_n(o);
    const TournamentMatrix a = load_matrix(o.matrix_file);
    t = gen_wrandom(a, o.n, require_seed(o));
    echo["classes"] = a.n();
    echo["matrix_file"] = o.matrix_file;
  } else {
    throw ValidationError("unknown family '" + o.family + "'");
  }
  echo["n"] = t->n();
  echo["seed"] = o.seed ? json(*o.seed) : json(nullptr);
  echo["out"] = o.out.empty() ? json(nullptr) : json(o.out);

  const std::string text = write_trn(*t);
  if (o.out.empty() || o.out == "-") {
    std::cout << text << std::flush;
    print_json(std::cerr, echo);
  } else {
    with_output(o.out, [&](std::ostream& out) { out << text; });
    print_json(std::cout, echo);
  }
  return kExitOk;
}

int cmd_count(const CountOptions& o) {
  const DensityReport r = density_report(load_tournament(o.in));
  if (o.format == "json") {
    print_json(std::cout, json(r));
  } else if (o.format == "text") {
    const json j = r;
    for (const auto& [key, value] : j.items()) {
      std::cout << key << ' ' << (value.is_number_float() ? format_real(value.get<double>()) : value.dump()) << '\n';
    }
  } else {
    throw ValidationError("unknown format '" + o.format + "' (json or text)");
  }
  return kExitOk;
}

int cmd_spectral(const SpectralOptions& o) {
  const TournamentMatrix a = to_matrix(load_tournament(o.in));
  const SpectralProfile p = skew_decompose(a);
  const EigenAnalysis e = eigs_normalized(a);
  const double s3 = sigma(a, 3), s4 = sigma(a, 4);
  const double r3 = reconstruct_sigma(p, 3), r4 = reconstruct_sigma(p, 4);
  const double w = p.weighted_square_sum();
  const auto z = extremality_test(a, o.tol);
  json identities{{"sigma3", s3},
                  {"sigma4", s4},
                  {"reconstructed_sigma3", r3},
                  {"reconstructed_sigma4", r4},
                  {"sigma3_error", std::abs(r3 - s3)},
                  {"sigma4_error", std::abs(r4 - s4)},
                  {"cos_square_sum", p.cos_square_sum()},
                  {"cauchy_schwarz_gap", p.quartic_sum() - w * w}};
  print_json(std::cout, json{{"profile", p},
                             {"eigen", {{"spectrum", e.spectrum}, {"checks", e.checks}}},
                             {"identities", identities},
                             {"extremal", z ? json(*z) : json(nullptr)}});
  return kExitOk;
}

int cmd_bound(double d) {
  print_json(std::cout, bound_json(d));
  return kExitOk;
}

int cmd_optimize(const OptimizeOptions& o) {
  if (!o.batch.empty()) {
    std::ifstream in(o.batch);
    if (!in) throw ValidationError("cannot open " + o.batch);
    json rows = json::array();
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
      ++number;
      const auto cells = split_csv(line);
      if (cells.empty() || (cells.size() == 1 && cells[0].empty())) continue;
      if (number == 1 && cells[0] == "s3") continue;
      if (cells.size() > 2) throw ValidationError("batch line " + std::to_string(number) + ": expected s3,rho");
      const double s3 = parse_real(cells[0], number);
      std::optional<double> rho;
      if (cells.size() == 2 && !cells[1].empty()) rho = parse_real(cells[1], number);
      rows.push_back(solve_row(s3, rho, o));
    }
    print_json(std::cout, rows);
    return kExitOk;
  }
  if (!o.s3) throw ValidationError("optimize needs --s3 or --batch");
  if (o.sweep || !o.rho) {
    if (o.rho) throw ValidationError("--sweep and --rho are exclusive");
    print_json(std::cout, json(min_over_rho(*o.s3, o.grid)));
    return kExitOk;
  }
  print_json(std::cout, json(solve_structured(make_instance(*o.s3, *o.rho, o))));
  return kExitOk;
}

int cmd_region(const RegionOptions& o) {
  if (o.grid < 2) throw ValidationError("--grid must be at least 2");
  const auto rows = static_cast<std::size_t>(o.grid);
  std::vector<double> d(rows);
  for (std::size_t i = 0; i < rows; ++i) d[i] = 0.125 * static_cast<double>(i) / static_cast<double>(rows - 1);
  d.back() = 0.125;

  std::vector<DensityPoint> empirical(rows);
  if (o.sample_n > 0) {
    std::atomic<std::size_t> next{0};
    auto work = [&] {
      for (std::size_t i = next++; i < rows; i = next++) {
        const Seed seed{o.seed ^ i};
        const Tournament t =
            d[i] == 0 ? gen_transitive(o.sample_n) : gen_blowup({invert_z(d[i]).z, o.sample_n, seed});
        empirical[i] = {hom_density(t, 3), hom_density(t, 4)};
      }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < std::min<std::size_t>(o.threads, rows); ++w) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();
  }

  with_output(o.out, [&](std::ostream& out) {
    out << "d,g,lm_lower,upper,z,k";
    if (o.sample_n > 0) out << ",emp_t3,emp_t4,sample_n,seed";
    out << '\n';
    for (std::size_t i = 0; i < rows; ++i) {
      out << format_real(d[i]) << ',' << format_real(g(d[i])) << ',' << format_real(lower_envelope_lm(d[i])) << ','
          << format_real(upper_envelope(d[i])) << ',';
      if (d[i] > 0) {
        const RegimePoint p = invert_z(d[i]);
        out << format_real(p.z) << ',' << p.k;
      } else {
        out << ',';
      }
      if (o.sample_n > 0) {
        out << ',' << format_real(empirical[i].t3) << ',' << format_real(empirical[i].t4) << ',' << o.sample_n << ','
            << (o.seed ^ i);
      }
      out << '\n';
    }
  });
  return kExitOk;
}

int cmd_enumerate(const EnumerateOptions& o) {
  EnumerationOptions opts;
  opts.allow_large = o.allow_large;
  opts.threads = o.threads;
  const std::uint64_t total = tournament_count(o.n);
  const std::uint64_t last = o.last == 0 ? total : std::min(o.last, total);
  if (o.first >= last) throw ValidationError("empty index range");
  // Blocks keep progress reports coarse; merging is associative so the
  // summary does not depend on the block size.
  const std::uint64_t blocks = last - o.first >= (1u << 16) ? 32 : 1;
  const std::uint64_t step = (last - o.first + blocks - 1) / blocks;
  EnumerationSummary total_summary;
  for (std::uint64_t lo = o.first; lo < last; lo += step) {
    opts.first = lo;
    opts.last = std::min(last, lo + step);
    total_summary.merge(summarize_all(o.n, opts));
    if (o.progress && blocks > 1) std::cerr << "enumerated " << opts.last - o.first << '/' << last - o.first << '\n';
  }
  print_json(std::cout, summary_json(total_summary));
  return kExitOk;
}

}  // namespace tourn::cli
