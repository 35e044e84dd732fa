#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "io.hpp"
#include "tourn/error.hpp"

using namespace tourn::cli;

int main(int argc, char** argv) {
  CLI::App app{"Cycle densities in tournaments: generators, counting, spectra, bounds and the spectral optimizer"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "Worker threads (default: TOURN_THREADS, else all cores)")
      ->check(CLI::NonNegativeNumber);

  GenOptions gen;
  auto* g = app.add_subcommand("gen", "Generate a tournament and write it as TRN");
  g->add_option("--family", gen.family, "transitive|uniform|blowup|circular|potential|mixed|wrandom")->required();
  g->add_option("--n", gen.n, "Number of vertices");
  g->add_option("--seed", gen.seed, "Seed for sampling families");
  g->add_option("--z", gen.z, "Part-size parameter (blowup, mixed)");
  g->add_option("--xi", gen.xi, "Circular parameter in [0, 1/2]");
  g->add_option("--k", gen.k, "Mixed: k + 1 parts");
  g->add_option("--part-i", gen.part_i, "Mixed: 0-based part carrying the remainder");
  g->add_option("--part-i2", gen.part_i2, "Mixed: neighbouring part merged with it");
  g->add_option("--z-file", gen.z_file, "Potential: whitespace-separated potentials");
  g->add_option("--p-file", gen.p_file, "Mixed: potentials of the merged block (default all zero)");
  g->add_option("--matrix-file", gen.matrix_file, "Wrandom: class matrix, one row per line");
  g->add_option("--out", gen.out, "TRN output file (default: standard output)");

  CountOptions count;
  auto* c = app.add_subcommand("count", "Exact cycle and transitive-subset densities");
  c->add_option("--in", count.in, "TRN file, - for standard input")->required();
  c->add_option("--format", count.format, "json or text");

  SpectralOptions spectral;
  auto* s = app.add_subcommand("spectral", "Skew-symmetric profile, normalized eigenvalues and checks");
  s->add_option("--in", spectral.in, "TRN file, - for standard input")->required();
  s->add_option("--tol", spectral.tol, "Tolerance of the potential-matrix test");

  double d = 0;
  auto* b = app.add_subcommand("bound", "g(d), both envelopes and the regime parameters");
  b->add_option("--d", d, "3-cycle density in [0, 1/8]")->required();

  OptimizeOptions opt;
  auto* o = app.add_subcommand("optimize", "Solve the spectral optimization problem");
  o->add_option("--s3", opt.s3, "Cubic moment s3");
  o->add_option("--rho", opt.rho, "Spectral radius");
  o->add_flag("--sweep", opt.sweep, "Minimize over rho");
  o->add_option("--batch", opt.batch, "CSV of s3,rho rows (empty rho sweeps)");
  o->add_option("--k-max", opt.k_max, "Cap on extra real eigenvalues (0 = none)");
  o->add_option("--l-max", opt.l_max, "Cap on complex pairs (0 = none)");
  o->add_option("--grid", opt.grid, "Rho grid points for sweeps");

  RegionOptions region;
  auto* r = app.add_subcommand("region", "CSV of g and the envelopes over d in [0, 1/8]");
  r->add_option("--grid", region.grid, "Number of grid points (>= 2)");
  r->add_option("--sample-n", region.sample_n, "Append densities of sampled blow-ups of this order");
  r->add_option("--seed", region.seed, "Base seed for sampled rows (row i uses seed xor i)");
  r->add_option("--out", region.out, "Output file (default: standard output)");

  EnumerateOptions en;
  auto* e = app.add_subcommand("enumerate", "Summarize all tournaments of a given order");
  e->add_option("--n", en.n, "Order")->required();
  e->add_option("--first", en.first, "First index");
  e->add_option("--last", en.last, "One past the last index (0 = end)");
  e->add_flag("--allow-large", en.allow_large, "Allow orders above 7");
  e->add_flag("!--progress", en.progress, "Silence progress lines on standard error");

  VerifyOptions ver;
  auto* v = app.add_subcommand("verify", "Run a verification suite");
  v->add_option("--suite", ver.suite,
                "small-exhaustive|equality-family|spectral-identities|bridge-identities|identity-t4|"
                "construction-densities|optimizer-crosscheck|region-consistency|all")
      ->required();
  v->add_option("--max-n", ver.max_n, "Largest enumerated order");
  v->add_option("--seed", ver.seed, "Seed");
  v->add_option("--samples", ver.samples, "Override the suite's sample count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    const unsigned workers = resolve_threads(threads);
    if (*g) return cmd_gen(gen);
    if (*c) return cmd_count(count);
    if (*s) return cmd_spectral(spectral);
    if (*b) return cmd_bound(d);
    if (*o) return cmd_optimize(opt);
    if (*r) {
      region.threads = workers;
      return cmd_region(region);
    }
    if (*e) {
      en.threads = workers;
      return cmd_enumerate(en);
    }
    if (*v) {
      ver.threads = workers;
      return cmd_verify(ver);
    }
  } catch (const tourn::ValidationError& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kExitValidation;
  } catch (const tourn::InfeasibleError& err) {
    std::cerr << "infeasible: " << err.what() << '\n';
    return kExitValidation;
  } catch (const tourn::NumericalError& err) {
    std::cerr << "numerical failure: " << err.what() << '\n';
    return kExitNumerical;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kExitValidation;
  }
  return kExitValidation;
}
