#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tourn/tournament.hpp"

namespace tourn::cli {

/// Reads a TRN file; "-" means standard input.
Tournament load_tournament(const std::string& path);

/// Whitespace-separated reals. "-" means standard input.
std::vector<double> load_reals(const std::string& path);

/// Square matrix given as whitespace-separated rows.
TournamentMatrix load_matrix(const std::string& path);

/// Runs `write` against `path`, or standard output when path is empty or "-".
void with_output(const std::string& path, const std::function<void(std::ostream&)>& write);

void print_json(std::ostream& out, const nlohmann::json& j);

/// Worker count: the explicit flag, else TOURN_THREADS, else hardware concurrency.
unsigned resolve_threads(int flag);

/// 17 significant digits, '.' decimal point.
std::string format_real(double x);

}  // namespace tourn::cli
