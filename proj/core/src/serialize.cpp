#include "tourn/serialize.hpp"

#include "tourn/trn.hpp"

namespace tourn {

using nlohmann::json;

void to_json(json& j, const DensityReport& r) {
  j = json{{"n", r.n},         {"homs3", r.homs3},   {"homs4", r.homs4},
           {"homs5", r.homs5}, {"t3", r.t3},         {"t4", r.t4},
           {"t5", r.t5},       {"tT3", r.tT3},       {"tT4", r.tT4},
           {"sigma3", r.sigma3}, {"sigma4", r.sigma4}, {"identity_residual", r.identity_residual}};
}

void to_json(json& j, const SpectralProfile& p) {
  json pairs = json::array();
  for (const auto& q : p.pairs) pairs.push_back({{"lambda", q.lambda}, {"alpha", q.alpha}});
  j = json{{"n", p.n}, {"pairs", pairs}, {"residual", p.residual}};
  j["alpha_extra"] = p.alpha_extra ? json(*p.alpha_extra) : json(nullptr);
}

void to_json(json& j, const EigenSpectrum& s) {
  json pairs = json::array();
  for (const auto& c : s.complex_pairs) pairs.push_back({{"a", c.a}, {"b", c.b}});
  j = json{{"rho", s.rho}, {"reals", s.reals}, {"complex_pairs", pairs}};
}

void to_json(json& j, const EigenChecks& c) {
  j = json{{"linear_residual", c.linear_residual},
           {"cubic_residual", c.cubic_residual},
           {"quartic_residual", c.quartic_residual},
           {"min_real_part", c.min_real_part},
           {"rho_dominates", c.rho_dominates},
           {"ok", c.ok}};
}

void to_json(json& j, const RegimePoint& p) { j = json{{"d", p.d}, {"z", p.z}, {"k", p.k}}; }

void to_json(json& j, const SpectrumSolution& s) {
  j = json{{"value", s.value}, {"witness", s.witness}, {"case_tag", to_string(s.case_tag)}};
}

void to_json(json& j, const RhoSweepResult& r) {
  j = json{{"value", r.value}, {"rho", r.rho}, {"solution", r.solution}};
}

json summary_json(const EnumerationSummary& s) {
  json j{{"n", s.n},
         {"first", s.first},
         {"last", s.last},
         {"visited", s.visited},
         {"with_triangle", s.with_triangle},
         {"checked", s.checked},
         {"sigma3_threshold", s.sigma3_threshold}};
  if (s.min_gap) {
    j["min_gap"] = *s.min_gap;
    j["argmin"] = {{"index", s.argmin_index},
                   {"sigma3", s.argmin_sigma3},
                   {"sigma4", s.argmin_sigma4},
                   {"trn", write_trn(tournament_from_index(s.n, s.argmin_index))}};
  } else {
    j["min_gap"] = nullptr;
    j["argmin"] = nullptr;
  }
  return j;
}

json bound_json(double d) {
  json j{{"d", d}, {"g", g(d)}, {"lm_lower", lower_envelope_lm(d)}, {"upper", upper_envelope(d)}};
  if (d > 0) {
    const RegimePoint p = invert_z(d);
    j["z"] = p.z;
    j["k"] = p.k;
  } else {
    j["z"] = nullptr;
    j["k"] = nullptr;
  }
  return j;
}

}  // namespace tourn
