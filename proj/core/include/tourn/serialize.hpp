#pragma once

#include <nlohmann/json.hpp>

#include "tourn/bounds.hpp"
#include "tourn/counting.hpp"
#include "tourn/enumerate.hpp"
#include "tourn/spectral.hpp"
#include "tourn/spectrum_opt.hpp"

namespace tourn {

void to_json(nlohmann::json& j, const DensityReport& r);
void to_json(nlohmann::json& j, const SpectralProfile& p);
void to_json(nlohmann::json& j, const EigenSpectrum& s);
void to_json(nlohmann::json& j, const EigenChecks& c);
void to_json(nlohmann::json& j, const RegimePoint& p);
void to_json(nlohmann::json& j, const SpectrumSolution& s);
void to_json(nlohmann::json& j, const RhoSweepResult& r);

/// Summary plus the TRN text of the minimising tournament, if any.
nlohmann::json summary_json(const EnumerationSummary& s);

/// g, both envelopes and the regime parametrisation at d.
nlohmann::json bound_json(double d);

}  // namespace tourn
