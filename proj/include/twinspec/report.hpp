#pragma once

// Serialisation of polynomials, spectra and displacement reports.

#include <string>

#include <nlohmann/json.hpp>

#include "twinspec/charpoly.hpp"
#include "twinspec/displacement.hpp"
#include "twinspec/spectrum.hpp"

namespace twinspec {

/// `digits` significant figures, trailing zeros kept; exact zero prints "0".
std::string format_sig(double value, int digits = 3);

/// Array of decimal strings, ascending degree.
nlohmann::json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const nlohmann::json& j);

nlohmann::json spectrum_to_json(const Spectrum& s);
nlohmann::json twin_pair_to_json(const TwinPair& p);
nlohmann::json identity_report_to_json(const TwinIdentityReport& r);

nlohmann::json report_to_json(const DisplacementReport& r);
std::string report_to_csv(const DisplacementReport& r);
/// Appendix-style table; the chosen estimate is wrapped in asterisks.
std::string report_to_text(const DisplacementReport& r);

}  // namespace twinspec
