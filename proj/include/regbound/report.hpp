#pragma once

// JSON and text renderings of analysis results. Field names are part of the
// stable CLI surface; the certification report carries "schema": 1.

#include "regbound/certify.hpp"

#include "json.hpp"

#include <string>

namespace regbound {

inline constexpr int kReportSchemaVersion = 1;

// Rounds to 10 decimals (and clears negative zero) so JSON output is stable.
double round_for_report(double x);

nlohmann::json spectrum_json(const Spectrum& s);
nlohmann::json intersection_array_json(const IntersectionArray& a);
nlohmann::json conditions_json(const CertificateConditions& c);
nlohmann::json certificate_json(const CertificateSummary& c);
nlohmann::json report_json(const CertificationReport& r);

std::string spectrum_text(const Spectrum& s);
std::string report_text(const CertificationReport& r);

}  // namespace regbound
