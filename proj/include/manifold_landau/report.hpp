#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "manifold_landau/chebyshev.hpp"
#include "manifold_landau/inequality.hpp"

namespace manifold_landau {

inline constexpr const char* kToolName = "manifold-landau";
inline constexpr const char* kToolVersion = "1.0.0";

using Json = nlohmann::ordered_json;

/// Report envelope shared by every command: tool, version, command name and
/// a notes list; the payload keys are added by the caller. Matches
/// schema/report.schema.json.
Json report_envelope(const std::string& command);

// Non-finite reals are written as the strings "nan", "inf" and "-inf" and
// read back to the same values, so every record round-trips exactly.
Json real_to_json(double v);
double real_from_json(const Json& j);

Json to_json(const TimeWindow& w);
Json to_json(const SupEstimate& s);
Json to_json(const LambdaEstimate& l);
Json to_json(const BoundReport& r);
Json to_json(const CapCenter& c);
Json to_json(const ProofDiagnostics& d);
Json to_json(const ClassicalReport& r);
Json to_json(const LandauConstant& c);
Json to_json(const ProbeResult& p);

TimeWindow window_from_json(const Json& j);
SupEstimate sup_from_json(const Json& j);
LambdaEstimate lambda_from_json(const Json& j);
BoundReport bound_from_json(const Json& j);
CapCenter cap_from_json(const Json& j);
ProofDiagnostics diagnostics_from_json(const Json& j);
ClassicalReport classical_from_json(const Json& j);

std::string probe_family_name(ProbeFamily f);
ProbeFamily probe_family_from_name(const std::string& name);

/// Minimal RFC 4180 writer: fields containing a comma, quote, CR or LF are
/// quoted with doubled inner quotes; rows end in CRLF.
class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}
  void row(const std::vector<std::string>& fields);
  static std::string field(double v);
  static std::string quote(const std::string& s);

 private:
  std::ostream& out_;
};

/// Writes t,speed,cov_accel_norm,v,U rows.
void write_series_csv(std::ostream& out, const std::vector<SeriesRow>& rows);

}  // namespace manifold_landau
