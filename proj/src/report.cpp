#include "manifold_landau/report.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace manifold_landau {
namespace {

Json vec_to_json(const AmbientVector& v) {
  Json a = Json::array();
  for (double c : v.coords()) a.push_back(real_to_json(c));
  return a;
}

AmbientVector vec_from_json(const Json& j) {
  if (!j.is_array() || j.empty() || j.size() > AmbientVector::kMaxDim)
    throw InvalidInput("report vector must be a non-empty array");
  AmbientVector v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v[i] = real_from_json(j[i]);
  return v;
}

const char* method_name(LambdaMethod m) {
  return m == LambdaMethod::ClosedForm ? "closed_form" : "directional_scan";
}

}  // namespace

Json report_envelope(const std::string& command) {
  Json j;
  j["tool"] = kToolName;
  j["version"] = kToolVersion;
  j["command"] = command;
  j["notes"] = Json::array();
  return j;
}

Json real_to_json(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

double real_from_json(const Json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
  }
  throw InvalidInput("expected a real number in report");
}

Json to_json(const TimeWindow& w) {
  return {{"t_min", w.t_min()}, {"t_max", w.t_max()}, {"samples", w.samples()}, {"step", w.step()}};
}

TimeWindow window_from_json(const Json& j) {
  return TimeWindow(j.at("t_min").get<double>(), j.at("t_max").get<double>(), j.at("samples").get<std::size_t>());
}

Json to_json(const SupEstimate& s) {
  return {{"value", real_to_json(s.value)},       {"argmax_t", real_to_json(s.argmax_t)},
          {"grid_step", real_to_json(s.grid_step)}, {"refined", s.refined},
          {"grid_value", real_to_json(s.grid_value)}, {"samples", s.samples}};
}

SupEstimate sup_from_json(const Json& j) {
  SupEstimate s;
  s.value = real_from_json(j.at("value"));
  s.argmax_t = real_from_json(j.at("argmax_t"));
  s.grid_step = real_from_json(j.at("grid_step"));
  s.refined = j.at("refined").get<bool>();
  s.grid_value = real_from_json(j.at("grid_value"));
  s.samples = j.at("samples").get<std::size_t>();
  return s;
}

Json to_json(const LambdaEstimate& l) {
  return {{"value", real_to_json(l.value)},
          {"argmin_t", real_to_json(l.argmin_t)},
          {"argmin_direction", vec_to_json(l.argmin_direction)},
          {"method", method_name(l.method)},
          {"grid_value", real_to_json(l.grid_value)}};
}

LambdaEstimate lambda_from_json(const Json& j) {
  LambdaEstimate l;
  l.value = real_from_json(j.at("value"));
  l.argmin_t = real_from_json(j.at("argmin_t"));
  l.argmin_direction = vec_from_json(j.at("argmin_direction"));
  const std::string m = j.at("method").get<std::string>();
  if (m != "closed_form" && m != "directional_scan") throw InvalidInput("unknown lambda method " + m);
  l.method = m == "closed_form" ? LambdaMethod::ClosedForm : LambdaMethod::DirectionalScan;
  l.grid_value = real_from_json(j.at("grid_value"));
  return l;
}

Json to_json(const BoundReport& r) {
  Json j;
  j["C"] = real_to_json(r.C);
  j["lhs"] = real_to_json(r.lhs);
  j["rhs"] = real_to_json(r.rhs);
  j["slack_ratio"] = real_to_json(r.slack_ratio);
  j["hypotheses_ok"] = r.hypotheses_ok;
  j["satisfied"] = r.satisfied;
  j["window_covers_period"] = r.window_covers_period;
  j["sup_U"] = real_to_json(r.sup_U);
  j["speed"] = to_json(r.speed);
  j["r0"] = to_json(r.r0);
  j["r2"] = to_json(r.r2);
  j["lambda"] = to_json(r.lambda);
  j["window"] = to_json(r.window);
  j["notes"] = r.notes;
  return j;
}

BoundReport bound_from_json(const Json& j) {
  BoundReport r;
  r.C = real_from_json(j.at("C"));
  r.lhs = real_from_json(j.at("lhs"));
  r.rhs = real_from_json(j.at("rhs"));
  r.slack_ratio = real_from_json(j.at("slack_ratio"));
  r.hypotheses_ok = j.at("hypotheses_ok").get<bool>();
  r.satisfied = j.at("satisfied").get<bool>();
  r.window_covers_period = j.at("window_covers_period").get<bool>();
  r.sup_U = real_from_json(j.at("sup_U"));
  r.speed = sup_from_json(j.at("speed"));
  r.r0 = sup_from_json(j.at("r0"));
  r.r2 = sup_from_json(j.at("r2"));
  r.lambda = lambda_from_json(j.at("lambda"));
  r.window = window_from_json(j.at("window"));
  r.notes = j.at("notes").get<std::vector<std::string>>();
  return r;
}

Json to_json(const CapCenter& c) {
  return {{"e", vec_to_json(c.e)},
          {"minimax_chordal_radius", real_to_json(c.minimax_chordal_radius)},
          {"min_inner_product", real_to_json(c.min_inner_product)},
          {"iterations", c.iterations},
          {"converged", c.converged},
          {"warning", c.warning}};
}

CapCenter cap_from_json(const Json& j) {
  CapCenter c;
  c.e = vec_from_json(j.at("e"));
  c.minimax_chordal_radius = real_from_json(j.at("minimax_chordal_radius"));
  c.min_inner_product = real_from_json(j.at("min_inner_product"));
  c.iterations = j.at("iterations").get<std::size_t>();
  c.converged = j.at("converged").get<bool>();
  c.warning = j.at("warning").get<std::string>();
  return c;
}

Json to_json(const ProofDiagnostics& d) {
  return {{"v_bound_ok", d.v_bound_ok},
          {"speed_lipschitz_ok", d.speed_lipschitz_ok},
          {"chain_ok", d.chain_ok},
          {"v_worst_t", real_to_json(d.v_worst_t)},
          {"v_worst_ratio", real_to_json(d.v_worst_ratio)},
          {"speed_worst_t", real_to_json(d.speed_worst_t)},
          {"speed_worst_ratio", real_to_json(d.speed_worst_ratio)},
          {"chain_worst_t", real_to_json(d.chain_worst_t)},
          {"chain_worst_ratio", real_to_json(d.chain_worst_ratio)},
          {"samples", d.samples}};
}

ProofDiagnostics diagnostics_from_json(const Json& j) {
  ProofDiagnostics d;
  d.v_bound_ok = j.at("v_bound_ok").get<bool>();
  d.speed_lipschitz_ok = j.at("speed_lipschitz_ok").get<bool>();
  d.chain_ok = j.at("chain_ok").get<bool>();
  d.v_worst_t = real_from_json(j.at("v_worst_t"));
  d.v_worst_ratio = real_from_json(j.at("v_worst_ratio"));
  d.speed_worst_t = real_from_json(j.at("speed_worst_t"));
  d.speed_worst_ratio = real_from_json(j.at("speed_worst_ratio"));
  d.chain_worst_t = real_from_json(j.at("chain_worst_t"));
  d.chain_worst_ratio = real_from_json(j.at("chain_worst_ratio"));
  d.samples = j.at("samples").get<std::size_t>();
  return d;
}

Json to_json(const ClassicalReport& r) {
  return {{"f", to_json(r.f)},
          {"f1", to_json(r.f1)},
          {"f2", to_json(r.f2)},
          {"lhs", real_to_json(r.lhs)},
          {"rhs", real_to_json(r.rhs)},
          {"slack_ratio", real_to_json(r.slack_ratio)},
          {"satisfied", r.satisfied},
          {"constant", real_to_json(r.constant)},
          {"banach_constant", real_to_json(r.banach_constant)},
          {"window", to_json(r.window)}};
}

ClassicalReport classical_from_json(const Json& j) {
  ClassicalReport r;
  r.f = sup_from_json(j.at("f"));
  r.f1 = sup_from_json(j.at("f1"));
  r.f2 = sup_from_json(j.at("f2"));
  r.lhs = real_from_json(j.at("lhs"));
  r.rhs = real_from_json(j.at("rhs"));
  r.slack_ratio = real_from_json(j.at("slack_ratio"));
  r.satisfied = j.at("satisfied").get<bool>();
  r.constant = real_from_json(j.at("constant"));
  r.banach_constant = real_from_json(j.at("banach_constant"));
  r.window = window_from_json(j.at("window"));
  return r;
}

Json to_json(const LandauConstant& c) {
  return {{"C", real_to_json(c.C)}, {"residual", real_to_json(c.residual)}, {"C_squared", real_to_json(c.C * c.C)}};
}

Json to_json(const ProbeResult& p) {
  Json samples = Json::array();
  for (const auto& s : p.samples) {
    Json params = Json::array();
    for (double v : s.parameters) params.push_back(real_to_json(v));
    samples.push_back({{"q", real_to_json(s.q)}, {"parameters", params}});
  }
  Json best = Json::array();
  for (double v : p.best_parameters) best.push_back(real_to_json(v));
  return {{"family", probe_family_name(p.family)},
          {"parameter_names", p.parameter_names},
          {"best_q", real_to_json(p.best_q)},
          {"best_sqrt_q", real_to_json(std::sqrt(p.best_q))},
          {"best_parameters", best},
          {"evaluated", p.evaluated},
          {"skipped", p.skipped},
          {"C", real_to_json(p.C)},
          {"C_squared", real_to_json(p.C * p.C)},
          {"seed", p.seed},
          {"within_bound", p.within_bound},
          {"samples", samples}};
}

std::string probe_family_name(ProbeFamily f) {
  switch (f) {
    case ProbeFamily::LatitudeSweep:
      return "latitude";
    case ProbeFamily::GreatCircleSinusoidal:
      return "great_circle";
    case ProbeFamily::CompoundRandom:
      return "compound";
  }
  return "unknown";
}

ProbeFamily probe_family_from_name(const std::string& name) {
  if (name == "latitude") return ProbeFamily::LatitudeSweep;
  if (name == "great_circle") return ProbeFamily::GreatCircleSinusoidal;
  if (name == "compound") return ProbeFamily::CompoundRandom;
  throw InvalidInput("unknown probe family '" + name + "' (expected latitude, great_circle or compound)");
}

std::string CsvWriter::quote(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string CsvWriter::field(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::ostringstream s;
  s.precision(17);
  s << v;
  return s.str();
}

void CsvWriter::row(const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out_ << ',';
    out_ << quote(fields[i]);
  }
  out_ << "\r\n";
}

void write_series_csv(std::ostream& out, const std::vector<SeriesRow>& rows) {
  CsvWriter w(out);
  w.row({"t", "speed", "cov_accel_norm", "v", "U"});
  for (const auto& r : rows)
    w.row({CsvWriter::field(r.t), CsvWriter::field(r.speed), CsvWriter::field(r.covariant_accel),
           CsvWriter::field(r.v), CsvWriter::field(r.u)});
}

}  // namespace manifold_landau
