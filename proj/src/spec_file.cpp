#include "manifold_landau/spec_file.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace manifold_landau {
namespace {

using Json = nlohmann::ordered_json;

std::string join(const std::string& prefix, const std::string& key) {
  return prefix.empty() ? key : prefix + "." + key;
}

void allow_only(const Json& obj, const std::string& where, std::initializer_list<const char*> keys) {
  if (!obj.is_object()) throw SpecError(where, "expected an object");
  const std::set<std::string> allowed(keys.begin(), keys.end());
  for (const auto& item : obj.items())
    if (!allowed.count(item.key())) throw SpecError(join(where, item.key()), "unknown key");
}

const Json& require(const Json& obj, const std::string& where, const char* key) {
  if (!obj.contains(key)) throw SpecError(join(where, key), "missing required key");
  return obj.at(key);
}

double number(const Json& v, const std::string& path) {
  if (!v.is_number()) throw SpecError(path, "expected a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw SpecError(path, "expected a finite number");
  return d;
}

double number_or(const Json& obj, const std::string& where, const char* key, double fallback) {
  return obj.contains(key) ? number(obj.at(key), join(where, key)) : fallback;
}

AmbientVector triple(const Json& v, const std::string& path) {
  if (!v.is_array() || v.size() != 3) throw SpecError(path, "expected an array of 3 numbers");
  AmbientVector out(3);
  for (std::size_t i = 0; i < 3; ++i) out[i] = number(v[i], path + "[" + std::to_string(i) + "]");
  return out;
}

std::string text(const Json& v, const std::string& path) {
  if (!v.is_string()) throw SpecError(path, "expected a string");
  return v.get<std::string>();
}

/// Runs a library constructor and re-labels its validation error with the key.
template <class F>
auto at_key(const std::string& path, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const SpecError&) {
    throw;
  } catch (const Error& e) {
    throw SpecError(path, e.what());
  }
}

Phase parse_phase(const Json& p, const std::string& where) {
  if (!p.is_object()) throw SpecError(where, "expected an object");
  const std::string kind = text(require(p, where, "kind"), join(where, "kind"));
  if (kind == "linear") {
    allow_only(p, where, {"kind", "omega", "phi"});
    return Phase::linear(number_or(p, where, "omega", 1.0), number_or(p, where, "phi", 0.0));
  }
  if (kind == "quadratic") {
    allow_only(p, where, {"kind", "alpha", "omega"});
    return Phase::quadratic(number_or(p, where, "alpha", 1.0), number_or(p, where, "omega", 0.0));
  }
  if (kind == "sinusoidal") {
    allow_only(p, where, {"kind", "amplitude", "omega", "drift"});
    return Phase::sinusoidal(number_or(p, where, "amplitude", 1.0), number_or(p, where, "omega", 1.0),
                             number_or(p, where, "drift", 0.0));
  }
  throw SpecError(join(where, "kind"), "unknown phase kind '" + kind + "'");
}

ScalarSeries parse_series(const Json& c, const std::string& where) {
  allow_only(c, where, {"constant", "linear", "quadratic", "sines"});
  ScalarSeries s;
  s.constant = number_or(c, where, "constant", 0.0);
  s.linear = number_or(c, where, "linear", 0.0);
  s.quadratic = number_or(c, where, "quadratic", 0.0);
  if (c.contains("sines")) {
    const Json& arr = c.at("sines");
    const std::string path = join(where, "sines");
    if (!arr.is_array()) throw SpecError(path, "expected an array");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string item = path + "[" + std::to_string(i) + "]";
      allow_only(arr[i], item, {"amplitude", "omega", "phi"});
      s.sines.push_back({number_or(arr[i], item, "amplitude", 1.0), number_or(arr[i], item, "omega", 1.0),
                         number_or(arr[i], item, "phi", 0.0)});
    }
  }
  return s;
}

Curve parse_curve(const Json& doc, const std::filesystem::path& base_dir) {
  const std::string family = text(require(doc, "", "family"), "family");
  static const std::set<std::string> common = {"family", "window", "aux", "seed"};
  auto allow = [&](std::initializer_list<const char*> extra) {
    for (const auto& item : doc.items()) {
      if (common.count(item.key())) continue;
      bool ok = false;
      for (const char* k : extra) ok = ok || item.key() == k;
      if (!ok) throw SpecError(item.key(), "unknown key for family '" + family + "'");
    }
  };

  if (family == "latitude") {
    allow({"colatitude", "phase"});
    const double theta0 = number(require(doc, "", "colatitude"), "colatitude");
    const Phase phase = doc.contains("phase") ? parse_phase(doc.at("phase"), "phase") : Phase::linear(1.0);
    return at_key("colatitude", [&] { return Curve::latitude(theta0, phase); });
  }
  if (family == "great_circle") {
    allow({"a", "b", "phase"});
    const AmbientVector a = doc.contains("a") ? triple(doc.at("a"), "a") : AmbientVector{1.0, 0.0, 0.0};
    const AmbientVector b = doc.contains("b") ? triple(doc.at("b"), "b") : AmbientVector{0.0, 1.0, 0.0};
    const Phase phase = doc.contains("phase") ? parse_phase(doc.at("phase"), "phase") : Phase::linear(1.0);
    return at_key("a", [&] { return Curve::great_circle(a, b, phase); });
  }
  if (family == "compound") {
    allow({"center", "terms"});
    const AmbientVector center = triple(require(doc, "", "center"), "center");
    const Json& arr = require(doc, "", "terms");
    if (!arr.is_array()) throw SpecError("terms", "expected an array");
    std::vector<CompoundTerm> terms;
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string item = "terms[" + std::to_string(i) + "]";
      allow_only(arr[i], item, {"radius", "omega", "phi", "u", "v"});
      CompoundTerm t;
      t.radius = number(require(arr[i], item, "radius"), join(item, "radius"));
      t.omega = number_or(arr[i], item, "omega", 1.0);
      t.phi = number_or(arr[i], item, "phi", 0.0);
      if (arr[i].contains("u")) t.u = triple(arr[i].at("u"), join(item, "u"));
      if (arr[i].contains("v")) t.v = triple(arr[i].at("v"), join(item, "v"));
      terms.push_back(t);
    }
    return at_key("terms", [&] { return Curve::compound(center, std::move(terms)); });
  }
  if (family == "euclidean") {
    allow({"components"});
    const Json& arr = require(doc, "", "components");
    if (!arr.is_array() || arr.empty()) throw SpecError("components", "expected a non-empty array");
    std::vector<ScalarSeries> comps;
    for (std::size_t i = 0; i < arr.size(); ++i) comps.push_back(parse_series(arr[i], "components[" + std::to_string(i) + "]"));
    return at_key("components", [&] { return Curve::euclidean(std::move(comps)); });
  }
  if (family == "sampled") {
    allow({"csv"});
    std::filesystem::path path = text(require(doc, "", "csv"), "csv");
    if (path.is_relative() && !base_dir.empty()) path = base_dir / path;
    std::ifstream in(path);
    if (!in) throw SpecError("csv", "cannot open " + path.string());
    return at_key("csv", [&] { return load_sampled(read_sample_csv(in)); });
  }
  throw SpecError("family", "unknown family '" + family + "'");
}

}  // namespace

AuxFunction CurveSpec::aux_function() const {
  if (!aux.center) throw InvalidInput("auxiliary centre is chosen by the Chebyshev solver");
  switch (aux.kind) {
    case AuxKind::ChordalHalfSquare:
      return AuxFunction::chordal(SurfacePoint::make(*aux.center));
    case AuxKind::IntrinsicHalfSquare:
      return AuxFunction::intrinsic(SurfacePoint::make(*aux.center));
    case AuxKind::EuclideanQuadratic:
      return AuxFunction::euclidean_quadratic(*aux.center);
  }
  throw InvalidInput("unknown auxiliary kind");
}

CurveSpec parse_curve_spec(const std::string& source, const std::filesystem::path& base_dir) {
  Json doc;
  try {
    doc = Json::parse(source);
  } catch (const nlohmann::json::parse_error& e) {
    throw SpecError("", std::string("not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw SpecError("", "spec must be a JSON object");

  CurveSpec spec{parse_curve(doc, base_dir), std::nullopt, {}, 42};
  const Manifold& m = spec.curve.manifold();

  if (doc.contains("window")) {
    const Json& w = doc.at("window");
    allow_only(w, "window", {"t_min", "t_max", "samples"});
    const double t_min = number(require(w, "window", "t_min"), "window.t_min");
    const double t_max = number(require(w, "window", "t_max"), "window.t_max");
    const Json& s = require(w, "window", "samples");
    if (!s.is_number_integer() || s.get<long long>() < 3)
      throw SpecError("window.samples", "expected an integer >= 3");
    if (!(t_min < t_max)) throw SpecError("window.t_max", "must exceed t_min");
    spec.window = TimeWindow(t_min, t_max, s.get<std::size_t>());
  }

  if (doc.contains("seed")) {
    const Json& s = doc.at("seed");
    if (!s.is_number_integer() || s.get<long long>() < 0) throw SpecError("seed", "expected a non-negative integer");
    spec.seed = s.get<std::uint64_t>();
  }

  if (m.is_sphere()) {
    spec.aux = {AuxKind::ChordalHalfSquare, std::nullopt};
  } else {
    spec.aux = {AuxKind::EuclideanQuadratic, AmbientVector(m.ambient_dim())};
  }
  if (doc.contains("aux")) {
    const Json& a = doc.at("aux");
    allow_only(a, "aux", {"kind", "center"});
    if (a.contains("kind")) {
      const std::string kind = text(a.at("kind"), "aux.kind");
      if (kind == "chordal") spec.aux.kind = AuxKind::ChordalHalfSquare;
      else if (kind == "intrinsic") spec.aux.kind = AuxKind::IntrinsicHalfSquare;
      else if (kind == "quadratic") spec.aux.kind = AuxKind::EuclideanQuadratic;
      else throw SpecError("aux.kind", "unknown auxiliary kind '" + kind + "'");
    }
    const bool sphere_kind = spec.aux.kind != AuxKind::EuclideanQuadratic;
    if (sphere_kind != m.is_sphere()) throw SpecError("aux.kind", "does not match the curve's manifold");
    if (a.contains("center")) {
      const Json& c = a.at("center");
      if (c.is_string()) {
        if (c.get<std::string>() != "chebyshev") throw SpecError("aux.center", "expected a vector or \"chebyshev\"");
        if (spec.aux.kind != AuxKind::ChordalHalfSquare)
          throw SpecError("aux.center", "\"chebyshev\" is only available for the chordal function");
        spec.aux.center.reset();
      } else {
        if (!c.is_array() || c.size() != m.ambient_dim())
          throw SpecError("aux.center", "expected an array of " + std::to_string(m.ambient_dim()) + " numbers");
        AmbientVector v(m.ambient_dim());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = number(c[i], "aux.center[" + std::to_string(i) + "]");
        if (m.is_sphere()) at_key("aux.center", [&] { return SurfacePoint::make(v); });
        spec.aux.center = v;
      }
    } else if (spec.aux.kind == AuxKind::IntrinsicHalfSquare) {
      throw SpecError("aux.center", "the intrinsic function needs an explicit centre");
    }
  }
  return spec;
}

CurveSpec load_curve_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("", "cannot open spec file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_curve_spec(buf.str(), path.parent_path());
}

}  // namespace manifold_landau
