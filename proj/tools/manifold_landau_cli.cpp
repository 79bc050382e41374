#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>

#include "manifold_landau/inequality.hpp"
#include "manifold_landau/report.hpp"
#include "manifold_landau/spec_file.hpp"

using namespace manifold_landau;

namespace {

enum Exit { kOk = 0, kInputError = 1, kHypothesesFail = 2, kBoundViolated = 3 };

enum class Format { Text, Json, Csv };

const char* kSeriesColumns =
    "CSV time series columns: t, speed (|x'|), cov_accel_norm (|covariant acceleration|),\n"
    "v (d/dt U(x(t))), U (U(x(t))). Fields are RFC 4180 quoted, rows end in CRLF.";

struct Output {
  bool json = false;
  bool csv = false;
  Format format() const { return json ? Format::Json : csv ? Format::Csv : Format::Text; }
};

void add_format_flags(CLI::App* cmd, Output& out) {
  auto* j = cmd->add_flag("--json", out.json, "Emit a JSON report");
  auto* c = cmd->add_flag("--csv", out.csv, "Emit CSV instead of text");
  j->excludes(c);
}

void print_json(const Json& j) { std::cout << j.dump(2) << '\n'; }

std::string fmt(double v, int digits = 10) {
  std::ostringstream s;
  s << std::setprecision(digits) << v;
  return s.str();
}

std::string vec_text(const AmbientVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + fmt(v[i]);
  return s + ")";
}

void print_bound_text(const BoundReport& r) {
  std::cout << "window       [" << fmt(r.window.t_min()) << ", " << fmt(r.window.t_max()) << "], "
            << r.window.samples() << " samples\n"
            << "sup speed    " << fmt(r.speed.value) << "\n"
            << "r0           " << fmt(r.r0.value) << "\n"
            << "r2           " << fmt(r.r2.value) << "\n"
            << "lambda       " << fmt(r.lambda.value) << "\n"
            << "sup U        " << fmt(r.sup_U) << "\n"
            << "lhs          " << fmt(r.lhs) << "\n"
            << "rhs          " << fmt(r.rhs) << "\n"
            << "slack_ratio  " << fmt(r.slack_ratio) << "\n"
            << "hypotheses   " << (r.hypotheses_ok ? "ok" : "violated") << "\n"
            << "satisfied    " << (r.satisfied ? "yes" : "no") << (r.hypotheses_ok ? "" : " (non-binding)") << "\n";
  for (const auto& n : r.notes) std::cout << "note: " << n << '\n';
}

// A violation only contradicts the theorem when the window stands for the
// whole line, i.e. it covers a full period of a periodic curve.
int bound_exit(const BoundReport& r) {
  if (!r.hypotheses_ok) return kHypothesesFail;
  if (r.satisfied) return kOk;
  return r.window_covers_period ? kBoundViolated : kHypothesesFail;
}

struct Evaluated {
  BoundReport bound;
  std::optional<SphereBoundReport> sphere;
  AuxFunction aux;
};

Evaluated evaluate(const CurveSpec& spec) {
  const TimeWindow w = spec.resolved_window();
  if (spec.chebyshev_center()) {
    SphereBoundReport s = theorem2_report(spec.curve, w);
    const AuxFunction u = AuxFunction::chordal(SurfacePoint::make(s.center.e));
    BoundReport b = s.bound;
    return {std::move(b), std::move(s), u};
  }
  const AuxFunction u = spec.aux_function();
  return {theorem1_report(spec.curve, u, w), std::nullopt, u};
}

Json bound_json(const std::string& command, const CurveSpec& spec, const Evaluated& ev, int exit_code) {
  Json j = report_envelope(command);
  for (const auto& n : ev.bound.notes) j["notes"].push_back(n);
  j["family"] = spec.curve.family_name();
  j["seed"] = spec.seed;
  j["center_mode"] = ev.sphere ? "chebyshev" : "explicit";
  j["bound"] = to_json(ev.bound);
  j["sharpness_q"] = real_to_json(sharpness_ratio(ev.bound));
  if (ev.sphere) {
    j["center"] = to_json(ev.sphere->center);
    j["rhs_relaxed"] = real_to_json(ev.sphere->rhs_relaxed);
    j["slack_relaxed"] = real_to_json(ev.sphere->slack_relaxed);
    j["cloud_samples"] = ev.sphere->cloud_samples;
  }
  j["exit_code"] = exit_code;
  return j;
}

int cmd_constant(const Output& out, int digits) {
  const LandauConstant c = landau_constant();
  switch (out.format()) {
    case Format::Json: {
      Json j = report_envelope("constant");
      j["constant"] = to_json(c);
      print_json(j);
      break;
    }
    case Format::Csv: {
      CsvWriter w(std::cout);
      w.row({"C", "residual", "C_squared"});
      w.row({CsvWriter::field(c.C), CsvWriter::field(c.residual), CsvWriter::field(c.C * c.C)});
      break;
    }
    case Format::Text:
      std::cout << std::fixed << std::setprecision(digits) << c.C << '\n';
      std::cout << std::defaultfloat << "residual " << std::setprecision(3) << c.residual << '\n';
      break;
  }
  return kOk;
}

int cmd_check(const Output& out, const std::string& path, bool diagnose) {
  const CurveSpec spec = load_curve_spec(path);
  const Evaluated ev = evaluate(spec);
  int code = bound_exit(ev.bound);
  std::optional<ProofDiagnostics> diag;
  if (diagnose && ev.bound.hypotheses_ok) {
    diag = proof_diagnostics(spec.curve, ev.aux, ev.bound);
    if (code == kOk && !diag->all_ok()) code = ev.bound.window_covers_period ? kBoundViolated : kHypothesesFail;
  }
  switch (out.format()) {
    case Format::Json: {
      Json j = bound_json(diagnose ? "diagnose" : "check", spec, ev, code);
      if (diagnose) j["diagnostics"] = diag ? to_json(*diag) : Json(nullptr);
      print_json(j);
      break;
    }
    case Format::Csv:
      write_series_csv(std::cout, time_series(spec.curve, &ev.aux, spec.resolved_window()));
      break;
    case Format::Text:
      std::cout << "family       " << spec.curve.family_name() << "\n";
      if (ev.sphere) {
        std::cout << "center e     " << vec_text(ev.sphere->center.e) << " (chebyshev)\n"
                  << "rhs relaxed  " << fmt(ev.sphere->rhs_relaxed) << "\n";
      }
      print_bound_text(ev.bound);
      if (diagnose) {
        if (!diag) {
          std::cout << "diagnostics  skipped: hypotheses violated\n";
        } else {
          std::cout << "v bound      " << (diag->v_bound_ok ? "ok" : "FAIL") << " (worst ratio "
                    << fmt(diag->v_worst_ratio) << " at t=" << fmt(diag->v_worst_t) << ")\n"
                    << "speed lip    " << (diag->speed_lipschitz_ok ? "ok" : "FAIL") << " (worst ratio "
                    << fmt(diag->speed_worst_ratio) << " at t=" << fmt(diag->speed_worst_t) << ")\n"
                    << "chain        " << (diag->chain_ok ? "ok" : "FAIL") << " (worst ratio "
                    << fmt(diag->chain_worst_ratio) << " at t=" << fmt(diag->chain_worst_t) << ")\n";
        }
      }
      break;
  }
  return code;
}

int cmd_chebyshev(const Output& out, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  const auto rows = read_sample_csv(in);
  if (rows.empty()) throw IngestionError("no points", 0);
  std::vector<SurfacePoint> pts;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    try {
      pts.push_back(SurfacePoint::make({rows[i].x, rows[i].y, rows[i].z}));
    } catch (const InvalidInput& e) {
      throw IngestionError(e.what(), i);
    }
  }
  const CapCenter c = chebyshev_center(std::span<const SurfacePoint>(pts));
  switch (out.format()) {
    case Format::Json: {
      Json j = report_envelope("chebyshev");
      if (!c.warning.empty()) j["notes"].push_back(c.warning);
      j["points"] = pts.size();
      j["center"] = to_json(c);
      print_json(j);
      break;
    }
    case Format::Csv: {
      CsvWriter w(std::cout);
      w.row({"e_x", "e_y", "e_z", "min_inner_product", "minimax_chordal_radius", "iterations", "converged"});
      w.row({CsvWriter::field(c.e[0]), CsvWriter::field(c.e[1]), CsvWriter::field(c.e[2]),
             CsvWriter::field(c.min_inner_product), CsvWriter::field(c.minimax_chordal_radius),
             std::to_string(c.iterations), c.converged ? "true" : "false"});
      break;
    }
    case Format::Text:
      std::cout << "points             " << pts.size() << "\n"
                << "center e           " << vec_text(c.e) << "\n"
                << "min inner product  " << fmt(c.min_inner_product) << "\n"
                << "chordal radius     " << fmt(c.minimax_chordal_radius) << "\n"
                << "converged          " << (c.converged ? "yes" : "no") << "\n";
      if (!c.warning.empty()) std::cout << "warning: " << c.warning << '\n';
      break;
  }
  return kOk;
}

int cmd_counterexample(const Output& out, double T, std::size_t samples) {
  if (!(T > 0.0) || !std::isfinite(T)) throw InvalidInput("--T must be positive");
  const Curve c = Curve::great_circle({1, 0, 0}, {0, 1, 0}, Phase::quadratic(1.0));
  const TimeWindow w(0.0, T, samples);
  const SphereBoundReport s = theorem2_report(c, w);
  switch (out.format()) {
    case Format::Json: {
      Json j = report_envelope("counterexample");
      for (const auto& n : s.bound.notes) j["notes"].push_back(n);
      j["T"] = T;
      j["bound"] = to_json(s.bound);
      j["center"] = to_json(s.center);
      print_json(j);
      break;
    }
    case Format::Csv: {
      const AuxFunction u = AuxFunction::chordal(SurfacePoint::make(s.center.e));
      write_series_csv(std::cout, time_series(c, &u, w));
      break;
    }
    case Format::Text:
      std::cout << "great circle with phase t^2/2 on [0, " << fmt(T) << "]\n";
      print_bound_text(s.bound);
      break;
  }
  return kOk;
}

int cmd_probe(const Output& out, const std::string& family, std::size_t budget, std::uint64_t seed,
              std::size_t samples) {
  const ProbeResult p = sharpness_probe(probe_family_from_name(family), budget, seed, samples);
  switch (out.format()) {
    case Format::Json: {
      Json j = report_envelope("probe");
      j["probe"] = to_json(p);
      print_json(j);
      break;
    }
    case Format::Csv: {
      CsvWriter w(std::cout);
      std::vector<std::string> header = {"q"};
      header.insert(header.end(), p.parameter_names.begin(), p.parameter_names.end());
      w.row(header);
      for (const auto& s : p.samples) {
        std::vector<std::string> row = {CsvWriter::field(s.q)};
        for (double v : s.parameters) row.push_back(CsvWriter::field(v));
        w.row(row);
      }
      break;
    }
    case Format::Text:
      std::cout << "family      " << family << "\n"
                << "seed        " << p.seed << "\n"
                << "evaluated   " << p.evaluated << " (skipped " << p.skipped << ")\n"
                << "best Q      " << fmt(p.best_q, 12) << "  (sqrt " << fmt(std::sqrt(p.best_q), 12) << ")\n"
                << "C^2         " << fmt(p.C * p.C, 12) << "  (C " << fmt(p.C, 12) << ")\n";
      for (std::size_t i = 0; i < p.best_parameters.size(); ++i)
        std::cout << "  " << p.parameter_names.at(i) << " = " << fmt(p.best_parameters[i]) << '\n';
      break;
  }
  return p.within_bound ? kOk : kBoundViolated;
}

int cmd_classical(const Output& out, const std::string& path) {
  const CurveSpec spec = load_curve_spec(path);
  const TimeWindow w = spec.resolved_window();
  const ClassicalReport r = classical_landau_check(spec.curve, w);
  switch (out.format()) {
    case Format::Json: {
      Json j = report_envelope("classical");
      j["notes"].push_back("constant 4 holds for Banach-space valued functions; recorded, not checked");
      j["classical"] = to_json(r);
      print_json(j);
      break;
    }
    case Format::Csv: {
      const AuxFunction u = AuxFunction::euclidean_quadratic(AmbientVector(1));
      write_series_csv(std::cout, time_series(spec.curve, &u, w));
      break;
    }
    case Format::Text:
      std::cout << "sup |f|      " << fmt(r.f.value) << "\n"
                << "sup |f'|     " << fmt(r.f1.value) << "\n"
                << "sup |f''|    " << fmt(r.f2.value) << "\n"
                << "lhs          " << fmt(r.lhs) << "\n"
                << "rhs          " << fmt(r.rhs) << "  (constant " << fmt(r.constant) << ")\n"
                << "slack_ratio  " << fmt(r.slack_ratio) << "\n"
                << "satisfied    " << (r.satisfied ? "yes" : "no") << "\n";
      break;
  }
  return r.satisfied ? kOk : kBoundViolated;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Landau-type speed bounds for curves on the sphere and in R^d"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);
  app.footer(std::string(kSeriesColumns) +
             "\nExit codes: 0 bound holds, 1 input or I/O error, 2 hypotheses violated,\n"
             "3 bound violated under valid hypotheses.\n"
             "MANIFOLD_LANDAU_THREADS sets the worker count.");

  Output out;
  int digits = 15;
  std::string spec_path, csv_path, family = "latitude";
  double T = 50.0;
  std::size_t samples = TimeWindow::kDefaultSamples, budget = 100, probe_samples = 4001;
  std::uint64_t seed = 42;

  auto* constant = app.add_subcommand("constant", "Print the constant C (positive root of z^3 - 3z - 1)");
  constant->add_option("--digits", digits, "Digits after the decimal point")->check(CLI::Range(0, 17));
  add_format_flags(constant, out);
  constant->footer("CSV columns: C, residual, C_squared.");

  auto* check = app.add_subcommand("check", "Evaluate the speed bound for a curve spec");
  check->add_option("spec", spec_path, "Curve spec (JSON)")->required();
  add_format_flags(check, out);
  check->footer(kSeriesColumns);

  auto* diagnose = app.add_subcommand("diagnose", "Bound report plus per-sample checks of the proof inequalities");
  diagnose->add_option("spec", spec_path, "Curve spec (JSON)")->required();
  add_format_flags(diagnose, out);
  diagnose->footer(kSeriesColumns);

  auto* cheb = app.add_subcommand("chebyshev", "Centre of the smallest cap containing sphere points");
  cheb->add_option("points", csv_path, "CSV with header t,x,y,z")->required();
  add_format_flags(cheb, out);
  cheb->footer("CSV columns: e_x, e_y, e_z, min_inner_product, minimax_chordal_radius, iterations, converged.");

  auto* counter = app.add_subcommand("counterexample", "Great circle with phase t^2/2: bounded acceleration, unbounded speed");
  counter->add_option("--T", T, "Window is [0, T]")->capture_default_str();
  counter->add_option("--samples", samples, "Grid samples")->capture_default_str()->check(CLI::Range(3, 100000000));
  add_format_flags(counter, out);
  counter->footer(kSeriesColumns);

  auto* probe = app.add_subcommand("probe", "Search a curve family for the largest ratio Q = lambda*lhs/(r0*r2)");
  probe->add_option("--family", family, "latitude, great_circle or compound")
      ->check(CLI::IsMember({"latitude", "great_circle", "compound"}))
      ->capture_default_str();
  probe->add_option("--budget", budget, "Random candidates")->check(CLI::Range(1, 1000000))->capture_default_str();
  probe->add_option("--seed", seed, "Random seed")->capture_default_str();
  probe->add_option("--samples", probe_samples, "Grid samples per period")
      ->check(CLI::Range(3, 10000000))
      ->capture_default_str();
  add_format_flags(probe, out);
  probe->footer("CSV columns: q followed by the family parameters, one row per evaluated candidate.");

  auto* classical = app.add_subcommand("classical", "Scalar inequality |f'|^2 <= 2|f||f''| for a 1-d euclidean spec");
  classical->add_option("spec", spec_path, "Curve spec (JSON, euclidean family with one component)")->required();
  add_format_flags(classical, out);
  classical->footer(kSeriesColumns);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*constant) return cmd_constant(out, digits);
    if (*check) return cmd_check(out, spec_path, false);
    if (*diagnose) return cmd_check(out, spec_path, true);
    if (*cheb) return cmd_chebyshev(out, csv_path);
    if (*counter) return cmd_counterexample(out, T, samples);
    if (*probe) return cmd_probe(out, family, budget, seed, probe_samples);
    if (*classical) return cmd_classical(out, spec_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
