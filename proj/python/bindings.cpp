#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "manifold_landau/inequality.hpp"
#include "manifold_landau/report.hpp"
#include "manifold_landau/spec_file.hpp"

namespace py = pybind11;
using namespace manifold_landau;

namespace {

AmbientVector vec(const std::vector<double>& v) {
  if (v.empty() || v.size() > AmbientVector::kMaxDim) throw InvalidInput("expected 1 to 8 coordinates");
  return AmbientVector(std::span<const double>(v));
}

std::vector<double> list(const AmbientVector& v) { return {v.coords().begin(), v.coords().end()}; }

SurfacePoint point(const std::vector<double>& v) { return SurfacePoint::make(vec(v)); }

std::vector<AmbientVector> cloud(const std::vector<std::vector<double>>& pts) {
  std::vector<AmbientVector> out;
  out.reserve(pts.size());
  for (const auto& p : pts) out.push_back(point(p).coords());
  return out;
}

py::dict eval_dict(const CurveEvaluation& e) {
  py::dict d;
  d["t"] = e.t;
  d["x"] = list(e.x);
  d["xdot"] = list(e.xdot);
  d["xddot"] = list(e.xddot);
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Landau-type speed bounds for curves on the sphere and in R^d";
  m.attr("__version__") = kToolVersion;

  auto base = py::register_exception<Error>(m, "ManifoldLandauError", PyExc_ValueError);
  py::register_exception<InvalidInput>(m, "InvalidInput", base.ptr());
  py::register_exception<InvalidCurve>(m, "InvalidCurve", base.ptr());
  py::register_exception<OutOfDomain>(m, "OutOfDomain", base.ptr());
  py::register_exception<Singularity>(m, "Singularity", base.ptr());
  py::register_exception<HypothesisViolation>(m, "HypothesisViolation", base.ptr());
  py::register_exception<NumericFailure>(m, "NumericFailure", base.ptr());
  py::register_exception<IngestionError>(m, "IngestionError", base.ptr());
  py::register_exception<SpecError>(m, "SpecError", base.ptr());

  m.def("landau_constant", [] {
    const LandauConstant c = landau_constant();
    return py::make_tuple(c.C, c.residual);
  }, "Positive root C of z^3 - 3z - 1 and its residual.");

  m.def("project_tangent", [](const std::vector<double>& x, const std::vector<double>& v) {
    return list(project_tangent(point(x), vec(v)).vec());
  });
  m.def("covariant_accel", [](const std::vector<double>& x, const std::vector<double>& xdot,
                              const std::vector<double>& xddot) {
    return list(covariant_accel(point(x), vec(xdot), vec(xddot)).vec());
  });
  m.def("geodesic", [](const std::vector<double>& x0, const std::vector<double>& y, double t) {
    const SurfacePoint p = point(x0);
    return list(geodesic(p, TangentVector::make(p, vec(y)), t).coords());
  });

  py::class_<Phase>(m, "Phase")
      .def_static("linear", &Phase::linear, py::arg("omega"), py::arg("phi") = 0.0)
      .def_static("quadratic", &Phase::quadratic, py::arg("alpha"), py::arg("omega") = 0.0)
      .def_static("sinusoidal", &Phase::sinusoidal, py::arg("amplitude"), py::arg("omega"), py::arg("drift") = 0.0)
      .def("jet", [](const Phase& p, double t) {
        const PhaseJet j = p.jet(t);
        return py::make_tuple(j.value, j.rate, j.accel);
      })
      .def("period", &Phase::period);

  py::class_<TimeWindow>(m, "TimeWindow")
      .def(py::init<double, double, std::size_t>(), py::arg("t_min") = TimeWindow::kDefaultMin,
           py::arg("t_max") = TimeWindow::kDefaultMax, py::arg("samples") = TimeWindow::kDefaultSamples)
      .def_property_readonly("t_min", &TimeWindow::t_min)
      .def_property_readonly("t_max", &TimeWindow::t_max)
      .def_property_readonly("samples", &TimeWindow::samples)
      .def_property_readonly("step", &TimeWindow::step)
      .def("__repr__", [](const TimeWindow& w) {
        return "TimeWindow(" + std::to_string(w.t_min()) + ", " + std::to_string(w.t_max()) + ", " +
               std::to_string(w.samples()) + ")";
      });

  py::class_<Curve>(m, "Curve")
      .def_static("latitude", &Curve::latitude, py::arg("colatitude"), py::arg("phase"))
      .def_static("great_circle", [](const std::vector<double>& a, const std::vector<double>& b, const Phase& ph) {
        return Curve::great_circle(vec(a), vec(b), ph);
      }, py::arg("a"), py::arg("b"), py::arg("phase"))
      .def_static("compound", [](const std::vector<double>& center, const std::vector<py::tuple>& terms) {
        std::vector<CompoundTerm> ts;
        for (const auto& t : terms) {
          if (t.size() != 5) throw InvalidInput("compound term is (radius, omega, phi, u, v)");
          ts.push_back({t[0].cast<double>(), t[1].cast<double>(), t[2].cast<double>(),
                        vec(t[3].cast<std::vector<double>>()), vec(t[4].cast<std::vector<double>>())});
        }
        return Curve::compound(vec(center), std::move(ts));
      }, py::arg("center"), py::arg("terms"))
      .def_static("sampled", [](const std::vector<std::array<double, 4>>& rows) {
        std::vector<SampleRow> r;
        for (const auto& row : rows) r.push_back({row[0], row[1], row[2], row[3]});
        return load_sampled(r);
      }, py::arg("rows"), "Rows of (t, x, y, z) on a uniform time grid.")
      .def_static("from_spec", [](const std::string& text, const std::string& base_dir) {
        return parse_curve_spec(text, base_dir).curve;
      }, py::arg("text"), py::arg("base_dir") = "")
      .def("eval", [](const Curve& c, double t) { return eval_dict(c.eval(t)); })
      .def("period", &Curve::period)
      .def_property_readonly("family", &Curve::family_name)
      .def_property_readonly("is_sphere", [](const Curve& c) { return c.manifold().is_sphere(); });

  m.def("natural_window", &natural_window, py::arg("curve"), py::arg("samples") = TimeWindow::kDefaultSamples);

  py::class_<AuxFunction>(m, "AuxFunction")
      .def_static("chordal", [](const std::vector<double>& e) { return AuxFunction::chordal(point(e)); })
      .def_static("intrinsic", [](const std::vector<double>& e) { return AuxFunction::intrinsic(point(e)); })
      .def_static("euclidean_quadratic",
                  [](const std::vector<double>& c) { return AuxFunction::euclidean_quadratic(vec(c)); })
      .def("value", [](const AuxFunction& u, const std::vector<double>& x) { return u.value(vec(x)); })
      .def("gradient", [](const AuxFunction& u, const std::vector<double>& x) { return list(u.gradient(vec(x))); })
      .def("hessian_quadratic", [](const AuxFunction& u, const std::vector<double>& x, const std::vector<double>& y) {
        return u.hessian_quadratic(vec(x), vec(y));
      })
      .def("hessian_quadratic_numeric",
           [](const AuxFunction& u, const std::vector<double>& x, const std::vector<double>& y) {
             return u.hessian_quadratic_numeric(vec(x), vec(y));
           });

  // Report-valued functions return JSON text; the Python package decodes it.
  m.def("_sup_norm", [](const Curve& c, const TimeWindow& w, const std::string& q) {
    if (q != "speed" && q != "covariant_accel") throw InvalidInput("quantity is 'speed' or 'covariant_accel'");
    return to_json(sup_norm(c, w, q == "speed" ? CurveQuantity::Speed : CurveQuantity::CovariantAccelNorm)).dump();
  });
  m.def("_lambda_min", [](const AuxFunction& u, const Curve& c, const TimeWindow& w) {
    return to_json(lambda_min(u, c, w)).dump();
  });
  m.def("_theorem1_report", [](const Curve& c, const AuxFunction& u, const TimeWindow& w) {
    return to_json(theorem1_report(c, u, w)).dump();
  });
  m.def("_theorem2_report", [](const Curve& c, const TimeWindow& w) {
    const SphereBoundReport s = theorem2_report(c, w);
    Json j;
    j["bound"] = to_json(s.bound);
    j["center"] = to_json(s.center);
    j["rhs_relaxed"] = real_to_json(s.rhs_relaxed);
    j["slack_relaxed"] = real_to_json(s.slack_relaxed);
    j["cloud_samples"] = s.cloud_samples;
    return j.dump();
  });
  m.def("_proof_diagnostics", [](const Curve& c, const AuxFunction& u, const TimeWindow& w) {
    return to_json(proof_diagnostics(c, u, w)).dump();
  });
  m.def("_classical_landau_check", [](const Curve& c, const TimeWindow& w) {
    return to_json(classical_landau_check(c, w)).dump();
  });
  m.def("_chebyshev_center", [](const std::vector<std::vector<double>>& pts) {
    const auto c = cloud(pts);
    return to_json(chebyshev_center(std::span<const AmbientVector>(c))).dump();
  });
  m.def("_chebyshev_grid_oracle", [](const std::vector<std::vector<double>>& pts, int level) {
    return to_json(chebyshev_grid_oracle(cloud(pts), level)).dump();
  });
  m.def("_sharpness_probe", [](const std::string& family, std::size_t budget, std::uint64_t seed, std::size_t n) {
    py::gil_scoped_release release;
    return to_json(sharpness_probe(probe_family_from_name(family), budget, seed, n)).dump();
  });
  m.def("time_series", [](const Curve& c, const AuxFunction* u, const TimeWindow& w) {
    std::vector<std::tuple<double, double, double, double, double>> out;
    for (const SeriesRow& r : time_series(c, u, w)) out.emplace_back(r.t, r.speed, r.covariant_accel, r.v, r.u);
    return out;
  }, py::arg("curve"), py::arg("aux").none(true), py::arg("window"),
        "Rows of (t, speed, cov_accel_norm, v, U).");
}
