#include <doctest.h>

#include <cmath>

#include "manifold_landau/search.hpp"

using namespace manifold_landau;

TEST_CASE("golden section finds an interior maximum") {
  const LineMaximum m = golden_section_max([](double t) { return std::cos(t - 0.3); }, -1.0, 2.0);
  CHECK(m.t == doctest::Approx(0.3).epsilon(1e-6));
  CHECK(m.value == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("golden section keeps the better endpoint") {
  const LineMaximum m = golden_section_max([](double t) { return t; }, 0.0, 1.0);
  CHECK(m.t == 1.0);
  CHECK(m.value == 1.0);
}

TEST_CASE("Nelder-Mead minimizes a quadratic bowl") {
  const auto f = [](const std::vector<double>& x) {
    return (x[0] - 1.0) * (x[0] - 1.0) + 3.0 * (x[1] + 0.5) * (x[1] + 0.5);
  };
  const NelderMeadResult r = nelder_mead(f, {0.0, 0.0}, {0.5, 0.5}, 500, 1e-14);
  CHECK(r.x[0] == doctest::Approx(1.0).epsilon(1e-4));
  CHECK(r.x[1] == doctest::Approx(-0.5).epsilon(1e-4));
  CHECK(r.value >= 0.0);
  CHECK(r.value < 1e-8);
  CHECK(r.evaluations <= 500);
}
