#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace manifold_landau {

struct LineMaximum {
  double t;
  double value;
};

/// Golden-section search for a maximum of `f` on [a, b]. Stops when the
/// bracket is shorter than `tol`. The returned value is the best one
/// evaluated, including the two endpoints.
LineMaximum golden_section_max(const std::function<double(double)>& f, double a, double b,
                               double tol = 1e-12, int max_iter = 200);

struct NelderMeadResult {
  std::vector<double> x;
  double value;
  std::size_t evaluations;
};

/// Downhill simplex minimization with the standard coefficients
/// (reflection 1, expansion 2, contraction 1/2, shrink 1/2).
NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                             std::vector<double> start, const std::vector<double>& step,
                             std::size_t max_evals, double ftol = 1e-12);

}  // namespace manifold_landau
