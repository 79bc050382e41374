#include "manifold_landau/search.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace manifold_landau {

LineMaximum golden_section_max(const std::function<double(double)>& f, double a, double b,
                               double tol, int max_iter) {
  static const double kInvPhi = (std::sqrt(5.0) - 1.0) / 2.0;
  LineMaximum best{a, f(a)};
  const double fb = f(b);
  if (fb > best.value) best = {b, fb};

  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int i = 0; i < max_iter && (b - a) > tol; ++i) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
    if (fc > best.value) best = {c, fc};
    if (fd > best.value) best = {d, fd};
  }
  return best;
}

NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                             std::vector<double> start, const std::vector<double>& step,
                             std::size_t max_evals, double ftol) {
  const std::size_t n = start.size();
  std::vector<std::vector<double>> simplex(n + 1, start);
  for (std::size_t i = 0; i < n; ++i) simplex[i + 1][i] += step[i];
  std::vector<double> values(n + 1);
  std::size_t evals = 0;
  auto eval = [&](const std::vector<double>& x) {
    ++evals;
    return f(x);
  };
  for (std::size_t i = 0; i <= n; ++i) values[i] = eval(simplex[i]);

  std::vector<std::size_t> order(n + 1);
  while (evals < max_evals) {
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](auto l, auto r) { return values[l] < values[r]; });
    const std::size_t lo = order.front(), hi = order.back(), second = order[n - 1];
    if (std::fabs(values[hi] - values[lo]) <= ftol * (std::fabs(values[lo]) + 1e-300)) break;

    std::vector<double> centroid(n, 0.0);
    for (std::size_t i = 0; i <= n; ++i)
      if (i != hi)
        for (std::size_t k = 0; k < n; ++k) centroid[k] += simplex[i][k] / double(n);
    auto along = [&](double coef) {
      std::vector<double> x(n);
      for (std::size_t k = 0; k < n; ++k) x[k] = centroid[k] + coef * (simplex[hi][k] - centroid[k]);
      return x;
    };

    auto reflected = along(-1.0);
    const double fr = eval(reflected);
    if (fr < values[lo]) {
      auto expanded = along(-2.0);
      const double fe = eval(expanded);
      if (fe < fr) {
        simplex[hi] = std::move(expanded);
        values[hi] = fe;
      } else {
        simplex[hi] = std::move(reflected);
        values[hi] = fr;
      }
      continue;
    }
    if (fr < values[second]) {
      simplex[hi] = std::move(reflected);
      values[hi] = fr;
      continue;
    }
    auto contracted = fr < values[hi] ? along(-0.5) : along(0.5);
    const double fc = eval(contracted);
    if (fc < std::min(fr, values[hi])) {
      simplex[hi] = std::move(contracted);
      values[hi] = fc;
      continue;
    }
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == lo) continue;
      for (std::size_t k = 0; k < n; ++k)
        simplex[i][k] = simplex[lo][k] + 0.5 * (simplex[i][k] - simplex[lo][k]);
      values[i] = eval(simplex[i]);
    }
  }
  const auto best = static_cast<std::size_t>(
      std::min_element(values.begin(), values.end()) - values.begin());
  return {simplex[best], values[best], evals};
}

}  // namespace manifold_landau
