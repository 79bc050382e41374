#include "manifold_landau/chebyshev.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>

#include "manifold_landau/search.hpp"

namespace manifold_landau {
namespace {

constexpr std::size_t kAscentIterations = 500;
constexpr std::size_t kStallWindow = 50;
constexpr double kStallTol = 1e-10;
constexpr std::size_t kPolishPoints = 16;
constexpr std::size_t kDirectLimit = 512;
constexpr std::size_t kWorkingSetSeed = 256;
constexpr std::size_t kViolatorsPerRound = 32;
constexpr double kActiveTol = 1e-9;

struct Candidate {
  AmbientVector x;
  double f;
};

struct SolveResult {
  Candidate best;
  std::size_t iterations = 0;
  bool stalled = false;
};

/// Objective and the smallest index attaining it.
std::pair<double, std::size_t> objective_with_active(const AmbientVector& x, std::span<const AmbientVector> pts) {
  double f = INFINITY;
  std::size_t arg = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const double d = x.dot(pts[i]);
    if (d < f) {
      f = d;
      arg = i;
    }
  }
  return {f, arg};
}

std::vector<AmbientVector> icosahedron() {
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<AmbientVector> v = {{-1, phi, 0}, {1, phi, 0}, {-1, -phi, 0}, {1, -phi, 0},
                                  {0, -1, phi}, {0, 1, phi}, {0, -1, -phi}, {0, 1, -phi},
                                  {phi, 0, -1}, {phi, 0, 1}, {-phi, 0, -1}, {-phi, 0, 1}};
  for (auto& p : v) p *= 1.0 / p.norm();
  return v;
}

bool try_normalize(AmbientVector& v) {
  const double n = v.norm();
  if (!(n > 1e-300) || !std::isfinite(n)) return false;
  v *= 1.0 / n;
  return true;
}

SolveResult ascend(std::span<const AmbientVector> pts) {
  std::vector<AmbientVector> starts;
  AmbientVector mean(3);
  for (const auto& p : pts) mean += p;
  if (try_normalize(mean)) starts.push_back(mean);
  for (const auto& v : icosahedron()) starts.push_back(v);
  const std::size_t n = pts.size();
  for (std::size_t i : {std::size_t{0}, n / 2, n - 1}) {
    if (starts.size() == 16) break;
    starts.push_back(pts[i]);
  }

  SolveResult out;
  out.best = {starts.front(), objective_with_active(starts.front(), pts).first};
  bool first = true;
  for (const AmbientVector& start : starts) {
    AmbientVector x = start;
    auto [fx, active] = objective_with_active(x, pts);
    Candidate best{x, fx};
    std::vector<double> history;
    history.reserve(kAscentIterations + 1);
    history.push_back(best.f);
    for (std::size_t k = 1; k <= kAscentIterations; ++k) {
      AmbientVector next = x + (0.5 / std::sqrt(double(k))) * pts[active];
      if (!try_normalize(next)) break;
      x = next;
      std::tie(fx, active) = objective_with_active(x, pts);
      if (fx > best.f) best = {x, fx};
      history.push_back(best.f);
      ++out.iterations;
    }
    const bool stalled =
        history.size() > kStallWindow && history.back() - history[history.size() - 1 - kStallWindow] < kStallTol;
    if (first || best.f > out.best.f) {
      out.best = best;
      out.stalled = stalled;
      first = false;
    }
  }
  return out;
}

/// Tests the caps determined by one, two and three of the points nearest to
/// being active at x; each candidate's objective is exact, so the result is
/// never worse than x.
Candidate polish(const Candidate& start, std::span<const AmbientVector> pts) {
  std::vector<std::size_t> order(pts.size());
  std::iota(order.begin(), order.end(), 0);
  const std::size_t k = std::min(kPolishPoints, pts.size());
  std::partial_sort(order.begin(), order.begin() + k, order.end(), [&](auto a, auto b) {
    const double da = start.x.dot(pts[a]), db = start.x.dot(pts[b]);
    return da < db || (da == db && a < b);
  });
  order.resize(k);

  Candidate best = start;
  auto consider = [&](AmbientVector c) {
    if (!try_normalize(c)) return;
    const double f = objective_with_active(c, pts).first;
    if (f > best.f) best = {c, f};
  };
  for (std::size_t a = 0; a < k; ++a) {
    const AmbientVector& pa = pts[order[a]];
    consider(pa);
    for (std::size_t b = a + 1; b < k; ++b) {
      const AmbientVector& pb = pts[order[b]];
      consider(pa + pb);
      for (std::size_t c = b + 1; c < k; ++c) {
        const AmbientVector n = cross(pb - pa, pts[order[c]] - pa);
        consider(n);
        consider(-n);
      }
    }
  }
  return best;
}

/// e is optimal iff the origin of T_e S² lies in the convex hull of the
/// projected active points, i.e. no tangent direction raises every active
/// inner product.
bool certify(const AmbientVector& e, double f, std::span<const AmbientVector> pts) {
  if (!(f > 0.0)) return false;
  std::vector<double> angles;
  const auto basis = tangent_basis(SurfacePoint::normalize(e));
  for (const auto& p : pts) {
    if (e.dot(p) > f + kActiveTol) continue;
    const AmbientVector q = p - e.dot(p) * e;
    if (q.norm() < 1e-9) return true;
    angles.push_back(std::atan2(q.dot(basis[1]), q.dot(basis[0])));
  }
  if (angles.size() < 2) return false;
  std::sort(angles.begin(), angles.end());
  double gap = angles.front() + 2.0 * std::numbers::pi - angles.back();
  for (std::size_t i = 1; i < angles.size(); ++i) gap = std::max(gap, angles[i] - angles[i - 1]);
  return gap <= std::numbers::pi + 1e-7;
}

CapCenter finish(const AmbientVector& e, double f, std::size_t iterations, bool stalled,
                 std::span<const AmbientVector> pts) {
  CapCenter c;
  c.e = e;
  c.min_inner_product = std::clamp(f, -1.0, 1.0);
  c.minimax_chordal_radius = std::sqrt(std::max(0.0, 2.0 - 2.0 * c.min_inner_product));
  c.iterations = iterations;
  c.converged = stalled || certify(e, f, pts);
  if (!(f > 1e-12))  // roundoff margin for clouds on a great circle
    c.warning = "points are not contained in an open hemisphere; the centre is not unique";
  return c;
}

std::vector<AmbientVector> validated(std::span<const AmbientVector> points) {
  if (points.empty()) throw InvalidInput("chebyshev centre needs at least one point");
  std::vector<AmbientVector> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(SurfacePoint::make(p).coords());
  return out;
}

}  // namespace

double cap_objective(const AmbientVector& x, std::span<const AmbientVector> points) {
  return objective_with_active(x, points).first;
}

CapCenter chebyshev_center(std::span<const SurfacePoint> points) {
  std::vector<AmbientVector> coords;
  coords.reserve(points.size());
  for (const auto& p : points) coords.push_back(p.coords());
  return chebyshev_center(std::span<const AmbientVector>(coords));
}

CapCenter chebyshev_center(std::span<const AmbientVector> input) {
  const std::vector<AmbientVector> pts = validated(input);
  const std::size_t n = pts.size();

  if (n <= kDirectLimit) {
    const SolveResult r = ascend(pts);
    const Candidate best = polish(r.best, pts);
    return finish(best.x, best.f, r.iterations, r.stalled, pts);
  }

  // Constraint generation: solve on a working set, add the points that the
  // working-set optimum leaves outside its cap, repeat.
  std::vector<char> in_set(n, 0);
  std::vector<AmbientVector> working;
  for (std::size_t i = 0; i < kWorkingSetSeed; ++i) {
    const std::size_t idx = i * (n - 1) / (kWorkingSetSeed - 1);
    if (!in_set[idx]) {
      in_set[idx] = 1;
      working.push_back(pts[idx]);
    }
  }
  std::size_t iterations = 0;
  Candidate best{};
  bool stalled = false;
  for (int round = 0; round < 200; ++round) {
    const SolveResult r = ascend(working);
    iterations += r.iterations;
    stalled = r.stalled;
    best = polish(r.best, working);

    std::vector<std::pair<double, std::size_t>> violators;
    for (std::size_t i = 0; i < n; ++i) {
      if (in_set[i]) continue;
      const double d = best.x.dot(pts[i]);
      if (d < best.f - 1e-15) violators.emplace_back(d, i);
    }
    if (violators.empty()) break;
    const std::size_t take = std::min(kViolatorsPerRound, violators.size());
    std::partial_sort(violators.begin(), violators.begin() + take, violators.end());
    for (std::size_t j = 0; j < take; ++j) {
      in_set[violators[j].second] = 1;
      working.push_back(pts[violators[j].second]);
    }
  }
  const double f = cap_objective(best.x, pts);
  return finish(best.x, f, iterations, stalled, pts);
}

std::vector<AmbientVector> icosphere_vertices(int subdivisions) {
  if (subdivisions < 0) throw InvalidInput("icosphere subdivision level must be non-negative");
  std::vector<AmbientVector> verts = icosahedron();
  std::vector<std::array<std::size_t, 3>> faces = {
      {0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11}, {1, 5, 9}, {5, 11, 4},
      {11, 10, 2}, {10, 7, 6}, {7, 1, 8},  {3, 9, 4},  {3, 4, 2},   {3, 2, 6}, {3, 6, 8},
      {3, 8, 9},  {4, 9, 5},  {2, 4, 11},  {6, 2, 10}, {8, 6, 7},   {9, 8, 1}};
  for (int level = 0; level < subdivisions; ++level) {
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> midpoint;
    auto mid = [&](std::size_t a, std::size_t b) {
      const auto key = std::minmax(a, b);
      const auto it = midpoint.find(key);
      if (it != midpoint.end()) return it->second;
      AmbientVector m = verts[a] + verts[b];
      m *= 1.0 / m.norm();
      verts.push_back(m);
      midpoint.emplace(key, verts.size() - 1);
      return verts.size() - 1;
    };
    std::vector<std::array<std::size_t, 3>> next;
    next.reserve(faces.size() * 4);
    for (const auto& f : faces) {
      const std::size_t ab = mid(f[0], f[1]), bc = mid(f[1], f[2]), ca = mid(f[2], f[0]);
      next.push_back({f[0], ab, ca});
      next.push_back({f[1], bc, ab});
      next.push_back({f[2], ca, bc});
      next.push_back({ab, bc, ca});
    }
    faces = std::move(next);
  }
  return verts;
}

CapCenter chebyshev_grid_oracle(std::span<const AmbientVector> input, int subdivisions) {
  const std::vector<AmbientVector> pts = validated(input);
  const std::vector<AmbientVector> grid = icosphere_vertices(subdivisions);

  std::size_t best = 0;
  double best_f = -INFINITY;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double f = cap_objective(grid[i], pts);
    if (f > best_f) {
      best_f = f;
      best = i;
    }
  }

  const AmbientVector v = grid[best];
  const auto basis = tangent_basis(SurfacePoint::normalize(v));
  auto chart = [&](double a, double b) {
    AmbientVector x = v + a * basis[0] + b * basis[1];
    return x * (1.0 / x.norm());
  };
  // Icosahedron edge subtends ~1.107 rad; each level halves it.
  double radius = 2.0 * 1.1071487177940904 / std::pow(2.0, subdivisions);
  double a = 0.0, b = 0.0, f = best_f;
  std::size_t sweeps = 0;
  for (; sweeps < 60 && radius > 1e-12; ++sweeps) {
    const LineMaximum ma = golden_section_max([&](double s) { return cap_objective(chart(s, b), pts); },
                                              a - radius, a + radius, 1e-13);
    if (ma.value > f) {
      f = ma.value;
      a = ma.t;
    }
    const LineMaximum mb = golden_section_max([&](double s) { return cap_objective(chart(a, s), pts); },
                                              b - radius, b + radius, 1e-13);
    if (mb.value > f) {
      f = mb.value;
      b = mb.t;
    }
    radius *= 0.7;
  }
  return finish(chart(a, b), f, sweeps, false, pts);
}

}  // namespace manifold_landau
