#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "manifold_landau/geometry.hpp"

namespace manifold_landau {

/// Centre of the smallest spherical cap containing a point set, i.e. a
/// maximizer of f(x) = minᵢ ⟨x, pᵢ⟩ over S², equivalently a minimizer of the
/// largest chordal distance maxᵢ ‖x − pᵢ‖.
struct CapCenter {
  AmbientVector e{0.0, 0.0, 1.0};
  /// maxᵢ ‖e − pᵢ‖ = √(2 − 2·min_inner_product).
  double minimax_chordal_radius = 0.0;
  /// f(e) = minᵢ ⟨e, pᵢ⟩.
  double min_inner_product = 1.0;
  std::size_t iterations = 0;
  bool converged = false;
  /// Non-empty when the points are not contained in any open hemisphere
  /// (f* ≤ 0); the maximizer may then be far from unique.
  std::string warning;
};

/// Objective f(x) = minᵢ ⟨x, pᵢ⟩.
double cap_objective(const AmbientVector& x, std::span<const AmbientVector> points);

/// Projected supergradient ascent (step 0.5/√k, 500 iterations, 16 starts:
/// the normalized mean, the 12 icosahedron vertices and three of the points)
/// followed by an active-set polish that tests the caps spanned by one, two
/// and three near-active points. Large clouds are handled by constraint
/// generation over a strided working set. `converged` is set when the
/// returned centre satisfies the optimality condition e ∈ cone(active points).
CapCenter chebyshev_center(std::span<const SurfacePoint> points);
CapCenter chebyshev_center(std::span<const AmbientVector> points);

/// Exhaustive search over an icosphere of the given subdivision level
/// (10·4ᵏ + 2 vertices) followed by alternating golden-section refinement in
/// a local chart around the best vertex.
CapCenter chebyshev_grid_oracle(std::span<const AmbientVector> points, int subdivisions);

/// Vertices of the subdivided icosahedron, projected to S².
std::vector<AmbientVector> icosphere_vertices(int subdivisions);

}  // namespace manifold_landau
