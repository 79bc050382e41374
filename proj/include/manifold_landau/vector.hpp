#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>

#include "manifold_landau/errors.hpp"

namespace manifold_landau {

/// Embedding-space coordinates of a point or vector. Fixed inline storage so
/// that the inner loops of the sup-norm scans never allocate.
class AmbientVector {
 public:
  static constexpr std::size_t kMaxDim = 8;

  AmbientVector() = default;
  explicit AmbientVector(std::size_t dim) : dim_(dim) {
    if (dim == 0 || dim > kMaxDim) throw InvalidInput("ambient dimension must be in [1, 8]");
  }
  AmbientVector(std::initializer_list<double> values) : AmbientVector(values.size()) {
    std::size_t i = 0;
    for (double v : values) c_[i++] = v;
  }
  explicit AmbientVector(std::span<const double> values) : AmbientVector(values.size()) {
    for (std::size_t i = 0; i < dim_; ++i) c_[i] = values[i];
  }

  std::size_t size() const noexcept { return dim_; }
  double& operator[](std::size_t i) noexcept { return c_[i]; }
  double operator[](std::size_t i) const noexcept { return c_[i]; }
  std::span<const double> coords() const noexcept { return {c_.data(), dim_}; }

  bool finite() const noexcept {
    for (std::size_t i = 0; i < dim_; ++i)
      if (!std::isfinite(c_[i])) return false;
    return true;
  }

  double dot(const AmbientVector& o) const noexcept {
    double s = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) s += c_[i] * o.c_[i];
    return s;
  }
  double squared_norm() const noexcept { return dot(*this); }
  double norm() const noexcept { return std::sqrt(squared_norm()); }

  AmbientVector& operator+=(const AmbientVector& o) noexcept {
    for (std::size_t i = 0; i < dim_; ++i) c_[i] += o.c_[i];
    return *this;
  }
  AmbientVector& operator-=(const AmbientVector& o) noexcept {
    for (std::size_t i = 0; i < dim_; ++i) c_[i] -= o.c_[i];
    return *this;
  }
  AmbientVector& operator*=(double s) noexcept {
    for (std::size_t i = 0; i < dim_; ++i) c_[i] *= s;
    return *this;
  }

  friend AmbientVector operator+(AmbientVector a, const AmbientVector& b) noexcept { return a += b; }
  friend AmbientVector operator-(AmbientVector a, const AmbientVector& b) noexcept { return a -= b; }
  friend AmbientVector operator-(AmbientVector a) noexcept { return a *= -1.0; }
  friend AmbientVector operator*(double s, AmbientVector a) noexcept { return a *= s; }
  friend AmbientVector operator*(AmbientVector a, double s) noexcept { return a *= s; }

  friend bool operator==(const AmbientVector& a, const AmbientVector& b) noexcept {
    if (a.dim_ != b.dim_) return false;
    for (std::size_t i = 0; i < a.dim_; ++i)
      if (a.c_[i] != b.c_[i]) return false;
    return true;
  }

 private:
  std::array<double, kMaxDim> c_{};
  std::size_t dim_ = 0;
};

inline double dot(const AmbientVector& a, const AmbientVector& b) noexcept { return a.dot(b); }

inline AmbientVector cross(const AmbientVector& a, const AmbientVector& b) {
  if (a.size() != 3 || b.size() != 3) throw InvalidInput("cross product needs 3-vectors");
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

/// Largest absolute component difference.
inline double max_abs_diff(const AmbientVector& a, const AmbientVector& b) noexcept {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::fmax(m, std::fabs(a[i] - b[i]));
  return m;
}

}  // namespace manifold_landau
