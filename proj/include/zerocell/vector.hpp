#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>

#include "zerocell/errors.hpp"

namespace zerocell {

/// Largest ambient dimension supported by the fixed-size point type.
inline constexpr std::size_t kMaxDimension = 3;

/// A point or direction in R^d, d in [1, kMaxDimension], stored inline.
class Vector {
 public:
  Vector() = default;

  /// Zero vector of dimension `dim`.
  explicit Vector(std::size_t dim) : dim_(dim) { checkDim(dim); }

  Vector(std::initializer_list<double> coords) : dim_(coords.size()) {
    checkDim(dim_);
    std::size_t i = 0;
    for (double c : coords) coords_[i++] = c;
    checkFinite();
  }

  static Vector fromSpan(std::span<const double> coords) {
    Vector v(coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i) v.coords_[i] = coords[i];
    v.checkFinite();
    return v;
  }

  static Vector unit(std::size_t dim, std::size_t axis) {
    Vector v(dim);
    v[axis] = 1.0;
    return v;
  }

  std::size_t dim() const { return dim_; }
  double operator[](std::size_t i) const { return coords_[i]; }
  double& operator[](std::size_t i) { return coords_[i]; }
  std::span<const double> coords() const { return {coords_.data(), dim_}; }

  Vector& operator+=(const Vector& o) {
    for (std::size_t i = 0; i < dim_; ++i) coords_[i] += o.coords_[i];
    return *this;
  }
  Vector& operator-=(const Vector& o) {
    for (std::size_t i = 0; i < dim_; ++i) coords_[i] -= o.coords_[i];
    return *this;
  }
  Vector& operator*=(double s) {
    for (std::size_t i = 0; i < dim_; ++i) coords_[i] *= s;
    return *this;
  }

  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  friend Vector operator*(Vector a, double s) { return a *= s; }
  friend Vector operator*(double s, Vector a) { return a *= s; }
  friend Vector operator-(Vector a) { return a *= -1.0; }

  friend bool operator==(const Vector& a, const Vector& b) {
    if (a.dim_ != b.dim_) return false;
    for (std::size_t i = 0; i < a.dim_; ++i)
      if (a.coords_[i] != b.coords_[i]) return false;
    return true;
  }

  bool allFinite() const {
    for (std::size_t i = 0; i < dim_; ++i)
      if (!std::isfinite(coords_[i])) return false;
    return true;
  }

  std::string toString() const;

 private:
  static void checkDim(std::size_t dim) {
    if (dim < 1 || dim > kMaxDimension)
      throw InvalidArgument("vector dimension must be in [1, " + std::to_string(kMaxDimension) +
                            "], got " + std::to_string(dim));
  }
  void checkFinite() const {
    if (!allFinite()) throw InvalidArgument("vector has non-finite coordinate");
  }

  std::array<double, kMaxDimension> coords_{};
  std::size_t dim_ = 0;
};

inline double dot(const Vector& a, const Vector& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

inline double norm(const Vector& a) { return std::sqrt(dot(a, a)); }

inline double distance(const Vector& a, const Vector& b) { return norm(a - b); }

inline Vector normalized(const Vector& a) { return a * (1.0 / norm(a)); }

/// Cross product; both arguments must be three-dimensional.
inline Vector cross(const Vector& a, const Vector& b) {
  return Vector{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

inline void requireSameDim(const Vector& a, const Vector& b, const char* where) {
  if (a.dim() != b.dim())
    throw InvalidArgument(std::string(where) + ": dimension mismatch (" + std::to_string(a.dim()) +
                          " vs " + std::to_string(b.dim()) + ")");
}

}  // namespace zerocell
