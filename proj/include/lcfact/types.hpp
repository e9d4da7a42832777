#pragma once

#include <Eigen/Dense>

namespace lcfact {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;
using Mat3 = Eigen::Matrix3d;
using Mat4 = Eigen::Matrix4d;
using Mat34 = Eigen::Matrix<double, 3, 4>;
using Mat43 = Eigen::Matrix<double, 4, 3>;

/// Homogeneous 3D point (column 4-vector). Not all components may be zero.
struct HomPoint {
  Vec4 h;

  HomPoint() : h(Vec4::Zero()) {}
  explicit HomPoint(const Vec4& v) : h(v) {}
  HomPoint(double x, double y, double z, double w) : h(x, y, z, w) {}

  /// True when the last component vanishes relative to the vector norm.
  bool is_infinite(double tol = 1e-12) const {
    return std::abs(h(3)) <= tol * h.norm();
  }
};

/// Homogeneous plane covector (a, b, c, d): ax + by + cz + d = 0.
struct HomPlane {
  Vec4 p;

  HomPlane() : p(Vec4::Zero()) {}
  explicit HomPlane(const Vec4& v) : p(v) {}
  HomPlane(double a, double b, double c, double d) : p(a, b, c, d) {}

  Vec3 normal() const { return p.head<3>(); }

  /// Same covector with unit normal part.
  HomPlane unit_normal() const { return HomPlane(p / p.head<3>().norm()); }
};

/// Scale-free representative: unit norm, first significant component
/// positive. Used to compare homogeneous quantities "up to scale".
inline Vec4 canonical_form(const Vec4& v, double tol = 1e-12) {
  const double n = v.norm();
  if (n == 0.0) return v;
  Vec4 u = v / n;
  for (int i = 0; i < 4; ++i) {
    if (std::abs(u(i)) > tol) {
      if (u(i) < 0.0) u = -u;
      break;
    }
  }
  return u;
}

/// Distance between the canonical representatives of two homogeneous vectors.
inline double proportional_distance(const Vec4& a, const Vec4& b) {
  return (canonical_form(a) - canonical_form(b)).norm();
}

inline bool proportional(const Vec4& a, const Vec4& b, double tol = 1e-9) {
  return proportional_distance(a, b) <= tol;
}

}  // namespace lcfact
