#pragma once

#include <cmath>
#include <ostream>

namespace chipbkg {

/// Cartesian triple in cm (positions) or dimensionless (directions).
struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  Vec3() = default;
  Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  Vec3 operator-() const { return {-x, -y, -z}; }
  Vec3& operator+=(const Vec3& o) {
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }

  double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
  double norm2() const { return dot(*this); }
  double norm() const { return std::sqrt(norm2()); }

  Vec3 normalized() const {
    const double n = norm();
    return {x / n, y / n, z / n};
  }

  bool finite() const {
    return std::isfinite(x) && std::isfinite(y) && std::isfinite(z);
  }

  /// Unit within the tolerance used for direction vectors.
  bool is_unit(double tol = 1e-9) const {
    return std::fabs(norm() - 1.0) < tol;
  }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

inline std::ostream& operator<<(std::ostream& os, const Vec3& v) {
  return os << "(" << v.x << ", " << v.y << ", " << v.z << ")";
}

/// Rotate a direction given in the frame whose +z axis is `axis` (unit)
/// into the world frame. Standard Uz rotation.
inline Vec3 rotate_to_axis(const Vec3& local, const Vec3& axis) {
  const double uz = axis.z;
  const double up = std::sqrt(axis.x * axis.x + axis.y * axis.y);
  if (up < 1e-12) {
    // Axis along +-z: identity or mirror.
    return uz > 0 ? local : Vec3{local.x, -local.y, -local.z};
  }
  const double ux = axis.x, uy = axis.y;
  return {local.x * ux * uz / up - local.y * uy / up + local.z * ux,
          local.x * uy * uz / up + local.y * ux / up + local.z * uy,
          -local.x * up + local.z * uz};
}

}  // namespace chipbkg
