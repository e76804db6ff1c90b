#pragma once

#include <cmath>

namespace polychora {

/// Point or direction in R^3.
struct Vec3 {
  double x = 0, y = 0, z = 0;

  constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  constexpr Vec3 operator-() const { return {-x, -y, -z}; }
  constexpr bool operator==(const Vec3&) const = default;
};

/// Point or direction in R^4, component order (w, x, y, z).
struct Vec4 {
  double w = 0, x = 0, y = 0, z = 0;

  constexpr Vec4 operator+(const Vec4& o) const { return {w + o.w, x + o.x, y + o.y, z + o.z}; }
  constexpr Vec4 operator-(const Vec4& o) const { return {w - o.w, x - o.x, y - o.y, z - o.z}; }
  constexpr Vec4 operator*(double s) const { return {w * s, x * s, y * s, z * s}; }
  constexpr Vec4 operator-() const { return {-w, -x, -y, -z}; }
  constexpr bool operator==(const Vec4&) const = default;

  Vec4& operator+=(const Vec4& o) {
    w += o.w;
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
};

using Point3 = Vec3;
using Point4 = Vec4;

constexpr double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
constexpr double dot(const Vec4& a, const Vec4& b) {
  return a.w * b.w + a.x * b.x + a.y * b.y + a.z * b.z;
}

inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }
inline double norm(const Vec4& v) { return std::sqrt(dot(v, v)); }

constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

/// Vector orthogonal to a, b and c (the 4D analogue of the cross product);
/// its length is the 3-volume of the parallelepiped they span.
constexpr Vec4 cross(const Vec4& a, const Vec4& b, const Vec4& c) {
  // cofactor expansion of det[e; a; b; c] along the first row
  const double xy = a.x * b.y - a.y * b.x, xz = a.x * b.z - a.z * b.x,
               yz = a.y * b.z - a.z * b.y, wx = a.w * b.x - a.x * b.w,
               wy = a.w * b.y - a.y * b.w, wz = a.w * b.z - a.z * b.w;
  return {
      yz * c.x - xz * c.y + xy * c.z,
      -(yz * c.w - wz * c.y + wy * c.z),
      xz * c.w - wz * c.x + wx * c.z,
      -(xy * c.w - wy * c.x + wx * c.y),
  };
}

inline bool isFinite(const Vec3& v) {
  return std::isfinite(v.x) && std::isfinite(v.y) && std::isfinite(v.z);
}
inline bool isFinite(const Vec4& v) {
  return std::isfinite(v.w) && std::isfinite(v.x) && std::isfinite(v.y) && std::isfinite(v.z);
}

}  // namespace polychora
