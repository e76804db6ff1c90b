#pragma once

/**
 * Unit quaternions w + xi + yj + zk, with i^2 = j^2 = k^2 = ijk = -1.
 *
 * A UnitQuaternion is simultaneously a point of S^3, an element of the
 * group acting on S^3 by multiplication, and (up to sign) a 3D orientation.
 * Component order is (w, x, y, z) everywhere, scalar first.
 */

#include "polychora/vec.hpp"

#include <array>

namespace polychora {

class UnitQuaternion {
 public:
  /// The identity 1.
  constexpr UnitQuaternion() = default;

  /// Normalizes the input; throws DegenerateQuaternion if its norm is
  /// below 1e-12 or it is not finite.
  UnitQuaternion(double w, double x, double y, double z);
  explicit UnitQuaternion(const Vec4& v) : UnitQuaternion(v.w, v.x, v.y, v.z) {}

  static constexpr UnitQuaternion identity() { return {}; }

  constexpr double w() const { return w_; }
  constexpr double x() const { return x_; }
  constexpr double y() const { return y_; }
  constexpr double z() const { return z_; }

  constexpr Vec4 vec() const { return {w_, x_, y_, z_}; }
  constexpr std::array<double, 4> components() const { return {w_, x_, y_, z_}; }

  /// Antipode; exact, no renormalization.
  constexpr UnitQuaternion operator-() const {
    UnitQuaternion r;
    r.w_ = -w_;
    r.x_ = -x_;
    r.y_ = -y_;
    r.z_ = -z_;
    return r;
  }

  constexpr bool operator==(const UnitQuaternion&) const = default;

 private:
  double w_ = 1, x_ = 0, y_ = 0, z_ = 0;
};

/// Rotation about a unit axis by an angle in radians (any real value).
class AxisAngle {
 public:
  /// Normalizes axis; throws ZeroVector if it has no direction.
  AxisAngle(const Vec3& axis, double angle);

  const Vec3& axis() const { return axis_; }
  double angle() const { return angle_; }

 private:
  Vec3 axis_;
  double angle_;
};

/// Element of SO(3), row-major.
struct RotationMatrix3 {
  std::array<std::array<double, 3>, 3> m{};

  static constexpr RotationMatrix3 identity() {
    return {{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}};
  }

  Vec3 apply(const Vec3& v) const;
  double determinant() const;
  RotationMatrix3 operator*(const RotationMatrix3& o) const;
  RotationMatrix3 transposed() const;
};

/// Hamilton product, renormalized. Noncommutative.
UnitQuaternion multiply(const UnitQuaternion& a, const UnitQuaternion& b);
inline UnitQuaternion operator*(const UnitQuaternion& a, const UnitQuaternion& b) {
  return multiply(a, b);
}

/// Group inverse (w, -x, -y, -z).
UnitQuaternion conjugate(const UnitQuaternion& q);

double dot(const UnitQuaternion& p, const UnitQuaternion& q);

/// Arc length on S^3 in [0, pi]. This is distance on the sphere, not on
/// RP^3: q and -q are at distance pi.
double geodesicDistance(const UnitQuaternion& p, const UnitQuaternion& q);

UnitQuaternion fromAxisAngle(const AxisAngle& a);
inline UnitQuaternion fromAxisAngle(const Vec3& axis, double angle) {
  return fromAxisAngle(AxisAngle(axis, angle));
}

/// toRotationMatrix(q) == toRotationMatrix(-q).
RotationMatrix3 toRotationMatrix(const UnitQuaternion& q);

/// Distances at or beyond this are treated as antipodal by slerp.
inline constexpr double kAntipodalTolerance = 1e-9;

/// Point at fraction t along the minor great-circle arc from p to q.
/// Throws AntipodalPair when the arc is not unique and InvalidArgument
/// for t outside [0, 1].
UnitQuaternion slerp(const UnitQuaternion& p, const UnitQuaternion& q, double t);

/// Picks the sign of cur closest to prev: cur if dot(prev, cur) >= 0,
/// otherwise -cur.
UnitQuaternion resolveSign(const UnitQuaternion& prev, const UnitQuaternion& cur);

}  // namespace polychora
