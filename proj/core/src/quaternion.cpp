#include "polychora/quaternion.hpp"

#include "polychora/errors.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace polychora {

UnitQuaternion::UnitQuaternion(double w, double x, double y, double z) {
  const double n = std::sqrt(w * w + x * x + y * y + z * z);
  if (!std::isfinite(n) || n < 1e-12)
    throw DegenerateQuaternion("quaternion norm is zero or not finite");
  // already unit to rounding: keep the bits, so normalizing is idempotent
  // and serialized values read back exactly
  if (std::abs(n - 1.0) > 4 * std::numeric_limits<double>::epsilon()) {
    w /= n;
    x /= n;
    y /= n;
    z /= n;
  }
  w_ = w;
  x_ = x;
  y_ = y;
  z_ = z;
}

AxisAngle::AxisAngle(const Vec3& axis, double angle) : angle_(angle) {
  const double n = norm(axis);
  if (!std::isfinite(n) || n < 1e-12) throw ZeroVector("rotation axis has zero length");
  axis_ = axis * (1.0 / n);
}

Vec3 RotationMatrix3::apply(const Vec3& v) const {
  return {m[0][0] * v.x + m[0][1] * v.y + m[0][2] * v.z,
          m[1][0] * v.x + m[1][1] * v.y + m[1][2] * v.z,
          m[2][0] * v.x + m[2][1] * v.y + m[2][2] * v.z};
}

double RotationMatrix3::determinant() const {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

RotationMatrix3 RotationMatrix3::operator*(const RotationMatrix3& o) const {
  RotationMatrix3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      r.m[i][j] = m[i][0] * o.m[0][j] + m[i][1] * o.m[1][j] + m[i][2] * o.m[2][j];
  return r;
}

RotationMatrix3 RotationMatrix3::transposed() const {
  RotationMatrix3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.m[i][j] = m[j][i];
  return r;
}

UnitQuaternion multiply(const UnitQuaternion& a, const UnitQuaternion& b) {
  return {a.w() * b.w() - a.x() * b.x() - a.y() * b.y() - a.z() * b.z(),
          a.w() * b.x() + a.x() * b.w() + a.y() * b.z() - a.z() * b.y(),
          a.w() * b.y() - a.x() * b.z() + a.y() * b.w() + a.z() * b.x(),
          a.w() * b.z() + a.x() * b.y() - a.y() * b.x() + a.z() * b.w()};
}

UnitQuaternion conjugate(const UnitQuaternion& q) {
  return {q.w(), -q.x(), -q.y(), -q.z()};
}

double dot(const UnitQuaternion& p, const UnitQuaternion& q) { return dot(p.vec(), q.vec()); }

double geodesicDistance(const UnitQuaternion& p, const UnitQuaternion& q) {
  // Equals arccos(clamp(dot(p, q))) but keeps full precision near 0 and pi,
  // where arccos of a rounded dot product loses about half the digits.
  const Vec4 a = p.vec(), b = q.vec();
  return 2.0 * std::atan2(norm(a - b), norm(a + b));
}

UnitQuaternion fromAxisAngle(const AxisAngle& a) {
  const double half = 0.5 * a.angle();
  const double s = std::sin(half);
  return {std::cos(half), s * a.axis().x, s * a.axis().y, s * a.axis().z};
}

RotationMatrix3 toRotationMatrix(const UnitQuaternion& q) {
  const double w = q.w(), x = q.x(), y = q.y(), z = q.z();
  RotationMatrix3 r;
  r.m[0] = {1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y)};
  r.m[1] = {2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x)};
  r.m[2] = {2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y)};
  return r;
}

UnitQuaternion slerp(const UnitQuaternion& p, const UnitQuaternion& q, double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw InvalidArgument("slerp parameter outside [0, 1]");
  const double d = geodesicDistance(p, q);
  if (d >= std::numbers::pi - kAntipodalTolerance)
    throw AntipodalPair("slerp between antipodal quaternions has no unique geodesic");
  if (t == 0.0) return p;
  if (t == 1.0) return q;
  if (d < 1e-12) return p;
  const double s = std::sin(d);
  const double a = std::sin((1.0 - t) * d) / s;
  const double b = std::sin(t * d) / s;
  return UnitQuaternion(p.vec() * a + q.vec() * b);
}

UnitQuaternion resolveSign(const UnitQuaternion& prev, const UnitQuaternion& cur) {
  return dot(prev, cur) < 0.0 ? -cur : cur;
}

}  // namespace polychora
