#include "polychora/hopf_color.hpp"

#include "polychora/errors.hpp"

#include <algorithm>
#include <cmath>

namespace polychora {

Vec3 hopfMap(const UnitQuaternion& q) {
  const double w = q.w(), x = q.x(), y = q.y(), z = q.z();
  return {w * w + x * x - y * y - z * z, 2 * (x * y + w * z), 2 * (x * z - w * y)};
}

namespace {

ColorRGB clamped(const Vec3& v) {
  const auto c = [](double s) { return std::clamp(s, 0.0, 1.0); };
  return {c(v.x), c(v.y), c(v.z)};
}

}  // namespace

ColorRGB baseColor(const UnitQuaternion& p) {
  return clamped((hopfMap(p) + Vec3{1, 1, 1}) * 0.5);
}

ColorRGB shadedColor(const UnitQuaternion& position, const Vec4& normal4, double strength) {
  if (!(strength >= 0.0 && strength <= 1.0)) throw InvalidArgument("shading strength outside [0, 1]");
  const Vec3 base = (hopfMap(position) + Vec3{1, 1, 1}) * 0.5;
  const Vec3 shade = hopfMap(UnitQuaternion(normal4)) * (0.5 * strength);
  return clamped(base + shade);
}

std::array<std::uint8_t, 3> to8bit(const ColorRGB& c) {
  const auto q = [](double v) {
    return static_cast<std::uint8_t>(std::lround(std::clamp(v, 0.0, 1.0) * 255.0));
  };
  return {q(c.r), q(c.g), q(c.b)};
}

std::vector<ColorRGB> colorMesh(const ProjectedMesh& mesh, double strength) {
  std::vector<ColorRGB> out;
  out.reserve(mesh.triangles.size());
  for (std::size_t t = 0; t < mesh.triangles.size(); ++t)
    out.push_back(shadedColor(mesh.positions4[t], mesh.normals4[t], strength));
  return out;
}

}  // namespace polychora
