#pragma once

#include "polychora/projection.hpp"
#include "polychora/quaternion.hpp"
#include "polychora/vec.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace polychora {

/// Brightness fractions, each clamped to [0, 1].
struct ColorRGB {
  double r = 0, g = 0, b = 0;

  constexpr bool operator==(const ColorRGB&) const = default;
};

inline constexpr double kDefaultShadingStrength = 0.5;

/// Im(q i conj(q)) on the unit 2-sphere. Constant on the fibers
/// q (cos a + i sin a).
Vec3 hopfMap(const UnitQuaternion& q);

/// The 2-sphere inscribed in the RGB cube: (hopf + 1) / 2.
ColorRGB baseColor(const UnitQuaternion& p);

/// Base color plus a zero-centered shading term strength * hopf(normal) / 2,
/// clamped to the cube.
ColorRGB shadedColor(const UnitQuaternion& position, const Vec4& normal4,
                     double strength = kDefaultShadingStrength);

/// round(255 v) per channel.
std::array<std::uint8_t, 3> to8bit(const ColorRGB& c);

/// One shaded color per triangle of a projected mesh.
std::vector<ColorRGB> colorMesh(const ProjectedMesh& mesh,
                                double strength = kDefaultShadingStrength);

}  // namespace polychora
