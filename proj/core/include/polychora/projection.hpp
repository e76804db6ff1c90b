#pragma once

#include "polychora/polytope.hpp"
#include "polychora/quaternion.hpp"
#include "polychora/vec.hpp"

#include <array>
#include <cstdint>
#include <set>
#include <vector>

namespace polychora {

/// Points with w <= -1 + kPoleEpsilon (relative to the pole) are not projected.
inline constexpr double kPoleEpsilon = 1e-6;

/// Largest accepted tessellation level.
inline constexpr int kMaxSubdivision = 6;

/// v / |v|. Throws ZeroVector if |v| <= 1e-12.
UnitQuaternion radialProject(const Point4& v);

/// Moves the scene so the player at q sits at the identity: conj(q) * p.
UnitQuaternion sceneTransform(const UnitQuaternion& q, const UnitQuaternion& p);

/// Same action on an arbitrary 4-vector (used for normals); linear, so no
/// renormalization.
Vec4 sceneTransform(const UnitQuaternion& q, const Vec4& v);

/// (x, y, z) / (1 + w), projecting from (-1, 0, 0, 0). Throws NearPole.
Point3 stereographic(const UnitQuaternion& p);

/// Exact inverse of stereographic() on its domain.
UnitQuaternion inverseStereographic(const Point3& v);

/**
 * Stereographic projection from an arbitrary pole. The pole maps to
 * infinity and its antipode to the origin. The default pole (-1, 0, 0, 0)
 * reproduces stereographic().
 */
class StereographicProjection {
 public:
  StereographicProjection() = default;
  explicit StereographicProjection(const UnitQuaternion& pole);

  const UnitQuaternion& pole() const { return pole_; }

  bool nearPole(const UnitQuaternion& p) const;
  Point3 project(const UnitQuaternion& p) const;
  UnitQuaternion unproject(const Point3& v) const;

 private:
  UnitQuaternion pole_ = -UnitQuaternion::identity();
  // carries the pole onto (-1, 0, 0, 0)
  UnitQuaternion toStandard_;
};

/**
 * Triangulated cell boundaries on S^3. Every 2-face appears twice, once per
 * incident cell, with opposite normals.
 */
struct TessellatedMesh {
  std::vector<Point4> vertices4;
  std::vector<std::array<std::uint32_t, 3>> triangles;
  std::vector<int> cellIds;
  /// Unit, tangent to S^3, orthogonal to the triangle, pointing out of its cell.
  std::vector<Vec4> faceNormals4;
  int subdivisionLevel = 0;
};

/// Fan-triangulates each face from its centroid, then splits every triangle
/// four ways `level` times. Throws SubdivisionTooDeep above kMaxSubdivision.
TessellatedMesh tessellate(const Polychoron& p, int level);

/// Interactive default: 3 up to 24 cells, 2 for the 120-cell, 1 for the 600-cell.
int defaultSubdivision(PolytopeKind kind);

/// Mesh in the player's frame, ready for drawing.
struct ProjectedMesh {
  std::vector<Point3> vertices3;
  std::vector<std::array<std::uint32_t, 3>> triangles;
  std::vector<int> cellIds;
  /// Transformed normals, per triangle.
  std::vector<Vec4> normals4;
  /// Transformed triangle centroid on S^3, per triangle.
  std::vector<UnitQuaternion> positions4;
};

/// Drops eaten cells, applies sceneTransform(q, .) and projects. Triangles
/// with any vertex in the pole region are culled.
ProjectedMesh projectMesh(const TessellatedMesh& mesh, const UnitQuaternion& q,
                          const std::set<int>& eatenCells,
                          const StereographicProjection& projection = {});

}  // namespace polychora
