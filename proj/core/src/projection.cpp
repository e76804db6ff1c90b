#include "polychora/projection.hpp"

#include "polychora/errors.hpp"

#include <cmath>
#include <map>

namespace polychora {

UnitQuaternion radialProject(const Point4& v) {
  const double n = norm(v);
  if (!(n > 1e-12) || !std::isfinite(n)) throw ZeroVector("cannot radially project a zero vector");
  return UnitQuaternion(v);
}

UnitQuaternion sceneTransform(const UnitQuaternion& q, const UnitQuaternion& p) {
  return conjugate(q) * p;
}

Vec4 sceneTransform(const UnitQuaternion& q, const Vec4& v) {
  const double w = q.w(), x = -q.x(), y = -q.y(), z = -q.z();
  return {w * v.w - x * v.x - y * v.y - z * v.z,
          w * v.x + x * v.w + y * v.z - z * v.y,
          w * v.y - x * v.z + y * v.w + z * v.x,
          w * v.z + x * v.y - y * v.x + z * v.w};
}

Point3 stereographic(const UnitQuaternion& p) {
  if (p.w() <= -1.0 + kPoleEpsilon) throw NearPole("point too close to the projection pole");
  const double s = 1.0 / (1.0 + p.w());
  return {p.x() * s, p.y() * s, p.z() * s};
}

UnitQuaternion inverseStereographic(const Point3& v) {
  const double s = dot(v, v);
  const double d = 1.0 + s;
  return {(1.0 - s) / d, 2.0 * v.x / d, 2.0 * v.y / d, 2.0 * v.z / d};
}

StereographicProjection::StereographicProjection(const UnitQuaternion& pole)
    : pole_(pole), toStandard_(-conjugate(pole)) {}

bool StereographicProjection::nearPole(const UnitQuaternion& p) const {
  return (toStandard_ * p).w() <= -1.0 + kPoleEpsilon;
}

Point3 StereographicProjection::project(const UnitQuaternion& p) const {
  return stereographic(toStandard_ * p);
}

UnitQuaternion StereographicProjection::unproject(const Point3& v) const {
  return conjugate(toStandard_) * inverseStereographic(v);
}

namespace {

struct FacePatch {
  std::vector<std::uint32_t> vertexIds;  // into the mesh vertex list
  std::vector<std::array<std::uint32_t, 3>> triangles;
  Vec4 normal;  // sign arbitrary
};

// Grid point key: centroid weight, then (corner, weight) pairs sorted by
// corner with zero weights dropped, so shared fan edges dedupe exactly.
using GridKey = std::array<int, 5>;

FacePatch tessellateFace(const Polychoron& p, const std::vector<int>& face, int level,
                         std::vector<Point4>& meshVertices) {
  const int m = static_cast<int>(face.size());
  const int n = 1 << level;
  Vec4 centroid;
  for (int v : face) centroid += p.vertices[v];
  centroid = centroid * (1.0 / m);

  FacePatch patch;
  std::map<GridKey, std::uint32_t> ids;
  auto vertexAt = [&](int k, int b, int c) -> std::uint32_t {
    const int a = n - b - c;
    const int i1 = k, i2 = (k + 1) % m;
    std::array<std::pair<int, int>, 2> parts{{{i1, b}, {i2, c}}};
    if (parts[0].first > parts[1].first) std::swap(parts[0], parts[1]);
    GridKey key{a, -1, 0, -1, 0};
    int slot = 1;
    for (auto [idx, weight] : parts)
      if (weight > 0) {
        key[slot] = idx;
        key[slot + 1] = weight;
        slot += 2;
      }
    if (auto it = ids.find(key); it != ids.end()) return it->second;
    const Vec4 pt = (centroid * a + p.vertices[face[i1]] * b + p.vertices[face[i2]] * c) * (1.0 / n);
    const auto id = static_cast<std::uint32_t>(meshVertices.size());
    meshVertices.push_back(radialProject(pt).vec());
    ids.emplace(key, id);
    return id;
  };

  for (int k = 0; k < m; ++k)
    for (int b = 0; b < n; ++b)
      for (int c = 0; b + c < n; ++c) {
        patch.triangles.push_back({vertexAt(k, b, c), vertexAt(k, b + 1, c), vertexAt(k, b, c + 1)});
        if (b + c <= n - 2)
          patch.triangles.push_back(
              {vertexAt(k, b + 1, c), vertexAt(k, b + 1, c + 1), vertexAt(k, b, c + 1)});
      }

  // the face and all of its radially projected subdivisions span the same
  // 3-dimensional subspace; its orthogonal complement is the normal line
  const Vec4 n4 = cross(centroid, p.vertices[face[0]] - centroid, p.vertices[face[1]] - centroid);
  patch.normal = n4 * (1.0 / norm(n4));
  return patch;
}

}  // namespace

TessellatedMesh tessellate(const Polychoron& p, int level) {
  if (level < 0) throw InvalidArgument("subdivision level must be nonnegative");
  if (level > kMaxSubdivision)
    throw SubdivisionTooDeep("subdivision level " + std::to_string(level) + " exceeds " +
                             std::to_string(kMaxSubdivision));
  TessellatedMesh mesh;
  mesh.subdivisionLevel = level;

  std::vector<FacePatch> patches;
  patches.reserve(p.faces.size());
  for (const auto& face : p.faces) patches.push_back(tessellateFace(p, face, level, mesh.vertices4));

  for (int c = 0; c < static_cast<int>(p.cells.size()); ++c) {
    const Vec4 center = p.cellCenters.at(c).vec();
    for (int f : p.cells[c]) {
      const FacePatch& patch = patches.at(f);
      const Vec4 normal = dot(patch.normal, center) > 0 ? -patch.normal : patch.normal;
      for (const auto& tri : patch.triangles) {
        mesh.triangles.push_back(tri);
        mesh.cellIds.push_back(c);
        mesh.faceNormals4.push_back(normal);
      }
    }
  }
  return mesh;
}

int defaultSubdivision(PolytopeKind kind) {
  switch (kind) {
    case PolytopeKind::Cell120: return 2;
    case PolytopeKind::Cell600: return 1;
    default: return 3;
  }
}

ProjectedMesh projectMesh(const TessellatedMesh& mesh, const UnitQuaternion& q,
                          const std::set<int>& eatenCells, const StereographicProjection& projection) {
  constexpr std::uint32_t kUnseen = 0xffffffffu, kCulled = 0xfffffffeu;
  std::vector<std::uint32_t> remap(mesh.vertices4.size(), kUnseen);
  std::vector<UnitQuaternion> moved(mesh.vertices4.size());
  ProjectedMesh out;

  auto place = [&](std::uint32_t v) {
    if (remap[v] == kUnseen) {
      const UnitQuaternion s = sceneTransform(q, UnitQuaternion(mesh.vertices4[v]));
      if (projection.nearPole(s)) {
        remap[v] = kCulled;
      } else {
        moved[v] = s;
        remap[v] = static_cast<std::uint32_t>(out.vertices3.size());
        out.vertices3.push_back(projection.project(s));
      }
    }
    return remap[v];
  };

  for (std::size_t t = 0; t < mesh.triangles.size(); ++t) {
    if (eatenCells.count(mesh.cellIds[t])) continue;
    const auto& tri = mesh.triangles[t];
    const std::array<std::uint32_t, 3> idx{place(tri[0]), place(tri[1]), place(tri[2])};
    if (idx[0] == kCulled || idx[1] == kCulled || idx[2] == kCulled) continue;
    out.triangles.push_back(idx);
    out.cellIds.push_back(mesh.cellIds[t]);
    out.normals4.push_back(sceneTransform(q, mesh.faceNormals4[t]));
    out.positions4.emplace_back(moved[tri[0]].vec() + moved[tri[1]].vec() + moved[tri[2]].vec());
  }
  return out;
}

}  // namespace polychora
