#pragma once

#include "polychora/quaternion.hpp"
#include "polychora/vec.hpp"

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace polychora {

/// The six regular 4-polytopes, in order of increasing cell count.
enum class PolytopeKind { Cell5, Cell8, Cell16, Cell24, Cell120, Cell600 };

std::span<const PolytopeKind> allPolytopes();

/// "5-cell", "8-cell", ...
std::string_view polytopeName(PolytopeKind kind);

/// Throws UnknownPolytope for anything but the six canonical names.
PolytopeKind parsePolytope(std::string_view name);
std::optional<PolytopeKind> tryParsePolytope(std::string_view name);

/**
 * A regular polychoron with its full boundary combinatorics.
 *
 * Vertices lie on S^3 and are sorted lexicographically. Faces are vertex
 * index cycles starting at their smallest index; cells are sorted lists of
 * face indices. cellCenters[c] is the normalized centroid of cell c.
 */
struct Polychoron {
  std::string name;
  std::vector<Vec4> vertices;
  std::vector<std::array<int, 2>> edges;
  std::vector<std::vector<int>> faces;
  std::vector<std::vector<int>> cells;
  std::vector<UnitQuaternion> cellCenters;
};

/// Chord and hyperplane tolerance used for incidence detection.
inline constexpr double kIncidenceTolerance = 1e-9;

/**
 * Builds one of the six polychora.
 *
 * Each is oriented so that one of its cell centers is the identity
 * quaternion: a player starting at 1 starts inside a cell. Output is
 * identical on every run.
 */
Polychoron build(PolytopeKind kind);
Polychoron build(std::string_view name);

/// Shared immutable instance, built on first use. Thread-safe.
const Polychoron& catalog(PolytopeKind kind);

/**
 * Recovers the boundary complex of the convex hull of points on a sphere
 * around the origin, assuming a regular polytope: edges join vertices at
 * minimal chord length, faces are the shortest planar edge cycles, cells
 * are maximal face sets in a common supporting hyperplane.
 *
 * Vertices are radially projected to S^3 and sorted first.
 */
Polychoron fromVertices(std::string name, std::span<const Vec4> vertices);

/// Normalized centroids of each cell's vertices, in cell order.
std::vector<UnitQuaternion> cellCenters(const Polychoron& p);

/// Distinct vertex indices of a cell, ascending.
std::vector<int> cellVertices(const Polychoron& p, int cell);

/// For each face, the ascending list of cells containing it.
std::vector<std::vector<int>> faceCells(const Polychoron& p);

struct DualGraph {
  int nodeCount = 0;
  std::vector<std::array<int, 2>> edges;
  std::vector<std::vector<int>> adjacency;

  int degree(int node) const { return static_cast<int>(adjacency.at(node).size()); }
};

/// Cells are adjacent when they share a 2-face.
DualGraph dualAdjacency(const Polychoron& p);

struct ValidationReport {
  bool ok = true;
  std::string failure;

  explicit operator bool() const { return ok; }
};

/// Checks every structural invariant and reports the first failure.
ValidationReport validate(const Polychoron& p);

}  // namespace polychora
