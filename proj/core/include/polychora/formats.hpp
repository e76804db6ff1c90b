#pragma once

/**
 * Wire and file formats. Quaternions are always [w, x, y, z]; indices are
 * zero-based. See docs/formats.md for the schemas.
 */

#include "polychora/game.hpp"
#include "polychora/hopf_color.hpp"
#include "polychora/polytope.hpp"
#include "polychora/projection.hpp"
#include "polychora/trajectory.hpp"

#include <nlohmann/json.hpp>

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace polychora {

/// Accepted raw norm window for ingested quaternions; they are renormalized.
inline constexpr double kMinIngestNorm = 0.5;
inline constexpr double kMaxIngestNorm = 2.0;

nlohmann::json quaternionToJson(const UnitQuaternion& q);

/// Requires four finite numbers with norm in [0.5, 2]. Throws FormatError.
UnitQuaternion quaternionFromJson(const nlohmann::json& j);

/// {name, vertices, edges, faces, cells, cellCenters}
nlohmann::json polytopeToJson(const Polychoron& p);

/// {vertices3, triangles, cellIds, colors}; colors has one entry per triangle.
nlohmann::json meshToJson(const ProjectedMesh& mesh, std::span<const ColorRGB> colors);

/// Wavefront OBJ with one group per cell and one material per distinct
/// 8-bit color; `mtlFileName` is referenced through mtllib.
void writeObj(std::ostream& obj, std::ostream& mtl, const std::string& mtlFileName,
              const ProjectedMesh& mesh, std::span<const ColorRGB> colors);

/// JSON Lines, {"t": seconds, "cell": id, "pos": [w, x, y, z]} per event.
void writeEventLog(std::ostream& out, std::span<const EatEvent> events);
std::string eventLogToString(std::span<const EatEvent> events);
std::vector<EatEvent> readEventLog(std::istream& in);

/// JSON Lines, {"t": seconds, "q": [w, x, y, z]} per sample.
void writeTrajectory(std::ostream& out, std::span<const TrajectorySample> samples);

/// Throws FormatError carrying the 1-based line number of the first bad
/// line. Blank lines are skipped; times must not decrease.
std::vector<TrajectorySample> readTrajectory(std::istream& in);

}  // namespace polychora
