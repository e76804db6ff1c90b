#pragma once

#include "polychora/polytope.hpp"
#include "polychora/quaternion.hpp"
#include "polychora/vec.hpp"

#include <chrono>
#include <optional>
#include <span>
#include <vector>

namespace polychora {

/// One orientation sample as a headset would report it (sign arbitrary).
struct TrajectorySample {
  double t = 0;
  UnitQuaternion q;

  bool operator==(const TrajectorySample&) const = default;
};

/// Timestamps advance by 1/60 s per sample.
inline constexpr double kSampleRate = 60.0;

/// Largest accepted spin increment, radians.
inline constexpr double kMaxSpinStep = 0.1;

/**
 * Turning on the spot about a fixed axis: fromAxisAngle(axis, k * stepAngle)
 * for k = 0 .. ceil(totalAngle / stepAngle), the last sample landing exactly
 * on totalAngle. Throws BadStep unless 0 < stepAngle <= kMaxSpinStep and
 * totalAngle >= 0.
 */
std::vector<TrajectorySample> spinTrajectory(const Vec3& axis, double totalAngle, double stepAngle);

/// Greedy nearest-neighbor order over all cell centers, starting from
/// `start`; equal distances go to the lowest cell id.
std::vector<int> nnTour(const Polychoron& p, const UnitQuaternion& start);

/**
 * Searches for a path through every node of g along graph edges, by
 * backtracking that always tries the neighbor with the fewest unvisited
 * neighbors first. With startNode set the path must begin there.
 *
 * Returns nullopt on timeout or exhaustion; a timeout says nothing about
 * existence.
 */
std::optional<std::vector<int>> hamiltonianPath(const DualGraph& g, std::chrono::milliseconds timeLimit,
                                                std::optional<int> startNode = std::nullopt);

/// Default time box for hamiltonianPath.
inline constexpr std::chrono::milliseconds kDefaultHamiltonianTimeLimit{10'000};

/**
 * Slerps between consecutive waypoints so that no two consecutive samples
 * are more than maxStep apart. Every waypoint appears exactly; repeated
 * waypoints collapse. Throws AntipodalPair for antipodal neighbors (see
 * insertViaPoints).
 */
std::vector<TrajectorySample> interpolate(std::span<const UnitQuaternion> waypoints, double maxStep);

/// Adds a midpoint between consecutive antipodal waypoints.
std::vector<UnitQuaternion> insertViaPoints(std::span<const UnitQuaternion> waypoints);

/// Playable stream visiting cells in `order`, starting from `start`.
std::vector<TrajectorySample> tourTrajectory(const Polychoron& p, std::span<const int> order,
                                             const UnitQuaternion& start, double maxStep);

}  // namespace polychora
