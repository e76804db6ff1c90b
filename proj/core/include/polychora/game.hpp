#pragma once

#include "polychora/polytope.hpp"
#include "polychora/quaternion.hpp"

#include <optional>
#include <span>
#include <vector>

namespace polychora {

/// Half the geodesic distance between adjacent cell centers.
double defaultEatRadius(PolytopeKind kind);

struct GameConfig {
  PolytopeKind polytope = PolytopeKind::Cell8;
  /// Radians, in (0, pi/2). Defaults to defaultEatRadius(polytope).
  std::optional<double> eatRadius;
  UnitQuaternion startOrientation;
};

struct EatEvent {
  double t = 0;
  int cell = -1;
  UnitQuaternion position;

  bool operator==(const EatEvent&) const = default;
};

struct GameState {
  GameConfig config;
  double eatRadius = 0;
  std::vector<bool> eaten;
  /// Sign-resolved player position.
  UnitQuaternion current;
  /// Last sample as received, before sign resolution.
  UnitQuaternion previousRaw;
  double lastTime = 0;
  std::vector<EatEvent> eventLog;
  bool won = false;
};

/**
 * One game on one polychoron.
 *
 * Orientation samples may arrive with either sign; each is resolved against
 * the current position so the player moves continuously. A cell is eaten
 * when the player is within eatRadius of its center, measured on S^3.
 * Only sample endpoints are checked.
 */
class Game {
 public:
  /// Throws ConfigError for a radius outside (0, pi/2). Eats whatever lies
  /// within reach of the start orientation at t = 0.
  explicit Game(const GameConfig& config);

  /// Throws NonMonotonicTime if t is earlier than the previous sample.
  std::vector<EatEvent> step(const UnitQuaternion& rawQ, double t);

  const GameState& state() const { return state_; }
  const Polychoron& polytope() const { return *polytope_; }
  const UnitQuaternion& player() const { return state_.current; }
  bool won() const { return state_.won; }
  int eatenCount() const { return static_cast<int>(state_.eventLog.size()); }
  double coverage() const;

 private:
  std::vector<EatEvent> eatAround(double t);

  const Polychoron* polytope_;
  GameState state_;
};

Game newGame(const GameConfig& config);

/// Eaten cells over all cells.
double coverage(const GameState& state);

}  // namespace polychora
