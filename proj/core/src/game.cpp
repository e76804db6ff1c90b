#include "polychora/game.hpp"

#include "polychora/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace polychora {

double defaultEatRadius(PolytopeKind kind) {
  constexpr double pi = std::numbers::pi;
  constexpr double phi4 = 3 * std::numbers::phi + 2;
  switch (kind) {
    case PolytopeKind::Cell5: return std::acos(-0.25) / 2;  // centers at dot -1/4
    case PolytopeKind::Cell8: return pi / 4;
    case PolytopeKind::Cell16: return pi / 6;
    case PolytopeKind::Cell24: return pi / 6;
    case PolytopeKind::Cell120: return pi / 10;  // 600-cell edge, 36 degrees
    case PolytopeKind::Cell600: return std::acos(1 - 1 / (4 * phi4)) / 2;  // 120-cell edge
  }
  throw UnknownPolytope("unknown polytope kind");
}

Game::Game(const GameConfig& config) : polytope_(&catalog(config.polytope)) {
  const double radius = config.eatRadius.value_or(defaultEatRadius(config.polytope));
  if (!(radius > 0.0 && radius < std::numbers::pi / 2))
    throw ConfigError("eat radius " + std::to_string(radius) + " outside (0, pi/2)");
  state_.config = config;
  state_.eatRadius = radius;
  state_.eaten.assign(polytope_->cells.size(), false);
  state_.current = config.startOrientation;
  state_.previousRaw = config.startOrientation;
  eatAround(0.0);
}

std::vector<EatEvent> Game::step(const UnitQuaternion& rawQ, double t) {
  if (!std::isfinite(t)) throw NonMonotonicTime("sample time is not finite");
  if (t < state_.lastTime)
    throw NonMonotonicTime("sample time " + std::to_string(t) + " precedes " +
                           std::to_string(state_.lastTime));
  state_.lastTime = t;
  state_.previousRaw = rawQ;
  state_.current = resolveSign(state_.current, rawQ);
  return eatAround(t);
}

std::vector<EatEvent> Game::eatAround(double t) {
  std::vector<EatEvent> events;
  const auto& centers = polytope_->cellCenters;
  for (int c = 0; c < static_cast<int>(centers.size()); ++c) {
    if (state_.eaten[c]) continue;
    if (geodesicDistance(state_.current, centers[c]) <= state_.eatRadius) {
      state_.eaten[c] = true;
      events.push_back({t, c, state_.current});
      state_.eventLog.push_back(events.back());
    }
  }
  state_.won = state_.eventLog.size() == state_.eaten.size();
  return events;
}

double Game::coverage() const { return polychora::coverage(state_); }

Game newGame(const GameConfig& config) { return Game(config); }

double coverage(const GameState& state) {
  if (state.eaten.empty()) return 0.0;
  const auto eaten = std::count(state.eaten.begin(), state.eaten.end(), true);
  return static_cast<double>(eaten) / static_cast<double>(state.eaten.size());
}

}  // namespace polychora
