#include "service.hpp"

#include "polychora/errors.hpp"
#include "polychora/formats.hpp"
#include "polychora/hopf_color.hpp"
#include "polychora/projection.hpp"

#include <nlohmann/json.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <random>

namespace polychora::service {

using nlohmann::json;

namespace {

Response error(int status, const std::string& message) {
  return {status, "application/json", json{{"error", message}}.dump()};
}

Response ok(const json& body, int status = 200) { return {status, "application/json", body.dump()}; }

std::uint64_t mix(std::uint64_t z) {
  // splitmix64 finalizer; a bijection, so distinct counters give distinct ids
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

json indices(const std::vector<EatEvent>& events) {
  json out = json::array();
  for (const auto& e : events) out.push_back(e.cell);
  return out;
}

json summary(const Game& game) {
  json eaten = json::array();
  for (int c = 0; c < static_cast<int>(game.state().eaten.size()); ++c)
    if (game.state().eaten[c]) eaten.push_back(c);
  return {{"polytope", game.polytope().name},
          {"cells", game.polytope().cells.size()},
          {"eatRadius", game.state().eatRadius},
          {"eaten", std::move(eaten)},
          {"coverage", game.coverage()},
          {"won", game.won()},
          {"player", quaternionToJson(game.player())}};
}

}  // namespace

GameService::GameService() : salt_(std::random_device{}()) {
  salt_ = (salt_ << 32) ^ std::random_device{}();
}

Response GameService::listPolytopes() const {
  json list = json::array();
  for (PolytopeKind k : allPolytopes()) {
    const Polychoron& p = catalog(k);
    list.push_back({{"name", p.name},
                    {"vertices", p.vertices.size()},
                    {"edges", p.edges.size()},
                    {"faces", p.faces.size()},
                    {"cells", p.cells.size()},
                    {"defaultEatRadius", defaultEatRadius(k)},
                    {"defaultSubdivision", defaultSubdivision(k)}});
  }
  return ok(list);
}

const std::string& GameService::cached(std::map<std::pair<int, int>, std::string>& cache,
                                       std::pair<int, int> key, const std::function<std::string()>& make) {
  std::lock_guard lock(cacheMutex_);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, make()).first;
  return it->second;
}

Response GameService::polytopeMesh(std::string_view name, std::optional<std::string_view> subdiv) {
  const auto kind = tryParsePolytope(name);
  if (!kind) return error(404, "unknown polytope '" + std::string(name) + "'");
  int level = defaultSubdivision(*kind);
  if (subdiv) {
    const auto* end = subdiv->data() + subdiv->size();
    const auto [ptr, ec] = std::from_chars(subdiv->data(), end, level);
    if (ec != std::errc() || ptr != end || level < 0 || level > kMaxSubdivision)
      return error(400, "subdiv must be an integer in [0, " + std::to_string(kMaxSubdivision) + "]");
  }
  const auto& body = cached(meshCache_, {static_cast<int>(*kind), level}, [&] {
    const ProjectedMesh mesh = projectMesh(tessellate(catalog(*kind), level), UnitQuaternion::identity(), {});
    return meshToJson(mesh, colorMesh(mesh, 0.0)).dump();
  });
  return {200, "application/json", body};
}

Response GameService::polytopeStructure(std::string_view name) {
  const auto kind = tryParsePolytope(name);
  if (!kind) return error(404, "unknown polytope '" + std::string(name) + "'");
  const auto& body = cached(structureCache_, {static_cast<int>(*kind), 0},
                           [&] { return polytopeToJson(catalog(*kind)).dump(); });
  return {200, "application/json", body};
}

std::string GameService::nextId() {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(mix(salt_ + ++counter_)));
  return buf;
}

Response GameService::createGame(std::string_view body) {
  const json request = json::parse(body, nullptr, false);
  if (request.is_discarded() || !request.is_object()) return error(400, "request body must be a JSON object");
  if (!request.contains("polytope") || !request["polytope"].is_string())
    return error(400, "missing string field 'polytope'");
  const auto kind = tryParsePolytope(request["polytope"].get<std::string>());
  if (!kind) return error(404, "unknown polytope '" + request["polytope"].get<std::string>() + "'");

  GameConfig config{*kind};
  try {
    if (request.contains("eatRadius") && !request["eatRadius"].is_null()) {
      if (!request["eatRadius"].is_number()) return error(400, "'eatRadius' must be a number");
      config.eatRadius = request["eatRadius"].get<double>();
    }
    if (request.contains("start")) config.startOrientation = quaternionFromJson(request["start"]);
    auto session = std::make_shared<Session>("", Game(config));
    std::lock_guard lock(sessionsMutex_);
    session->id = nextId();
    sessions_.emplace(session->id, session);
    return ok({{"id", session->id}, {"state", summary(session->game)}}, 201);
  } catch (const FormatError& e) {
    return error(400, e.what());
  } catch (const ConfigError& e) {
    return error(400, e.what());
  }
}

std::shared_ptr<GameService::Session> GameService::find(std::string_view id) const {
  std::lock_guard lock(sessionsMutex_);
  const auto it = sessions_.find(id);
  return it == sessions_.end() ? nullptr : it->second;
}

Response GameService::stepGame(std::string_view id, std::string_view body) {
  const auto session = find(id);
  if (!session) return error(404, "unknown game '" + std::string(id) + "'");
  const json request = json::parse(body, nullptr, false);
  if (request.is_discarded() || !request.is_object()) return error(400, "request body must be a JSON object");
  if (!request.contains("t") || !request["t"].is_number()) return error(400, "missing numeric field 't'");
  if (!request.contains("q")) return error(400, "missing field 'q'");
  const double t = request["t"].get<double>();
  if (!std::isfinite(t)) return error(400, "'t' must be finite");
  UnitQuaternion q;
  try {
    q = quaternionFromJson(request["q"]);
  } catch (const FormatError& e) {
    return error(400, e.what());
  }

  std::lock_guard lock(session->mutex);
  try {
    const auto events = session->game.step(q, t);
    return ok({{"eaten", indices(events)},
               {"coverage", session->game.coverage()},
               {"won", session->game.won()},
               {"player", quaternionToJson(session->game.player())}});
  } catch (const NonMonotonicTime& e) {
    return error(409, e.what());
  }
}

Response GameService::gameLog(std::string_view id) {
  const auto session = find(id);
  if (!session) return error(404, "unknown game '" + std::string(id) + "'");
  std::lock_guard lock(session->mutex);
  return {200, "application/x-ndjson", eventLogToString(session->game.state().eventLog)};
}

Response GameService::deleteGame(std::string_view id) {
  std::lock_guard lock(sessionsMutex_);
  const auto it = sessions_.find(id);
  if (it == sessions_.end()) return error(404, "unknown game '" + std::string(id) + "'");
  sessions_.erase(it);
  return {204, "application/json", ""};
}

std::size_t GameService::sessionCount() const {
  std::lock_guard lock(sessionsMutex_);
  return sessions_.size();
}

}  // namespace polychora::service
