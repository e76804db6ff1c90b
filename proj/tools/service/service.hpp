#pragma once

#include "polychora/game.hpp"
#include "polychora/polytope.hpp"

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace polychora::service {

struct Response {
  int status = 200;
  std::string contentType = "application/json";
  std::string body;
};

/**
 * Transport-independent request handlers for the local game service.
 *
 * Geometry responses are computed once per (polytope, subdivision) and
 * served from an immutable cache. Each session serializes its own steps;
 * distinct sessions step concurrently.
 */
class GameService {
 public:
  GameService();

  /// GET /polytopes
  Response listPolytopes() const;
  /// GET /polytope/{name}?subdiv=k
  Response polytopeMesh(std::string_view name, std::optional<std::string_view> subdiv);
  /// GET /polytope/{name}/structure
  Response polytopeStructure(std::string_view name);
  /// POST /games
  Response createGame(std::string_view body);
  /// POST /games/{id}/step
  Response stepGame(std::string_view id, std::string_view body);
  /// GET /games/{id}/log
  Response gameLog(std::string_view id);
  /// DELETE /games/{id}
  Response deleteGame(std::string_view id);

  std::size_t sessionCount() const;

 private:
  struct Session {
    std::string id;
    std::mutex mutex;
    Game game;
    std::chrono::system_clock::time_point createdAt;

    Session(std::string i, Game g)
        : id(std::move(i)), game(std::move(g)), createdAt(std::chrono::system_clock::now()) {}
  };

  std::shared_ptr<Session> find(std::string_view id) const;
  std::string nextId();
  const std::string& cached(std::map<std::pair<int, int>, std::string>& cache, std::pair<int, int> key,
                            const std::function<std::string()>& make);

  mutable std::mutex sessionsMutex_;
  std::map<std::string, std::shared_ptr<Session>, std::less<>> sessions_;
  std::uint64_t counter_ = 0;
  std::uint64_t salt_;

  std::mutex cacheMutex_;
  std::map<std::pair<int, int>, std::string> meshCache_;
  std::map<std::pair<int, int>, std::string> structureCache_;
};

}  // namespace polychora::service
