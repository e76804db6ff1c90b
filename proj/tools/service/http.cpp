#include "http.hpp"

#include <httplib.h>

#include <cstdlib>
#include <string>

namespace polychora::service {

namespace {

void send(httplib::Response& res, const Response& r) {
  res.status = r.status;
  if (!r.body.empty() || r.status != 204) res.set_content(r.body, r.contentType);
}

}  // namespace

void mountRoutes(httplib::Server& server, GameService& service) {
  server.set_default_headers({{"Access-Control-Allow-Origin", "*"}});

  server.Get("/polytopes", [&](const httplib::Request&, httplib::Response& res) {
    send(res, service.listPolytopes());
  });
  server.Get(R"(/polytope/([^/]+)/structure)", [&](const httplib::Request& req, httplib::Response& res) {
    send(res, service.polytopeStructure(req.matches[1].str()));
  });
  server.Get(R"(/polytope/([^/]+))", [&](const httplib::Request& req, httplib::Response& res) {
    std::optional<std::string> subdiv;
    if (req.has_param("subdiv")) subdiv = req.get_param_value("subdiv");
    send(res, service.polytopeMesh(req.matches[1].str(), subdiv));
  });
  server.Post("/games", [&](const httplib::Request& req, httplib::Response& res) {
    send(res, service.createGame(req.body));
  });
  server.Post(R"(/games/([^/]+)/step)", [&](const httplib::Request& req, httplib::Response& res) {
    send(res, service.stepGame(req.matches[1].str(), req.body));
  });
  server.Get(R"(/games/([^/]+)/log)", [&](const httplib::Request& req, httplib::Response& res) {
    send(res, service.gameLog(req.matches[1].str()));
  });
  server.Delete(R"(/games/([^/]+))", [&](const httplib::Request& req, httplib::Response& res) {
    send(res, service.deleteGame(req.matches[1].str()));
  });
  server.Options(R"(.*)", [](const httplib::Request&, httplib::Response& res) {
    res.set_header("Access-Control-Allow-Methods", "GET, POST, DELETE, OPTIONS");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
    res.status = 204;
  });
}

int defaultPort() {
  if (const char* env = std::getenv(kPortEnvVar)) {
    char* end = nullptr;
    const long port = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && port > 0 && port < 65536) return static_cast<int>(port);
  }
  return kDefaultPort;
}

}  // namespace polychora::service
