#pragma once

#include "service.hpp"

#include <string>

namespace httplib {
class Server;
}

namespace polychora::service {

/// Registers the service endpoints on an httplib server.
void mountRoutes(httplib::Server& server, GameService& service);

/// Environment variable consulted for the default port.
inline constexpr const char* kPortEnvVar = "POLYCHORA_PORT";
inline constexpr int kDefaultPort = 8080;

/// Port from POLYCHORA_PORT, or kDefaultPort when unset or malformed.
int defaultPort();

}  // namespace polychora::service
