#pragma once

// Local HTTP+JSON game service: a human plays the robber against the
// synthesized strategy (or, on graphs that are not P5-free, against the
// solver's optimal cops).

#include <chrono>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include "harness/serialize.hpp"

namespace httplib {
class Server;
}

namespace p5cops::harness {

struct ServiceConfig {
  std::chrono::seconds idle_ttl{1800};
  std::size_t max_sessions = 256;
};

struct ServiceResponse {
  int status = 200;
  Json body;
};

class Session;

class GameService {
 public:
  explicit GameService(ServiceConfig config = {});
  ~GameService();

  /// Routes one request. `path` excludes any query string.
  ServiceResponse handle(const std::string& method, const std::string& path, const std::string& body);

  std::size_t session_count();

  /// Test hook: pretend `by` has elapsed for every session's idle clock.
  void age_sessions(std::chrono::seconds by);

 private:
  ServiceResponse create(const Json& body);
  std::shared_ptr<Session> find(const std::string& id);
  void expire_idle();

  ServiceConfig config_;
  std::mutex mutex_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  std::uint64_t next_id_ = 1;
};

/// Registers the API routes on an httplib server.
void mount(GameService& service, httplib::Server& server);

/// Port from P5COPS_PORT, else 8080.
int default_port();

/// Blocks serving on 127.0.0.1:port. Returns false if binding fails.
bool serve(int port, const ServiceConfig& config = {});

}  // namespace p5cops::harness
