#include "harness/service.hpp"

#include <httplib.h>

#include <cstdlib>
#include <random>
#include <regex>
#include <sstream>
#include <vector>

#include "p5cops/errors.hpp"
#include "p5cops/graph6.hpp"
#include "p5cops/graph_algorithms.hpp"
#include "p5cops/recognition.hpp"
#include "p5cops/solver.hpp"
#include "p5cops/strategy.hpp"

namespace p5cops::harness {

namespace {

ServiceResponse error(int status, const std::string& message, Json extra = Json::object()) {
  Json body{{"error", message}};
  for (auto& [k, v] : extra.items()) body[k] = v;
  return {status, body};
}

}  // namespace

class Session {
 public:
  struct Snapshot {
    CopPair cops{};
    Vertex robber = 0;
    int turn = 0;
    std::string phase;
    std::string annotation;
    std::string status;
    std::optional<CopPair> cop_reply;
  };

  Session(std::string id, Graph g) : id_(std::move(id)), g_(std::move(g)) {
    p5_free_ = is_p5_free(g_);
    alpha_ = independence_number(g_);
    const int k_max = g_.order() <= kMaxOrderThreeCops ? 3 : 2;
    for (int k = 1; k <= k_max && !cop_number_; ++k) {
      SolveTable t = solve(g_, k);
      const bool win = cops_win(t);
      if (k == 2) table_ = std::make_shared<const SolveTable>(std::move(t));
      if (win) cop_number_ = k;
    }
    if (p5_free_) engine_.emplace(synthesize(g_));
    touch();
  }

  std::mutex& mutex() { return mutex_; }
  void touch() { last_used_ = std::chrono::steady_clock::now(); }
  void age(std::chrono::seconds by) { last_used_ -= by; }
  std::chrono::steady_clock::time_point last_used() const { return last_used_; }

  Json describe() const {
    return {{"id", id_},
            {"n", g_.order()},
            {"edges", to_json(g_).at("edges")},
            {"p5_free", p5_free_},
            {"alpha", alpha_},
            {"cop_number", cop_number_ ? Json(*cop_number_) : Json(nullptr)},
            {"mode", mode()}};
  }

  const char* mode() const { return engine_ ? "strategy" : "solver"; }

  Json state() const {
    if (timeline_.empty()) return {{"id", id_}, {"status", "awaiting_start"}, {"mode", mode()}};
    const Snapshot& s = timeline_.back();
    return {{"id", id_},           {"cops", s.cops},     {"robber", s.robber}, {"turn", s.turn},
            {"phase", s.phase},    {"annotation", s.annotation}, {"status", s.status}, {"mode", mode()}};
  }

  ServiceResponse start(const Json& body) {
    if (!timeline_.empty()) return error(409, "game already started");
    if (!body.contains("robber") || !body["robber"].is_number_integer()) return error(400, "body needs integer 'robber'");
    const int r = body["robber"].get<int>();
    if (r < 0 || r >= g_.order()) return error(400, "robber vertex out of range");
    start_ = r;
    replay();
    Json body_out = state();
    body_out["placement"] = placement();
    body_out["cop_reply"] = timeline_.back().cop_reply ? Json(*timeline_.back().cop_reply) : Json(nullptr);
    return {200, body_out};
  }

  ServiceResponse robber_move(const Json& body) {
    if (timeline_.empty()) return error(409, "game not started");
    if (!body.contains("to") || !body["to"].is_number_integer()) return error(400, "body needs integer 'to'");
    const Snapshot& now = timeline_.back();
    const int to = body["to"].get<int>();
    const VertexSet legal = closed_nbhd(g_, now.robber);
    if (!legal.contains(to)) return error(400, "illegal robber move", {{"legal", legal.to_vector()}});
    if (now.status != "playing") return error(409, "game is over", {{"state", state()}});
    moves_.push_back(to);
    advance(to);
    return {200, reply()};
  }

  ServiceResponse hint() {
    if (timeline_.empty()) return error(409, "game not started");
    if (!table_) table_ = std::make_shared<const SolveTable>(solve(g_, 2));
    const Snapshot& now = timeline_.back();
    const int ci = table_->config_index({now.cops[0], now.cops[1]});
    Json distance = Json::array();
    for (Vertex x = 0; x < g_.order(); ++x) {
      const int d = table_->distance(ci, x, Turn::kCopsToMove);
      distance.push_back(d == SolveTable::kEscape ? Json(nullptr) : Json(d));
    }
    const auto value = [&](Vertex x) {
      const int d = table_->distance(ci, x, Turn::kCopsToMove);
      return d == SolveTable::kEscape ? std::numeric_limits<int>::max() : d;
    };
    const VertexSet legal = closed_nbhd(g_, now.robber);
    int best = -1;
    for (Vertex x : legal) best = std::max(best, value(x));
    Json maximizing = Json::array();
    for (Vertex x : legal) {
      if (value(x) == best) maximizing.push_back(x);
    }
    return {200, {{"distance", distance}, {"legal", legal.to_vector()}, {"escape_maximizing", maximizing}}};
  }

  ServiceResponse transcript() const {
    if (timeline_.empty()) return error(409, "game not started");
    Json j = to_json(transcript_);
    if (engine_) j["violations"] = engine_->violations();
    j["status"] = timeline_.back().status;
    return {200, j};
  }

  ServiceResponse undo() {
    if (moves_.empty()) return error(409, "nothing to undo");
    moves_.pop_back();
    replay();
    return {200, {{"state", state()}}};
  }

 private:
  CopPair placement() const {
    if (engine_) return engine_->placement();
    const CopConfig c = best_initial(*table_);
    return {c[0], c[1]};
  }

  Json reply() const {
    const Snapshot& s = timeline_.back();
    return {{"cop_reply", s.cop_reply ? Json(*s.cop_reply) : Json(nullptr)},
            {"state", state()},
            {"captured", s.status == "captured"},
            {"phase", s.phase},
            {"annotation", s.annotation}};
  }

  // Cops' move for the current position, then capture bookkeeping.
  void cops_turn(Snapshot s) {
    const auto before = s.cops;
    ++s.turn;
    if (s.turn > default_max_turns(g_.order())) {
      s.status = "cap_failure";
      s.cop_reply.reset();
      timeline_.push_back(s);
      return;
    }
    if (engine_) {
      const CopDecision d = engine_->decide(s.cops, s.robber);
      s.cops = d.cops;
      s.phase = d.phase;
      s.annotation = d.annotation;
    } else {
      const CopConfig next = table_->optimal_cop_move(GameState{{s.cops[0], s.cops[1]}, s.robber, Turn::kCopsToMove});
      s.cops = {next[0], next[1]};
      s.phase = "solver";
      s.annotation = "optimal two-cop reply";
    }
    s.cop_reply = s.cops;
    s.status = (s.robber == s.cops[0] || s.robber == s.cops[1]) ? "captured" : "playing";
    transcript_.turns.push_back({s.turn, before, s.cops, s.robber, s.robber, s.phase, s.annotation});
    if (s.status == "captured") capture(s.turn);
    timeline_.push_back(s);
  }

  void advance(Vertex to) {
    Snapshot s = timeline_.back();
    if (engine_) engine_->observe_robber(s.cops, to);
    s.robber = to;
    transcript_.turns.back().robber_after = to;
    if (to == s.cops[0] || to == s.cops[1]) {
      capture(s.turn);
      s.status = "captured";
      s.cop_reply.reset();
      s.annotation = "robber moved onto a cop";
      timeline_.push_back(s);
      return;
    }
    cops_turn(s);
  }

  void capture(int turn) {
    transcript_.status = TranscriptStatus::kCaptured;
    transcript_.capture_turn = turn;
  }

  void replay() {
    timeline_.clear();
    if (engine_) engine_->reset();
    Snapshot s;
    s.cops = placement();
    s.robber = start_;
    s.phase = "placement";
    transcript_ = Transcript{};
    transcript_.robber_policy = "interactive";
    transcript_.initial_cops = s.cops;
    transcript_.robber_start = start_;
    if (start_ == s.cops[0] || start_ == s.cops[1]) {
      capture(0);
      s.status = "captured";
      timeline_.push_back(s);
      return;
    }
    cops_turn(s);
    for (Vertex m : moves_) advance(m);
  }

  std::mutex mutex_;
  std::string id_;
  Graph g_;
  bool p5_free_ = false;
  int alpha_ = 0;
  std::optional<int> cop_number_;
  std::shared_ptr<const SolveTable> table_;
  std::optional<StrategyEngine> engine_;
  std::chrono::steady_clock::time_point last_used_;
  Vertex start_ = 0;
  std::vector<Vertex> moves_;
  std::vector<Snapshot> timeline_;
  // Same schema as an offline run, so the CLI can replay an exported game.
  Transcript transcript_;
};

GameService::GameService(ServiceConfig config) : config_(config) {}
GameService::~GameService() = default;

std::size_t GameService::session_count() {
  std::lock_guard lock(mutex_);
  return sessions_.size();
}

void GameService::age_sessions(std::chrono::seconds by) {
  std::lock_guard lock(mutex_);
  for (auto& [id, s] : sessions_) s->age(by);
}

void GameService::expire_idle() {
  const auto cutoff = std::chrono::steady_clock::now() - config_.idle_ttl;
  for (auto it = sessions_.begin(); it != sessions_.end();) {
    if (it->second->last_used() < cutoff) it = sessions_.erase(it);
    else ++it;
  }
}

std::shared_ptr<Session> GameService::find(const std::string& id) {
  std::lock_guard lock(mutex_);
  expire_idle();
  const auto it = sessions_.find(id);
  if (it == sessions_.end()) return nullptr;
  it->second->touch();
  return it->second;
}

ServiceResponse GameService::create(const Json& body) {
  Graph g;
  try {
    if (body.contains("graph6")) {
      if (!body["graph6"].is_string()) return error(400, "'graph6' must be a string");
      g = parse_graph6(body["graph6"].get<std::string>());
    } else if (body.contains("edges")) {
      if (!body.contains("n") || !body["n"].is_number_integer()) return error(400, "edge input needs integer 'n'");
      const int n = body["n"].get<int>();
      if (n >= kGraph6MaxOrder + 1) return error(422, "unsupported graph: n >= 63");
      if (n < 0) return error(400, "n must be non-negative");
      std::vector<Edge> edges;
      for (const Json& e : body["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
          return error(400, "edges must be [u, v] integer pairs");
        }
        const int u = e[0].get<int>();
        const int v = e[1].get<int>();
        if (u < 0 || v < 0 || u >= n || v >= n) return error(400, "edge endpoint out of range");
        if (u == v) return error(400, "self-loop");
        edges.emplace_back(u, v);
      }
      g = Graph(n, edges);
    } else {
      return error(400, "body needs 'graph6' or 'n' and 'edges'");
    }
  } catch (const ParseError& e) {
    if (e.kind() == ParseErrorKind::kTooManyVertices) return error(422, std::string("unsupported graph: ") + e.what());
    return error(400, e.what());
  }
  if (!is_connected(g)) return error(422, "unsupported graph: disconnected or null");

  std::lock_guard lock(mutex_);
  expire_idle();
  if (sessions_.size() >= config_.max_sessions) return error(503, "session limit reached");
  static std::mt19937_64 salt{std::random_device{}()};
  std::ostringstream id;
  id << std::hex << next_id_++ << "-" << (salt() & 0xffffff);
  auto session = std::make_shared<Session>(id.str(), g);
  sessions_[id.str()] = session;
  return {201, session->describe()};
}

ServiceResponse GameService::handle(const std::string& method, const std::string& path, const std::string& body) {
  Json json = Json::object();
  if (!body.empty()) {
    json = Json::parse(body, nullptr, false);
    if (json.is_discarded() || !json.is_object()) return error(400, "body must be a JSON object");
  }
  if (path == "/api/session") {
    if (method != "POST") return error(405, "use POST");
    return create(json);
  }
  static const std::regex route(R"(^/api/session/([^/]+)(/(start|robber-move|hint|undo|transcript))?$)");
  std::smatch m;
  if (!std::regex_match(path, m, route)) return error(404, "no such endpoint");
  const std::string action = m[3].str();
  const auto session = find(m[1].str());
  if (!session) return error(404, "unknown session");
  std::lock_guard lock(session->mutex());
  try {
    if (action.empty()) {
      if (method != "GET") return error(405, "use GET");
      return {200, session->state()};
    }
    if (action == "hint" || action == "transcript") {
      if (method != "GET") return error(405, "use GET");
      return action == "hint" ? session->hint() : session->transcript();
    }
    if (method != "POST") return error(405, "use POST");
    if (action == "start") return session->start(json);
    if (action == "robber-move") return session->robber_move(json);
    return session->undo();
  } catch (const std::exception& e) {
    return error(500, e.what());
  }
}

void mount(GameService& service, httplib::Server& server) {
  const auto bridge = [&service](const httplib::Request& req, httplib::Response& res) {
    const ServiceResponse r = service.handle(req.method, req.path, req.body);
    res.status = r.status;
    res.set_content(r.body.dump(), "application/json");
  };
  server.Post(R"(/api/.*)", bridge);
  server.Get(R"(/api/.*)", bridge);
}

int default_port() {
  if (const char* env = std::getenv("P5COPS_PORT")) {
    const int p = std::atoi(env);
    if (p > 0 && p < 65536) return p;
  }
  return 8080;
}

bool serve(int port, const ServiceConfig& config) {
  GameService service(config);
  httplib::Server server;
  mount(service, server);
  return server.listen("127.0.0.1", port);
}

}  // namespace p5cops::harness
