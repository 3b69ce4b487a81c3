#pragma once

// JSON forms of plans, transcripts and witnesses. Field names are
// lower_snake_case; vertices are integers.

#include <json.hpp>

#include "p5cops/graph.hpp"
#include "p5cops/strategy.hpp"

namespace p5cops::harness {

using Json = nlohmann::ordered_json;

inline Json to_json(const VertexSet& s) { return s.to_vector(); }

inline Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"n", g.order()}, {"edges", edges}};
}

inline Json to_json(const PlanLevel& lv) {
  Json j{{"kind", to_string(lv.kind)}, {"vertices", to_json(lv.vertices)}};
  switch (lv.kind) {
    case PlanKind::kBase:
      j["u"] = lv.u;
      j["v"] = lv.v;
      break;
    case PlanKind::kRetract:
      j["r"] = lv.r;
      j["u"] = lv.u;
      j["component"] = to_json(lv.component);
      j["a"] = lv.a;
      j["b"] = lv.b;
      break;
    case PlanKind::kDomineer:
      j["a"] = lv.a;
      j["b"] = lv.b;
      j["r"] = lv.r;
      break;
  }
  return j;
}

inline Json to_json(const StrategyPlan& plan) {
  Json levels = Json::array();
  for (const PlanLevel& lv : plan.levels) levels.push_back(to_json(lv));
  return {{"depth", plan.depth()}, {"capture_bound", capture_bound(plan)}, {"levels", levels}};
}

inline const char* to_string(TranscriptStatus s) {
  return s == TranscriptStatus::kCaptured ? "captured" : "cap_failure";
}

inline Json to_json(const TurnRecord& t) {
  return {{"turn", t.turn},
          {"cops_before", t.cops_before},
          {"cops_after", t.cops_after},
          {"robber_before", t.robber_before},
          {"robber_after", t.robber_after},
          {"phase", t.phase},
          {"annotation", t.annotation}};
}

/// Schema: {robber_policy, initial_cops, robber_start, turns[], phases[],
/// status, capture_turn, violations[]}.
inline Json to_json(const Transcript& t) {
  Json turns = Json::array();
  for (const TurnRecord& r : t.turns) turns.push_back(to_json(r));
  return {{"robber_policy", t.robber_policy},
          {"initial_cops", t.initial_cops},
          {"robber_start", t.robber_start},
          {"turns", turns},
          {"phases", t.phases()},
          {"status", to_string(t.status)},
          {"capture_turn", t.capture_turn},
          {"violations", t.violations}};
}

/// Robber start and moves recorded in a transcript, for replay.
inline std::pair<Vertex, std::vector<Vertex>> robber_line(const Json& transcript) {
  const Vertex start = transcript.at("robber_start").get<Vertex>();
  std::vector<Vertex> moves;
  for (const Json& t : transcript.at("turns")) {
    if (t.at("robber_after") != t.at("robber_before") || &t != &transcript.at("turns").back()) {
      moves.push_back(t.at("robber_after").get<Vertex>());
    }
  }
  return {start, moves};
}

}  // namespace p5cops::harness
