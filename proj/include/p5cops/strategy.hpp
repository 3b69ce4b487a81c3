#pragma once

// Two-cop strategy for connected P5-free graphs, synthesised as a chain of
// levels (Base | Retract | Domineer) and executed by a level controller.
//
// Every level plays from the start of the game on its own induced subgraph.
// A level either delegates to the next level (feeding it a projected robber:
// the shadow for Retract, the robber itself for Domineer while it avoids r)
// or has taken control for good. Only the outermost non-delegating level
// moves the cops.

#include <array>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "p5cops/errors.hpp"
#include "p5cops/graph.hpp"
#include "p5cops/graph_algorithms.hpp"
#include "p5cops/recognition.hpp"
#include "p5cops/solver.hpp"
#include "p5cops/structure.hpp"

namespace p5cops {

using CopPair = std::array<Vertex, 2>;

enum class PlanKind { kBase, kRetract, kDomineer };

inline const char* to_string(PlanKind k) {
  switch (k) {
    case PlanKind::kBase: return "base";
    case PlanKind::kRetract: return "retract";
    case PlanKind::kDomineer: return "domineer";
  }
  return "?";
}

/// One level of a plan, in the ids of the top-level graph.
///   Base:     N[u] ∪ N[v] ⊇ vertices.
///   Retract:  u ∈ N(r) complete to `component`, a component of the level's M(r);
///             the next level lives on vertices ∖ component.
///   Domineer: a-b-r domineering and no retract at r; the next level lives on
///             vertices ∖ {r}.
struct PlanLevel {
  PlanKind kind = PlanKind::kBase;
  VertexSet vertices;
  Vertex u = -1;
  Vertex v = -1;
  Vertex a = -1;
  Vertex b = -1;
  Vertex r = -1;
  VertexSet component;

  std::string describe() const {
    switch (kind) {
      case PlanKind::kBase: return "base(u=" + std::to_string(u) + ",v=" + std::to_string(v) + ")";
      case PlanKind::kRetract:
        return "retract(r=" + std::to_string(r) + ",u=" + std::to_string(u) + ",c=" + component.to_string() + ")";
      case PlanKind::kDomineer:
        return "domineer(a=" + std::to_string(a) + ",b=" + std::to_string(b) + ",r=" + std::to_string(r) + ")";
    }
    return "?";
  }
};

/// A recursive plan flattened into its chain: levels[0] is the whole graph,
/// levels[i + 1] is the sub-plan of levels[i], the last level is a Base.
struct StrategyPlan {
  Graph graph;
  std::vector<PlanLevel> levels;

  int depth() const { return static_cast<int>(levels.size()); }
  const PlanLevel& base() const { return levels.back(); }
};

struct SynthesisOptions {
  /// Domineering path to use at the top level instead of the least one; also
  /// forces the top level past the α <= 2 base case.
  std::optional<DomineeringPath> top_path;
};

/// α(L) <= 2 gives Base(dominating pair); otherwise take the least
/// domineering path a-b-r (one must exist) and emit Retract at r when some
/// neighbour of r is complete to a component of M(r), else Domineer.
inline StrategyPlan synthesize(const Graph& g, const SynthesisOptions& options = {}) {
  if (!is_connected(g)) throw PreconditionError("synthesize: graph must be connected and non-null");
  if (const auto p5 = find_induced_p5(g)) {
    std::string w;
    for (Vertex x : *p5) w += (w.empty() ? "" : "-") + std::to_string(x);
    throw PreconditionError("synthesize: graph is not P5-free (induced P5 " + w + ")");
  }
  StrategyPlan plan{g, {}};
  VertexSet current = g.vertices();
  for (int level = 0;; ++level) {
    const InducedSubgraph sub = induced(g, current);
    const Graph& l = sub.graph;
    const bool forced = level == 0 && options.top_path.has_value();
    PlanLevel out;
    out.vertices = current;
    if (!forced && !has_independent_set(l, 3)) {
      const auto pair = dominating_pair(l);
      if (!pair) throw Finding("synthesize: no dominating pair although α <= 2");
      out.kind = PlanKind::kBase;
      out.u = sub.up(pair->first);
      out.v = sub.up(pair->second);
      plan.levels.push_back(out);
      return plan;
    }
    DomineeringPath path;
    if (forced) {
      path = *options.top_path;
      if (!is_domineering(g, path.a, path.b, path.c)) {
        throw PreconditionError("synthesize: forced path is not domineering");
      }
      path = {sub.down(path.a), sub.down(path.b), sub.down(path.c)};
    } else {
      const auto found = find_domineering_3path(l);
      if (!found) throw Finding("synthesize: no domineering 3-path in a connected P5-free graph with α >= 3");
      path = *found;
    }
    out.a = sub.up(path.a);
    out.b = sub.up(path.b);
    out.r = sub.up(path.c);
    if (const auto ret = find_retract(l, path.c)) {
      out.kind = PlanKind::kRetract;
      out.u = sub.up(ret->u);
      out.component = sub.up(ret->component, g.order());
      current = current - out.component;
    } else {
      out.kind = PlanKind::kDomineer;
      current = current.without(out.r);
    }
    plan.levels.push_back(out);
  }
}

/// Empty when the plan is consistent with g; otherwise the first problem found.
inline std::optional<std::string> plan_problem(const Graph& g, const StrategyPlan& plan) {
  if (!(plan.graph == g)) return "plan was synthesised for a different graph";
  if (plan.levels.empty()) return "plan has no levels";
  if (plan.levels.front().vertices != g.vertices()) return "top level must cover the graph";
  for (std::size_t i = 0; i < plan.levels.size(); ++i) {
    const PlanLevel& lv = plan.levels[i];
    const std::string at = "level " + std::to_string(i) + ": ";
    if (!is_connected(g, lv.vertices)) return at + "level graph disconnected";
    const bool last = i + 1 == plan.levels.size();
    if ((lv.kind == PlanKind::kBase) != last) return at + "Base must be exactly the innermost level";
    const auto in_level = [&](Vertex x) { return lv.vertices.contains(x); };
    if (lv.kind == PlanKind::kBase) {
      if (!in_level(lv.u) || !in_level(lv.v)) return at + "base vertices outside the level";
      const VertexSet dom = (closed_nbhd(g, lv.u) | closed_nbhd(g, lv.v)) & lv.vertices;
      if (dom != lv.vertices) return at + "base pair does not dominate";
      continue;
    }
    if (!in_level(lv.a) || !in_level(lv.b) || !in_level(lv.r)) return at + "path outside the level";
    const InducedSubgraph sub = induced(g, lv.vertices);
    if (!is_domineering(sub.graph, sub.down(lv.a), sub.down(lv.b), sub.down(lv.r))) {
      return at + "a-b-r is not domineering";
    }
    const VertexSet next = plan.levels[i + 1].vertices;
    const VertexSet mr = lv.vertices - closed_nbhd(g, lv.r);
    if (lv.kind == PlanKind::kRetract) {
      if (!g.adjacent(lv.u, lv.r) || !in_level(lv.u)) return at + "u not a neighbour of r";
      if (!lv.component.subset_of(mr) || lv.component.is_empty()) return at + "component not inside M(r)";
      const auto comps = components(g, mr);
      if (std::find(comps.begin(), comps.end(), lv.component) == comps.end()) return at + "not a component of M(r)";
      if (!lv.component.subset_of(g.neighbours(lv.u))) return at + "u not complete to the component";
      if (next != lv.vertices - lv.component) return at + "sub-plan must live on the level minus the component";
    } else {
      if (find_retract(sub.graph, sub.down(lv.r))) return at + "a retract exists at r";
      if (next != lv.vertices.without(lv.r)) return at + "sub-plan must live on the level minus r";
    }
  }
  return std::nullopt;
}

/// Static capture envelope: Base 2; Retract sub + |level| + 2; Domineer sub + |E(level)| + 4.
inline int capture_bound(const StrategyPlan& plan) {
  int bound = 0;
  for (auto it = plan.levels.rbegin(); it != plan.levels.rend(); ++it) {
    switch (it->kind) {
      case PlanKind::kBase: bound = 2; break;
      case PlanKind::kRetract: bound += it->vertices.size() + 2; break;
      case PlanKind::kDomineer: bound += induced(plan.graph, it->vertices).graph.edge_count() + 4; break;
    }
  }
  return bound;
}

inline int default_max_turns(int n) { return 20 * n * n + 100; }

// ---------------------------------------------------------------------------
// Engine

/// Cop reply chosen by the engine for one turn.
struct CopDecision {
  CopPair cops{};
  std::string phase;
  std::string annotation;
  /// Level that moved the cops.
  int level = 0;
};

class StrategyEngine {
 public:
  explicit StrategyEngine(StrategyPlan plan) : plan_(std::move(plan)) {
    if (const auto problem = plan_problem(plan_.graph, plan_)) throw PreconditionError("inconsistent plan: " + *problem);
    for (const PlanLevel& lv : plan_.levels) {
      Runtime rt;
      rt.sub = induced(plan_.graph, lv.vertices);
      runtime_.push_back(std::move(rt));
    }
    reset();
  }

  const StrategyPlan& plan() const { return plan_; }
  const Graph& graph() const { return plan_.graph; }

  CopPair placement() const { return {plan_.base().u, plan_.base().v}; }

  void reset() {
    for (Runtime& rt : runtime_) {
      rt.mode = Mode::kDelegate;
      rt.holder = -1;
      rt.snare.reset();
      rt.walk.clear();
      rt.step = 0;
      rt.last_view.reset();
      rt.ledger_open = false;
    }
    violations_.clear();
  }

  const std::vector<std::string>& violations() const { return violations_; }

  /// The cops' move with the robber on `robber`. Greedy capture at the level
  /// in control takes priority over its phase move.
  CopDecision decide(const CopPair& cops, Vertex robber) {
    const Graph& g = plan_.graph;
    g.check(robber);
    std::string stack;
    std::string delegating_label = "base";
    Vertex view = robber;
    for (std::size_t i = 0; i < plan_.levels.size(); ++i) {
      const PlanLevel& lv = plan_.levels[i];
      Runtime& rt = runtime_[i];
      if (!stack.empty()) stack += " > ";
      stack += "L" + std::to_string(i) + " " + lv.describe();

      for (int j = 0; j < 2; ++j) {
        if (closed_nbhd(g, cops[static_cast<std::size_t>(j)]).contains(view)) {
          CopPair next = cops;
          next[static_cast<std::size_t>(j)] = view;
          const bool real = view == robber;
          return finish(next, real ? "greedy-capture" : (i == 0 ? "base" : delegating_label),
                        stack + " greedy cop" + std::to_string(j) + "->" + std::to_string(view), static_cast<int>(i));
        }
      }

      switch (lv.kind) {
        case PlanKind::kBase: {
          if ((cops[0] == lv.u && cops[1] == lv.v) || (cops[0] == lv.v && cops[1] == lv.u)) {
            return finish(cops, i == 0 ? "base" : delegating_label, stack + " hold", static_cast<int>(i));
          }
          // Off the dominating pair (only after a forced placement): walk
          // there under the cheaper assignment, then hold.
          const auto dist = [&](Vertex x, Vertex y) { return static_cast<int>(shortest_path(g, x, y, g.vertices()).size()); };
          const bool swap = dist(cops[0], lv.v) + dist(cops[1], lv.u) < dist(cops[0], lv.u) + dist(cops[1], lv.v);
          const auto step = [&](Vertex from, Vertex to) {
            const auto p = shortest_path(g, from, to, g.vertices());
            return p.size() > 1 ? p[1] : from;
          };
          const CopPair next{step(cops[0], swap ? lv.v : lv.u), step(cops[1], swap ? lv.u : lv.v)};
          return finish(next, i == 0 ? "base" : delegating_label, stack + " approach", static_cast<int>(i));
        }

        case PlanKind::kRetract: {
          if (rt.mode == Mode::kDelegate && lv.component.contains(view) && (cops[0] == lv.r || cops[1] == lv.r)) {
            rt.mode = Mode::kEndgame;
            rt.holder = cops[0] == lv.r ? 0 : 1;
          }
          if (rt.mode == Mode::kEndgame) return retract_endgame(i, cops, stack);
          const Vertex shadow = lv.component.contains(view) ? lv.r : view;
          check_step(rt, shadow, lv.vertices - lv.component, "shadow", i);
          view = shadow;
          delegating_label = "shadow";
          continue;
        }

        case PlanKind::kDomineer: {
          if (rt.mode == Mode::kDelegate) {
            if (view != lv.r) {
              check_step(rt, view, lv.vertices.without(lv.r), "forcing", i);
              delegating_label = "forcing";
              continue;
            }
            return domineer_takeover(i, cops, stack);
          }
          return domineer_continue(i, cops, stack);
        }
      }
    }
    throw Finding("strategy engine fell through every level");
  }

  /// Records a robber move for the anticompleteness ledger of a level in its snare phase.
  void observe_robber(const CopPair& cops, Vertex to) {
    const Graph& g = plan_.graph;
    Vertex view = to;
    for (std::size_t i = 0; i < plan_.levels.size(); ++i) {
      const PlanLevel& lv = plan_.levels[i];
      Runtime& rt = runtime_[i];
      if (lv.kind == PlanKind::kRetract && rt.mode == Mode::kDelegate) {
        if (lv.component.contains(view)) view = lv.r;
        continue;
      }
      if (lv.kind == PlanKind::kDomineer && rt.mode == Mode::kDelegate) continue;
      if (lv.kind != PlanKind::kDomineer || !rt.ledger_open || !rt.snare) return;
      if ((closed_nbhd(g, cops[0]) | closed_nbhd(g, cops[1])).contains(view)) return;
      if (!g.adjacent(view, lv.b) && view != lv.b) {
        rt.ledger_open = false;
        return;
      }
      const VertexSet h = rt.sub.up(rt.snare->h.vertices, g.order());
      if (h.contains(view) || g.neighbours(view).intersects(h)) {
        violations_.push_back("level " + std::to_string(i) + ": robber at " + std::to_string(view) +
                              " in N[b] touches the snare before entering M(b)");
      }
      return;
    }
  }

 private:
  enum class Mode { kDelegate, kEndgame, kSnare, kHold };

  struct Runtime {
    InducedSubgraph sub;
    Mode mode = Mode::kDelegate;
    int holder = -1;
    std::optional<Snare> snare;
    std::vector<Edge> walk;
    std::size_t step = 0;
    std::optional<Vertex> last_view;
    bool ledger_open = false;
  };

  CopDecision finish(const CopPair& cops, std::string phase, std::string annotation, int level) const {
    return CopDecision{cops, std::move(phase), std::move(annotation), level};
  }

  void check_step(Runtime& rt, Vertex now, const VertexSet& within, const char* what, std::size_t level) {
    if (rt.last_view && *rt.last_view != now) {
      const bool ok = within.contains(now) && within.contains(*rt.last_view) && plan_.graph.adjacent(*rt.last_view, now);
      if (!ok) {
        violations_.push_back("level " + std::to_string(level) + ": " + what + " jumped " +
                              std::to_string(*rt.last_view) + "->" + std::to_string(now));
      }
    } else if (!within.contains(now)) {
      violations_.push_back("level " + std::to_string(level) + ": " + what + " outside its graph at " +
                            std::to_string(now));
    }
    rt.last_view = now;
  }

  CopDecision retract_endgame(std::size_t i, const CopPair& cops, const std::string& stack) {
    const PlanLevel& lv = plan_.levels[i];
    const Runtime& rt = runtime_[i];
    const auto walker = static_cast<std::size_t>(1 - rt.holder);
    CopPair next = cops;
    if (cops[walker] != lv.u) {
      const auto path = shortest_path(plan_.graph, cops[walker], lv.u, lv.vertices - lv.component);
      if (path.size() < 2) throw Finding("retract endgame: no path to u outside the component");
      next[walker] = path[1];
    }
    return finish(next, "endgame",
                  stack + " cop" + std::to_string(rt.holder) + " holds r, cop" + std::to_string(walker) + " -> u",
                  static_cast<int>(i));
  }

  CopDecision domineer_takeover(std::size_t i, const CopPair& cops, const std::string& stack) {
    const PlanLevel& lv = plan_.levels[i];
    Runtime& rt = runtime_[i];
    const Graph& g = plan_.graph;
    const VertexSet na = closed_nbhd(g, lv.a);
    const VertexSet nb = g.neighbours(lv.b);
    const bool first = na.contains(cops[0]) && nb.contains(cops[1]);
    const bool second = na.contains(cops[1]) && nb.contains(cops[0]);
    if (first || second) {
      CopPair next = first ? CopPair{lv.a, lv.b} : CopPair{lv.b, lv.a};
      if (first && second) next = {std::min(lv.a, lv.b), std::max(lv.a, lv.b)};
      rt.mode = Mode::kHold;
      return finish(next, "direct-win", stack + " robber on r, cops step onto {a,b}", static_cast<int>(i));
    }
    const Snare local = build_snare(rt.sub.graph, rt.sub.down(lv.r), rt.sub.down(lv.a), rt.sub.down(lv.b),
                                    rt.sub.down(cops[0]), rt.sub.down(cops[1]), false);
    rt.snare = local;
    rt.walk = snare_walk(local);
    rt.step = 0;
    rt.mode = Mode::kSnare;
    rt.ledger_open = true;
    const CopPair next{rt.sub.up(local.d1), rt.sub.up(local.d2)};
    for (std::size_t j = 0; j < 2; ++j) {
      if (!closed_nbhd(g, cops[j]).contains(next[j])) violations_.push_back("snare entry is not a legal cop move");
    }
    return finish(next, "snare-entry",
                  stack + " snare " + rt.sub.up(local.h.vertices, g.order()).to_string() + " [" + local.construction +
                      "] walk length " + std::to_string(rt.walk.size() - 1),
                  static_cast<int>(i));
  }

  CopDecision domineer_continue(std::size_t i, const CopPair& cops, const std::string& stack) {
    const PlanLevel& lv = plan_.levels[i];
    Runtime& rt = runtime_[i];
    const Graph& lg = rt.sub.graph;
    if (rt.mode == Mode::kHold) return finish(cops, "endgame", stack + " hold {a,b}", static_cast<int>(i));

    const CopPair local{rt.sub.down(cops[0]), rt.sub.down(cops[1])};
    const Edge here = rt.walk[rt.step];
    if (Edge(local[0], local[1]) != here || local[0] == local[1]) {
      violations_.push_back("level " + std::to_string(i) + ": cops left the snare walk");
    }
    CopPair next = local;
    if (rt.step + 1 < rt.walk.size()) {
      const Edge to = rt.walk[rt.step + 1];
      if (!forms_induced_p3(lg, here, to)) {
        violations_.push_back("level " + std::to_string(i) + ": walk step is not an induced P3");
      }
      const Vertex y = to.has(here.u) ? here.u : here.v;
      const Vertex x = here.other(y);
      const Vertex z = to.other(y);
      for (std::size_t j = 0; j < 2; ++j) {
        if (local[j] == x) next[j] = y;
        else if (local[j] == y) next[j] = z;
      }
      ++rt.step;
      return finish({rt.sub.up(next[0]), rt.sub.up(next[1])}, "snare-walk",
                    stack + " pivot " + std::to_string(rt.sub.up(x)) + "," + std::to_string(rt.sub.up(y)) + " -> " +
                        std::to_string(rt.sub.up(y)) + "," + std::to_string(rt.sub.up(z)),
                    static_cast<int>(i));
    }
    const Vertex la = rt.sub.down(lv.a);
    const Vertex lb = rt.sub.down(lv.b);
    for (std::size_t j = 0; j < 2; ++j) next[j] = local[j] == la ? lb : la;
    if (next[0] == next[1]) violations_.push_back("level " + std::to_string(i) + ": final pivot collapsed the cops");
    rt.mode = Mode::kHold;
    return finish({rt.sub.up(next[0]), rt.sub.up(next[1])}, "snare-walk", stack + " pivot onto {a,b}",
                  static_cast<int>(i));
  }

  StrategyPlan plan_;
  std::vector<Runtime> runtime_;
  std::vector<std::string> violations_;
};

// ---------------------------------------------------------------------------
// Robber policies

struct TurnRecord {
  int turn = 0;
  CopPair cops_before{};
  CopPair cops_after{};
  Vertex robber_before = 0;
  Vertex robber_after = 0;
  std::string phase;
  std::string annotation;
};

enum class TranscriptStatus { kCaptured, kCapFailure };

struct Transcript {
  CopPair initial_cops{};
  Vertex robber_start = 0;
  std::vector<TurnRecord> turns;
  TranscriptStatus status = TranscriptStatus::kCapFailure;
  /// Cop turn on which the robber was caught (0 = started on a cop).
  int capture_turn = -1;
  std::string robber_policy;
  std::vector<std::string> violations;

  bool captured() const { return status == TranscriptStatus::kCaptured; }
  std::vector<std::string> phases() const {
    std::vector<std::string> out;
    for (const TurnRecord& t : turns) {
      if (out.empty() || out.back() != t.phase) out.push_back(t.phase);
    }
    return out;
  }
};

class RobberPolicy {
 public:
  virtual ~RobberPolicy() = default;
  virtual std::string name() const = 0;
  virtual Vertex start(const Graph& g, const CopPair& cops) = 0;
  /// Must return a vertex of N[robber].
  virtual Vertex move(const Graph& g, const CopPair& cops, Vertex robber, const Transcript& history) = 0;
};

class OptimalRobber : public RobberPolicy {
 public:
  explicit OptimalRobber(std::shared_ptr<const SolveTable> table) : table_(std::move(table)) {
    if (!table_ || table_->cops() != 2) throw PreconditionError("optimal robber needs a two-cop table");
  }
  std::string name() const override { return "optimal"; }
  Vertex start(const Graph&, const CopPair& cops) override { return best_robber_start(*table_, {cops[0], cops[1]}); }
  Vertex move(const Graph&, const CopPair& cops, Vertex robber, const Transcript&) override {
    return optimal_robber(*table_, GameState{{cops[0], cops[1]}, robber, Turn::kRobberToMove});
  }

 private:
  std::shared_ptr<const SolveTable> table_;
};

/// Uniform over N[robber]; the generator is reseeded at every start so a
/// policy object replays identically.
class RandomRobber : public RobberPolicy {
 public:
  explicit RandomRobber(std::uint64_t seed) : seed_(seed), rng_(seed) {}
  std::string name() const override { return "random(" + std::to_string(seed_) + ")"; }
  Vertex start(const Graph& g, const CopPair&) override {
    rng_.seed(seed_);
    return pick(g.vertices());
  }
  Vertex move(const Graph& g, const CopPair&, Vertex robber, const Transcript&) override {
    return pick(closed_nbhd(g, robber));
  }

 private:
  Vertex pick(const VertexSet& s) {
    const auto options = s.to_vector();
    return options[static_cast<std::size_t>(rng_() % options.size())];
  }
  std::uint64_t seed_;
  std::mt19937_64 rng_;
};

/// Maximises the distance to the nearest cop; least vertex among ties.
class GreedyFarRobber : public RobberPolicy {
 public:
  std::string name() const override { return "greedy"; }
  Vertex start(const Graph& g, const CopPair& cops) override { return best_of(g, cops, g.vertices()); }
  Vertex move(const Graph& g, const CopPair& cops, Vertex robber, const Transcript&) override {
    return best_of(g, cops, closed_nbhd(g, robber));
  }

 private:
  static Vertex best_of(const Graph& g, const CopPair& cops, const VertexSet& options) {
    const auto d0 = bfs_distances(g, cops[0]);
    const auto d1 = bfs_distances(g, cops[1]);
    Vertex best = -1;
    int best_d = -1;
    for (Vertex x : options) {
      const int d = std::min(d0[static_cast<std::size_t>(x)], d1[static_cast<std::size_t>(x)]);
      if (d > best_d) {
        best = x;
        best_d = d;
      }
    }
    return best;
  }
};

/// Starts on the least vertex free of cops and never moves.
class StationaryRobber : public RobberPolicy {
 public:
  std::string name() const override { return "stationary"; }
  Vertex start(const Graph& g, const CopPair& cops) override {
    for (Vertex v = 0; v < g.order(); ++v) {
      if (v != cops[0] && v != cops[1]) return v;
    }
    return 0;
  }
  Vertex move(const Graph&, const CopPair&, Vertex robber, const Transcript&) override { return robber; }
};

/// Plays back a fixed start and move list, then stays put.
class ScriptedRobber : public RobberPolicy {
 public:
  ScriptedRobber(Vertex start, std::vector<Vertex> moves) : start_(start), moves_(std::move(moves)) {}
  std::string name() const override { return "scripted"; }
  Vertex start(const Graph&, const CopPair&) override {
    next_ = 0;
    return start_;
  }
  Vertex move(const Graph&, const CopPair&, Vertex robber, const Transcript&) override {
    return next_ < moves_.size() ? moves_[next_++] : robber;
  }

 private:
  Vertex start_;
  std::vector<Vertex> moves_;
  std::size_t next_ = 0;
};

// ---------------------------------------------------------------------------
// Execution

struct ExecuteOptions {
  /// 0 selects default_max_turns(n).
  int max_turns = 0;
  /// Overrides the Base placement (for tests of forced plans).
  std::optional<CopPair> placement;
};

/// Plays the engine against a robber policy. Cops move first after the
/// robber chooses its start; capture is checked after each side's move.
inline Transcript execute(StrategyEngine& engine, RobberPolicy& robber, const ExecuteOptions& options = {}) {
  const Graph& g = engine.graph();
  engine.reset();
  Transcript t;
  t.robber_policy = robber.name();
  const int max_turns = options.max_turns > 0 ? options.max_turns : default_max_turns(g.order());
  CopPair cops = options.placement.value_or(engine.placement());
  g.check(cops[0]);
  g.check(cops[1]);
  t.initial_cops = cops;
  Vertex rob = robber.start(g, cops);
  g.check(rob);
  t.robber_start = rob;
  if (rob == cops[0] || rob == cops[1]) {
    t.status = TranscriptStatus::kCaptured;
    t.capture_turn = 0;
    return t;
  }
  for (int turn = 1; turn <= max_turns; ++turn) {
    const CopDecision d = engine.decide(cops, rob);
    for (std::size_t j = 0; j < 2; ++j) {
      if (!closed_nbhd(g, cops[j]).contains(d.cops[j])) {
        t.violations.push_back("turn " + std::to_string(turn) + ": illegal cop move");
      }
    }
    TurnRecord rec{turn, cops, d.cops, rob, rob, d.phase, d.annotation};
    cops = d.cops;
    if (rob == cops[0] || rob == cops[1]) {
      t.turns.push_back(rec);
      t.status = TranscriptStatus::kCaptured;
      t.capture_turn = turn;
      break;
    }
    const Vertex next = robber.move(g, cops, rob, t);
    if (!closed_nbhd(g, rob).contains(next)) {
      throw PreconditionError("robber policy " + robber.name() + " made an illegal move " + std::to_string(rob) +
                              "->" + std::to_string(next));
    }
    engine.observe_robber(cops, next);
    rob = next;
    rec.robber_after = rob;
    t.turns.push_back(rec);
    if (rob == cops[0] || rob == cops[1]) {
      t.status = TranscriptStatus::kCaptured;
      t.capture_turn = turn;
      break;
    }
  }
  const auto& v = engine.violations();
  t.violations.insert(t.violations.end(), v.begin(), v.end());
  return t;
}

inline Transcript execute(const StrategyPlan& plan, RobberPolicy& robber, const ExecuteOptions& options = {}) {
  StrategyEngine engine(plan);
  return execute(engine, robber, options);
}

}  // namespace p5cops
