#pragma once

// Constructive searches for the structural objects behind the two-cop
// strategy: domineering 3-paths, dominating pairs, retracts, P3-connected
// subgraphs with certificates, their expansion, and snares.

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "p5cops/errors.hpp"
#include "p5cops/graph.hpp"
#include "p5cops/graph_algorithms.hpp"
#include "p5cops/recognition.hpp"

namespace p5cops {

// ---------------------------------------------------------------------------
// Domineering paths, dominating pairs, retracts

/// Induced path a-b-c such that every neighbour of c is adjacent to a or b.
struct DomineeringPath {
  Vertex a = 0;
  Vertex b = 0;
  Vertex c = 0;
  friend auto operator<=>(const DomineeringPath&, const DomineeringPath&) = default;
};

inline void require_distinct(const Graph& g, Vertex a, Vertex b, Vertex c) {
  g.check(a);
  g.check(b);
  g.check(c);
  if (a == b || b == c || a == c) throw PreconditionError("vertices must be distinct");
}

inline bool is_domineering(const Graph& g, Vertex a, Vertex b, Vertex c) {
  require_distinct(g, a, b, c);
  if (!g.adjacent(a, b) || !g.adjacent(b, c) || g.adjacent(a, c)) return false;
  return (g.row(c) & ~(g.row(a) | g.row(b))) == 0;
}

inline std::optional<DomineeringPath> find_domineering_3path(const Graph& g) {
  for (Vertex a = 0; a < g.order(); ++a) {
    for (Vertex b : g.neighbours(a)) {
      const std::uint64_t cover = g.row(a) | g.row(b);
      for (Vertex c : g.neighbours(b) - closed_nbhd(g, a)) {
        if ((g.row(c) & ~cover) == 0) return DomineeringPath{a, b, c};
      }
    }
  }
  return std::nullopt;
}

/// Distinct a, b, c with ab, bc edges (ac allowed) and N(c) inside N(a) ∪ N(b).
inline std::optional<std::array<Vertex, 3>> find_weak_domineering(const Graph& g) {
  for (Vertex a = 0; a < g.order(); ++a) {
    for (Vertex b : g.neighbours(a)) {
      const std::uint64_t cover = g.row(a) | g.row(b);
      for (Vertex c : g.neighbours(b).without(a)) {
        if ((g.row(c) & ~cover) == 0) return std::array<Vertex, 3>{a, b, c};
      }
    }
  }
  return std::nullopt;
}

/// Least (u, v), u <= v, with N[u] ∪ N[v] = V.
inline std::optional<std::pair<Vertex, Vertex>> dominating_pair(const Graph& g) {
  if (!is_connected(g)) throw PreconditionError("dominating_pair: graph must be connected and non-null");
  for (Vertex u = 0; u < g.order(); ++u) {
    const VertexSet nu = closed_nbhd(g, u);
    for (Vertex v = u; v < g.order(); ++v) {
      if ((nu | closed_nbhd(g, v)) == g.vertices()) return std::pair{u, v};
    }
  }
  return std::nullopt;
}

struct Retract {
  Vertex u = 0;
  VertexSet component;
};

/// Least u in N(v) complete to some component of G[M(v)], with the first such
/// component (ordered by least vertex).
inline std::optional<Retract> find_retract(const Graph& g, Vertex v) {
  g.check(v);
  const auto comps = components(g, non_nbhd(g, v));
  for (Vertex u : g.neighbours(v)) {
    for (const VertexSet& c : comps) {
      if (c.subset_of(g.neighbours(u))) return Retract{u, c};
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// P3-connected subgraphs

/// Two edges sharing exactly one vertex whose other endpoints are nonadjacent
/// in the ambient graph, i.e. together an induced P3.
inline bool forms_induced_p3(const Graph& ambient, const Edge& e, const Edge& f) {
  if (e == f) return false;
  Vertex shared = -1;
  if (f.has(e.u)) shared = e.u;
  else if (f.has(e.v)) shared = e.v;
  if (shared < 0) return false;
  return !ambient.adjacent(e.other(shared), f.other(shared));
}

/// A subgraph of an ambient graph together with a rooted spanning tree of its
/// edges in the "forms an induced P3" relation. Edges are stored in BFS order
/// from the root (edges[0]); parent[i] < i for i > 0 and parent[0] = -1.
/// The certificate is only meaningful for the ambient graph it was built in.
struct P3Subgraph {
  VertexSet vertices;
  std::vector<Edge> edges;
  std::vector<int> parent;

  bool has_edge(const Edge& e) const { return std::find(edges.begin(), edges.end(), e) != edges.end(); }

  std::vector<Edge> sorted_edges() const {
    std::vector<Edge> out = edges;
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Neighbours of v along subgraph edges.
  VertexSet neighbours(Vertex v) const {
    VertexSet out = VertexSet::empty(vertices.universe());
    for (const Edge& e : edges) {
      if (e.has(v)) out.insert(e.other(v));
    }
    return out;
  }
};

/// Re-checks a certificate from scratch against the ambient graph.
inline bool validate_p3_certificate(const Graph& ambient, const P3Subgraph& h) {
  if (h.vertices.is_empty() || h.edges.size() != h.parent.size()) return false;
  if ((h.vertices.bits() & ~ambient.vertices().bits()) != 0) return false;
  if (h.edges.empty()) return h.vertices.size() == 1;
  VertexSet touched = VertexSet::empty(ambient.order());
  for (std::size_t i = 0; i < h.edges.size(); ++i) {
    const Edge& e = h.edges[i];
    if (!ambient.adjacent(e.u, e.v) || !h.vertices.contains(e.u) || !h.vertices.contains(e.v)) return false;
    for (std::size_t j = 0; j < i; ++j) {
      if (h.edges[j] == e) return false;
    }
    touched.insert(e.u);
    touched.insert(e.v);
    if (i == 0) {
      if (h.parent[0] != -1) return false;
      continue;
    }
    const int p = h.parent[i];
    if (p < 0 || p >= static_cast<int>(i)) return false;
    if (!forms_induced_p3(ambient, h.edges[static_cast<std::size_t>(p)], e)) return false;
  }
  return touched == h.vertices;
}

/// Certificate when (vertices, edges) is connected and its edges are linked
/// by chains of induced P3s of the ambient graph; nullopt otherwise. A single
/// vertex without edges is P3-connected. The root is the least edge.
inline std::optional<P3Subgraph> is_p3_connected(const Graph& ambient, const VertexSet& vertices,
                                                 std::vector<Edge> edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  for (const Edge& e : edges) {
    if (!ambient.adjacent(e.u, e.v) || !vertices.contains(e.u) || !vertices.contains(e.v)) {
      throw PreconditionError("is_p3_connected: edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                              " is not an ambient edge inside the vertex set");
    }
  }
  P3Subgraph h{vertices, {}, {}};
  if (edges.empty()) {
    if (vertices.size() != 1) return std::nullopt;
    return h;
  }
  VertexSet touched = VertexSet::empty(ambient.order());
  for (const Edge& e : edges) {
    touched.insert(e.u);
    touched.insert(e.v);
  }
  if (touched != vertices) return std::nullopt;

  std::vector<bool> used(edges.size(), false);
  std::vector<std::size_t> order{0};
  std::vector<int> parent{-1};
  used[0] = true;
  for (std::size_t head = 0; head < order.size(); ++head) {
    const Edge& cur = edges[order[head]];
    for (std::size_t j = 0; j < edges.size(); ++j) {
      if (!used[j] && forms_induced_p3(ambient, cur, edges[j])) {
        used[j] = true;
        order.push_back(j);
        parent.push_back(static_cast<int>(head));
      }
    }
  }
  if (order.size() != edges.size()) return std::nullopt;
  for (std::size_t idx : order) h.edges.push_back(edges[idx]);
  h.parent = std::move(parent);
  return h;
}

inline std::vector<Edge> path_edges(const std::vector<Vertex>& path) {
  std::vector<Edge> out;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) out.emplace_back(path[i], path[i + 1]);
  return out;
}

inline P3Subgraph p3_subgraph_of_path(const Graph& ambient, const std::vector<Vertex>& path) {
  auto h = is_p3_connected(ambient, VertexSet::of(ambient.order(), path), path_edges(path));
  if (!h) throw PreconditionError("path is not induced in the ambient graph");
  return *h;
}

/// Outcome of expanding a P3-connected subgraph H towards a vertex v.
struct ExpansionResult {
  enum class Kind { kExtended, kApex, kComplete };
  Kind kind = Kind::kComplete;
  /// H' for kExtended and kApex.
  std::optional<P3Subgraph> h;
  /// Vertex complete to V(H) inside H' (kApex only).
  Vertex apex = -1;
  /// The v-to-H shortest path used, v first.
  std::vector<Vertex> path;
};

inline const char* to_string(ExpansionResult::Kind k) {
  switch (k) {
    case ExpansionResult::Kind::kExtended: return "extended";
    case ExpansionResult::Kind::kApex: return "apex";
    case ExpansionResult::Kind::kComplete: return "complete";
  }
  return "?";
}

/// Grows H to reach v along a shortest path Q = v .. v_l (v_l in V(H)).
///  - l = 0: Extended(H).
///  - v_{l-1} has a non-neighbour in V(H): re-anchor Q's last vertex at the
///    least (x, w) with x w in E(H), v_{l-1} x an edge and v_{l-1} w not, and
///    return Extended(Q ∪ H).
///  - v_{l-1} complete to V(H): l = 1 gives Complete; otherwise Apex with
///    E(H') = E(Q) ∪ {v_{l-1} w : w in V(H)}.
/// Throws Finding if the constructed H' fails certification.
inline ExpansionResult p3_expand(const Graph& ambient, const P3Subgraph& h, Vertex v) {
  ambient.check(v);
  ExpansionResult out;
  out.path = shortest_path_to_set(ambient, v, h.vertices, ambient.vertices());
  if (out.path.empty()) throw PreconditionError("p3_expand: v cannot reach the subgraph (ambient disconnected)");
  const std::size_t len = out.path.size() - 1;
  if (len == 0) {
    out.kind = ExpansionResult::Kind::kExtended;
    out.h = h;
    return out;
  }
  const Vertex u = out.path[len - 1];
  const VertexSet missed = h.vertices - ambient.neighbours(u);
  if (!missed.is_empty()) {
    std::optional<std::pair<Vertex, Vertex>> anchor;
    for (const Edge& e : h.edges) {
      for (auto [x, w] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
        if (ambient.adjacent(u, x) && !ambient.adjacent(u, w) && (!anchor || std::pair{x, w} < *anchor)) {
          anchor = std::pair{x, w};
        }
      }
    }
    if (!anchor) throw Finding("p3_expand: no re-anchoring edge although H is connected");
    out.path.back() = anchor->first;
    std::vector<Edge> edges = h.edges;
    const auto q = path_edges(out.path);
    edges.insert(edges.end(), q.begin(), q.end());
    auto grown = is_p3_connected(ambient, h.vertices | VertexSet::of(ambient.order(), out.path), edges);
    if (!grown) throw Finding("p3_expand: Q ∪ H is not P3-connected");
    out.kind = ExpansionResult::Kind::kExtended;
    out.h = std::move(grown);
    return out;
  }
  if (len == 1) {
    out.kind = ExpansionResult::Kind::kComplete;
    return out;
  }
  std::vector<Edge> edges = path_edges(out.path);
  for (Vertex w : h.vertices) {
    if (w != u) edges.emplace_back(u, w);
  }
  auto grown = is_p3_connected(ambient, h.vertices | VertexSet::of(ambient.order(), out.path), edges);
  if (!grown) throw Finding("p3_expand: apex subgraph is not P3-connected");
  out.kind = ExpansionResult::Kind::kApex;
  out.h = std::move(grown);
  out.apex = u;
  return out;
}

/// Anticomplete propagation along a P3-connected subgraph: returns nullopt when
/// the premises fail (uv not an edge, u or v in V(H), u has a neighbour in
/// V(H), or no edge of H avoids N(v)); otherwise whether v is anticomplete to
/// V(H). In a P5-free ambient graph the answer is always true.
inline std::optional<bool> anticomplete_propagation(const Graph& ambient, const P3Subgraph& h, Vertex u, Vertex v) {
  if (!ambient.adjacent(u, v) || h.vertices.contains(u) || h.vertices.contains(v)) return std::nullopt;
  if (!anticomplete_to(ambient, u, h.vertices)) return std::nullopt;
  const bool some_edge_missed = std::any_of(h.edges.begin(), h.edges.end(), [&](const Edge& e) {
    return !ambient.adjacent(v, e.u) && !ambient.adjacent(v, e.v);
  });
  if (!some_edge_missed) return std::nullopt;
  return anticomplete_to(ambient, v, h.vertices);
}

// ---------------------------------------------------------------------------
// Snares

enum class SnareError {
  kBadVertices,
  kNotDomineering,
  kCopNotInNonNeighbourhood,
  kNonNeighbourhoodDisconnected,
  kRetractAtTarget,
  kDirectWin,
  kNotP5Free,
  kNoWitnessInMb,
  kCaseInvariantBroken,
  kConstructionInvalid,
};

inline const char* to_string(SnareError e) {
  switch (e) {
    case SnareError::kBadVertices: return "bad-vertices";
    case SnareError::kNotDomineering: return "not-domineering";
    case SnareError::kCopNotInNonNeighbourhood: return "cop-not-in-M(r)";
    case SnareError::kNonNeighbourhoodDisconnected: return "G[M(r)]-disconnected";
    case SnareError::kRetractAtTarget: return "retract-at-r";
    case SnareError::kDirectWin: return "direct-win-available";
    case SnareError::kNotP5Free: return "not-P5-free";
    case SnareError::kNoWitnessInMb: return "M(b)∩M(r)-empty";
    case SnareError::kCaseInvariantBroken: return "case-invariant-broken";
    case SnareError::kConstructionInvalid: return "construction-fails-H1-H5";
  }
  return "?";
}

class SnareConstructionError : public Finding {
 public:
  SnareConstructionError(SnareError reason, const std::string& what)
      : Finding(std::string("build_snare [") + to_string(reason) + "]: " + what), reason_(reason) {}
  SnareError reason() const noexcept { return reason_; }

 private:
  SnareError reason_;
};

/// P3-connected subgraph H with an entry edge d1 d2 for the cops at (c1, c2),
/// satisfying:
///   H1 H is P3-connected;   H2 V(H) ⊆ M(r);   H3 d1 d2 ∈ E(H), d1 ∈ N[c1], d2 ∈ N[c2];
///   H4 a ∈ V(H);            H5 witness_mb ∈ V(H) ∩ M(b).
struct Snare {
  P3Subgraph h;
  Vertex d1 = -1;
  Vertex d2 = -1;
  Vertex a = -1;
  Vertex b = -1;
  Vertex r = -1;
  Vertex witness_mb = -1;
  /// The construction ran with the cops renamed (c2 playing c1).
  bool cops_swapped = false;
  /// Which branch of the construction produced H, e.g. "A/extended".
  std::string construction;
};

/// First failing condition (1..5), or nullopt if the snare is valid for cops at (c1, c2).
inline std::optional<int> snare_violation(const Graph& ambient, const Snare& s, Vertex c1, Vertex c2) {
  if (!validate_p3_certificate(ambient, s.h)) return 1;
  if (!s.h.vertices.subset_of(non_nbhd(ambient, s.r))) return 2;
  if (!s.h.has_edge(Edge(s.d1, s.d2)) || s.d1 == s.d2 || !closed_nbhd(ambient, c1).contains(s.d1) ||
      !closed_nbhd(ambient, c2).contains(s.d2)) {
    return 3;
  }
  if (!s.h.vertices.contains(s.a)) return 4;
  if (!s.h.vertices.contains(s.witness_mb) || !non_nbhd(ambient, s.b).contains(s.witness_mb)) return 5;
  return std::nullopt;
}

inline bool verify_snare(const Graph& ambient, const Snare& s, Vertex c1, Vertex c2) {
  return !snare_violation(ambient, s, c1, c2).has_value();
}

/// Whether the cops at (c1, c2) can step onto {a, b} in one move: some c_i in
/// N[a] with the other in N(b).
inline bool direct_win_available(const Graph& g, Vertex a, Vertex b, Vertex c1, Vertex c2) {
  const VertexSet na = closed_nbhd(g, a);
  const VertexSet nb = g.neighbours(b);
  return (na.contains(c1) && nb.contains(c2)) || (na.contains(c2) && nb.contains(c1));
}

namespace detail {

// Orients {x, y} as (d1, d2) with d1 in N[c1] and d2 in N[c2]; when both
// orientations work cop 1 takes the smaller vertex.
inline std::optional<std::pair<Vertex, Vertex>> orient_entry(const Graph& g, Vertex x, Vertex y, Vertex c1,
                                                            Vertex c2) {
  const VertexSet n1 = closed_nbhd(g, c1);
  const VertexSet n2 = closed_nbhd(g, c2);
  const bool forward = n1.contains(x) && n2.contains(y);
  const bool backward = n1.contains(y) && n2.contains(x);
  if (forward && backward) return std::pair{std::min(x, y), std::max(x, y)};
  if (forward) return std::pair{x, y};
  if (backward) return std::pair{y, x};
  return std::nullopt;
}

// Entry edge read off a c1-c2 path of at most three edges inside H: the middle
// edge, or (c1, least H-neighbour of c1) when the path is a single vertex.
inline std::pair<Vertex, Vertex> entry_from_path(const P3Subgraph& h, const std::vector<Vertex>& path) {
  if (path.size() == 1) {
    const Vertex c = path[0];
    const VertexSet nb = h.neighbours(c);
    if (nb.is_empty()) throw SnareConstructionError(SnareError::kCaseInvariantBroken, "cop vertex isolated in H'");
    return {c, nb.first()};
  }
  const std::size_t i = (path.size() - 2) / 2;
  return {path[i], path[i + 1]};
}

}  // namespace detail

/// Builds a snare for the domineering path a-b-r with the cops at c1, c2 in
/// M(r), following the constructive case analysis:
///  (A) a cop in M(b) (renamed c1): expand the induced c1-c2 path P by a;
///      a Complete outcome gives the snare G'[{c1, a}];
///  (B) both cops in N(b) \ N[a]: take d in M(b) ∩ M(r), preferring one with
///      {c1, c2, d} not a triangle; expand P by d, then by a; if every d
///      closes a triangle, build H explicitly around a shortest a-triangle path.
/// All work happens in G' = G[M(r)]. Throws SnareConstructionError when a
/// precondition fails. Callers that have already established P5-freeness of
/// g may skip that (costly) check.
inline Snare build_snare(const Graph& g, Vertex r, Vertex a, Vertex b, Vertex c1, Vertex c2,
                         bool check_p5_free = true) {
  using Kind = ExpansionResult::Kind;
  for (Vertex x : {r, a, b, c1, c2}) {
    if (x < 0 || x >= g.order()) throw SnareConstructionError(SnareError::kBadVertices, "vertex out of range");
  }
  if (a == b || b == r || a == r || !is_domineering(g, a, b, r)) {
    throw SnareConstructionError(SnareError::kNotDomineering, "a-b-r is not a domineering path");
  }
  const VertexSet mr = non_nbhd(g, r);
  if (!mr.contains(c1) || !mr.contains(c2)) {
    throw SnareConstructionError(SnareError::kCopNotInNonNeighbourhood, "cops must both be in M(r)");
  }
  if (!is_connected(g, mr)) throw SnareConstructionError(SnareError::kNonNeighbourhoodDisconnected, "G[M(r)]");
  if (find_retract(g, r)) throw SnareConstructionError(SnareError::kRetractAtTarget, "some u in N(r) retracts");
  if (direct_win_available(g, a, b, c1, c2)) {
    throw SnareConstructionError(SnareError::kDirectWin, "cops can reach {a, b} in one move");
  }
  if (check_p5_free && !is_p5_free(g)) throw SnareConstructionError(SnareError::kNotP5Free, "ambient graph has an induced P5");

  const InducedSubgraph sub = induced(g, mr);
  const Graph& gp = sub.graph;
  const VertexSet mb = sub.down(non_nbhd(g, b));
  const VertexSet nb = sub.down(g.neighbours(b));
  const Vertex la = sub.down(a);

  Snare out;
  out.a = a;
  out.b = b;
  out.r = r;
  Vertex x1 = sub.down(c1);
  Vertex x2 = sub.down(c2);
  if (!mb.contains(x1) && mb.contains(x2)) {
    std::swap(x1, x2);
    out.cops_swapped = true;
  }

  const auto cop_path = [&] {
    auto p = shortest_path(gp, x1, x2, gp.vertices());
    if (p.empty()) throw SnareConstructionError(SnareError::kNonNeighbourhoodDisconnected, "no c1-c2 path");
    if (p.size() > 4) throw SnareConstructionError(SnareError::kNotP5Free, "induced c1-c2 path with > 3 edges");
    return p;
  };

  P3Subgraph local;
  std::pair<Vertex, Vertex> entry;
  Vertex witness = -1;

  if (mb.contains(x1)) {
    const auto path = cop_path();
    const P3Subgraph hp = p3_subgraph_of_path(gp, path);
    const ExpansionResult ex = p3_expand(gp, hp, la);
    witness = x1;
    if (ex.kind == Kind::kComplete) {
      local = *is_p3_connected(gp, VertexSet::of(gp.order(), {x1, la}), {Edge(x1, la)});
      entry = {x1, la};
      out.construction = "A/complete";
    } else if (ex.kind == Kind::kApex) {
      local = *ex.h;
      entry = {x1, ex.apex};
      out.construction = "A/apex";
    } else {
      local = *ex.h;
      entry = detail::entry_from_path(local, path);
      out.construction = "A/extended";
    }
  } else {
    if (!nb.contains(x1) || !nb.contains(x2)) {
      throw SnareConstructionError(SnareError::kCaseInvariantBroken, "cops outside M(b) must lie in N(b)");
    }
    const VertexSet na = closed_nbhd(gp, la);
    if (na.contains(x1) || na.contains(x2)) {
      throw SnareConstructionError(SnareError::kCaseInvariantBroken, "cop in N[a] in the N(b) case");
    }
    if (mb.is_empty()) throw SnareConstructionError(SnareError::kNoWitnessInMb, "M(b) ∩ M(r) is empty");
    const auto triangle = [&](Vertex d) {
      return x1 != x2 && gp.adjacent(x1, x2) && gp.adjacent(x1, d) && gp.adjacent(x2, d);
    };
    Vertex d = -1;
    for (Vertex cand : mb) {
      if (!triangle(cand)) {
        d = cand;
        break;
      }
    }
    witness = d < 0 ? mb.first() : d;

    if (d >= 0) {
      const auto path = cop_path();
      const P3Subgraph hp = p3_subgraph_of_path(gp, path);
      const ExpansionResult first = p3_expand(gp, hp, d);
      P3Subgraph star;
      std::vector<Vertex> short_path;
      if (first.kind == Kind::kComplete) {
        std::vector<Edge> e{Edge(x1, d)};
        if (x1 != x2) e.emplace_back(d, x2);
        auto h = is_p3_connected(gp, VertexSet::of(gp.order(), {x1, x2, d}), e);
        if (!h) throw SnareConstructionError(SnareError::kCaseInvariantBroken, "G'[{c1,c2,d}] not an induced P3");
        star = *h;
        short_path = x1 == x2 ? std::vector<Vertex>{x1} : std::vector<Vertex>{x1, d, x2};
      } else if (first.kind == Kind::kApex) {
        star = *first.h;
        short_path = x1 == x2 ? std::vector<Vertex>{x1} : std::vector<Vertex>{x1, first.apex, x2};
      } else {
        star = *first.h;
        short_path = path;
      }
      const ExpansionResult second = p3_expand(gp, star, la);
      if (second.kind == Kind::kComplete) {
        throw SnareConstructionError(SnareError::kCaseInvariantBroken, "a complete to H* although cops avoid N[a]");
      }
      local = *second.h;
      if (second.kind == Kind::kApex) {
        entry = {x1, second.apex};
      } else {
        entry = detail::entry_from_path(local, short_path);
      }
      out.construction = std::string("B/") + to_string(first.kind) + "/" + to_string(second.kind);
    } else {
      const VertexSet tri = VertexSet::of(gp.order(), {x1, x2, witness});
      const auto q = shortest_path_to_set(gp, la, tri, gp.vertices());
      if (q.size() < 2) throw SnareConstructionError(SnareError::kCaseInvariantBroken, "a inside the triangle");
      const std::size_t len = q.size() - 1;
      if (len == 1) {
        if (q.back() != witness) {
          throw SnareConstructionError(SnareError::kCaseInvariantBroken, "a adjacent to a cop in the triangle case");
        }
        auto h = is_p3_connected(gp, VertexSet::of(gp.order(), {la, witness, x1}), {Edge(la, witness), Edge(witness, x1)});
        if (!h) throw SnareConstructionError(SnareError::kCaseInvariantBroken, "a-d-c1 is not an induced P3");
        local = *h;
        entry = {witness, x1};
        out.construction = "B/triangle/l=1";
      } else {
        const Vertex last = q[len];
        const Vertex prev = q[len - 1];
        std::vector<Edge> e = path_edges(q);
        for (Vertex w : tri) {
          if (w == last) continue;
          if (gp.adjacent(prev, w)) e.emplace_back(prev, w);
          else e.emplace_back(last, w);
        }
        auto h = is_p3_connected(gp, tri | VertexSet::of(gp.order(), q), e);
        if (!h) throw SnareConstructionError(SnareError::kConstructionInvalid, "triangle-case H not P3-connected");
        local = *h;
        std::optional<Edge> inside;
        for (const Edge& ed : local.sorted_edges()) {
          if (tri.contains(ed.u) && tri.contains(ed.v)) {
            inside = ed;
            break;
          }
        }
        entry = inside ? std::pair{inside->u, inside->v} : std::pair{x1, prev};
        out.construction = "B/triangle/l>=2";
      }
    }
  }

  // Lift to ambient ids.
  out.h.vertices = sub.up(local.vertices, g.order());
  for (const Edge& e : local.edges) out.h.edges.emplace_back(sub.up(e.u), sub.up(e.v));
  out.h.parent = local.parent;
  out.witness_mb = sub.up(witness);
  const auto oriented = detail::orient_entry(g, sub.up(entry.first), sub.up(entry.second), c1, c2);
  if (!oriented) throw SnareConstructionError(SnareError::kConstructionInvalid, "entry edge misses the cops");
  out.d1 = oriented->first;
  out.d2 = oriented->second;
  if (const auto bad = snare_violation(g, out, c1, c2)) {
    throw SnareConstructionError(SnareError::kConstructionInvalid,
                                 "constructed subgraph fails H" + std::to_string(*bad) + " (" + out.construction + ")");
  }
  return out;
}

/// Edge sequence e0 = d1 d2, ..., ek through the certificate tree, ending at
/// the nearest edge incident with a; no earlier edge touches a.
inline std::vector<Edge> snare_walk(const Snare& s) {
  const auto& edges = s.h.edges;
  const auto start_it = std::find(edges.begin(), edges.end(), Edge(s.d1, s.d2));
  if (start_it == edges.end()) throw PreconditionError("snare_walk: entry edge not in snare");
  const auto count = edges.size();
  std::vector<std::vector<std::size_t>> tree(count);
  for (std::size_t i = 1; i < count; ++i) {
    const auto p = static_cast<std::size_t>(s.h.parent[i]);
    tree[i].push_back(p);
    tree[p].push_back(i);
  }
  for (auto& adj : tree) std::sort(adj.begin(), adj.end());
  const auto start = static_cast<std::size_t>(start_it - edges.begin());
  std::vector<int> from(count, -2);
  std::vector<std::size_t> queue{start};
  from[start] = -1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::size_t cur = queue[head];
    if (edges[cur].has(s.a)) {
      std::vector<Edge> walk;
      for (int at = static_cast<int>(cur); at >= 0; at = from[static_cast<std::size_t>(at)]) {
        walk.push_back(edges[static_cast<std::size_t>(at)]);
      }
      std::reverse(walk.begin(), walk.end());
      return walk;
    }
    for (std::size_t nxt : tree[cur]) {
      if (from[nxt] == -2) {
        from[nxt] = static_cast<int>(cur);
        queue.push_back(nxt);
      }
    }
  }
  throw PreconditionError("snare_walk: no edge incident with a");
}

}  // namespace p5cops
