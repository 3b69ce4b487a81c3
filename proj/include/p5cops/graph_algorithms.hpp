#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "p5cops/errors.hpp"
#include "p5cops/graph.hpp"

namespace p5cops {

inline Graph complement(const Graph& g) {
  std::array<std::uint64_t, kMaxVertices> rows{};
  const std::uint64_t all = g.vertices().bits();
  for (int v = 0; v < g.order(); ++v) rows[static_cast<std::size_t>(v)] = all & ~g.row(v);
  return Graph::from_rows(g.order(), rows);
}

/// N[v].
inline VertexSet closed_nbhd(const Graph& g, Vertex v) { return g.neighbours(v).with(v); }

/// M(v) = V \ N[v].
inline VertexSet non_nbhd(const Graph& g, Vertex v) { return g.vertices() - closed_nbhd(g, v); }

/// Union of N[v] over v in s.
inline VertexSet closed_nbhd(const Graph& g, const VertexSet& s) {
  VertexSet out = s;
  for (Vertex v : s) out |= g.neighbours(v);
  return out;
}

inline bool complete_to(const Graph& g, Vertex v, const VertexSet& s) {
  return (s.without(v) - g.neighbours(v)).is_empty();
}

inline bool anticomplete_to(const Graph& g, Vertex v, const VertexSet& s) { return !g.neighbours(v).intersects(s); }

/// G[s] relabelled to 0..|s|-1 in increasing vertex order.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_parent;    // local -> parent
  std::vector<Vertex> from_parent;  // parent -> local, -1 when absent

  Vertex up(Vertex local) const { return to_parent[static_cast<std::size_t>(local)]; }
  Vertex down(Vertex parent) const { return from_parent[static_cast<std::size_t>(parent)]; }
  VertexSet up(const VertexSet& local, int parent_order) const {
    VertexSet out = VertexSet::empty(parent_order);
    for (Vertex v : local) out.insert(up(v));
    return out;
  }
  VertexSet down(const VertexSet& parent) const {
    VertexSet out = VertexSet::empty(graph.order());
    for (Vertex v : parent) {
      if (down(v) >= 0) out.insert(down(v));
    }
    return out;
  }
};

inline InducedSubgraph induced(const Graph& g, const VertexSet& s) {
  if ((s.bits() & ~g.vertices().bits()) != 0) {
    throw PreconditionError("vertex set " + s.to_string() + " is not inside a graph of order " + std::to_string(g.order()));
  }
  InducedSubgraph out;
  out.from_parent.assign(static_cast<std::size_t>(g.order()), -1);
  for (Vertex v : s) {
    out.from_parent[static_cast<std::size_t>(v)] = static_cast<Vertex>(out.to_parent.size());
    out.to_parent.push_back(v);
  }
  const int k = static_cast<int>(out.to_parent.size());
  std::array<std::uint64_t, kMaxVertices> rows{};
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (g.adjacent(out.to_parent[static_cast<std::size_t>(i)], out.to_parent[static_cast<std::size_t>(j)])) {
        rows[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
      }
    }
  }
  out.graph = Graph::from_rows(k, rows);
  return out;
}

/// G \ s.
inline InducedSubgraph remove_vertices(const Graph& g, const VertexSet& s) { return induced(g, g.vertices() - s); }

/// Vertices reachable from `start` inside `within`.
inline VertexSet reachable(const Graph& g, Vertex start, const VertexSet& within) {
  VertexSet seen = VertexSet::empty(g.order()).with(start);
  VertexSet frontier = seen;
  while (!frontier.is_empty()) {
    VertexSet next = VertexSet::empty(g.order());
    for (Vertex v : frontier) next |= g.neighbours(v);
    next = (next & within) - seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

/// Components of G[within] ordered by least vertex.
inline std::vector<VertexSet> components(const Graph& g, const VertexSet& within) {
  std::vector<VertexSet> out;
  VertexSet left = within;
  while (!left.is_empty()) {
    VertexSet comp = reachable(g, left.first(), within);
    out.push_back(comp);
    left -= comp;
  }
  return out;
}

inline std::vector<VertexSet> components(const Graph& g) { return components(g, g.vertices()); }

/// The null graph is not connected; K1 is.
inline bool is_connected(const Graph& g) {
  if (g.is_null()) return false;
  return reachable(g, 0, g.vertices()) == g.vertices();
}

inline bool is_connected(const Graph& g, const VertexSet& within) {
  if (within.is_empty()) return false;
  return reachable(g, within.first(), within) == within;
}

inline constexpr int kUnreachable = -1;

/// BFS distances from `source` inside `within` (kUnreachable outside).
inline std::vector<int> bfs_distances(const Graph& g, Vertex source, const VertexSet& within) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), kUnreachable);
  if (!within.contains(source)) return dist;
  dist[static_cast<std::size_t>(source)] = 0;
  VertexSet seen = VertexSet::empty(g.order()).with(source);
  VertexSet frontier = seen;
  for (int d = 1; !frontier.is_empty(); ++d) {
    VertexSet next = VertexSet::empty(g.order());
    for (Vertex v : frontier) next |= g.neighbours(v);
    next = (next & within) - seen;
    for (Vertex v : next) dist[static_cast<std::size_t>(v)] = d;
    seen |= next;
    frontier = next;
  }
  return dist;
}

inline std::vector<int> bfs_distances(const Graph& g, Vertex source) { return bfs_distances(g, source, g.vertices()); }

/// Shortest path from `from` to the nearest vertex of `targets` inside `within`.
/// Among nearest targets the least is chosen; the path is then traced back by
/// always stepping to the least vertex one level closer to `from`. Empty when
/// no target is reachable.
inline std::vector<Vertex> shortest_path_to_set(const Graph& g, Vertex from, const VertexSet& targets,
                                                const VertexSet& within) {
  const auto dist = bfs_distances(g, from, within);
  int best = -1;
  Vertex end = -1;
  for (Vertex t : targets & within) {
    const int d = dist[static_cast<std::size_t>(t)];
    if (d != kUnreachable && (best < 0 || d < best)) {
      best = d;
      end = t;
    }
  }
  if (end < 0) return {};
  std::vector<Vertex> path(static_cast<std::size_t>(best) + 1);
  path[static_cast<std::size_t>(best)] = end;
  for (int d = best; d > 0; --d) {
    const Vertex cur = path[static_cast<std::size_t>(d)];
    for (Vertex w : g.neighbours(cur) & within) {
      if (dist[static_cast<std::size_t>(w)] == d - 1) {
        path[static_cast<std::size_t>(d) - 1] = w;
        break;
      }
    }
  }
  return path;
}

inline std::vector<Vertex> shortest_path(const Graph& g, Vertex from, Vertex to, const VertexSet& within) {
  return shortest_path_to_set(g, from, VertexSet::empty(g.order()).with(to), within);
}

/// Diameter, or nullopt for null or disconnected graphs.
inline std::optional<int> diameter(const Graph& g) {
  if (!is_connected(g)) return std::nullopt;
  int best = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    for (int d : bfs_distances(g, v)) best = std::max(best, d);
  }
  return best;
}

inline bool is_regular(const Graph& g) {
  for (Vertex v = 1; v < g.order(); ++v) {
    if (g.degree(v) != g.degree(0)) return false;
  }
  return true;
}

namespace detail {

// Branch and bound maximum clique with a greedy colouring bound.
class MaxClique {
 public:
  MaxClique(const Graph& g, int stop_at) : g_(g), stop_at_(stop_at) {}

  int run() {
    expand(0, g_.vertices().bits());
    return best_;
  }

 private:
  void expand(int size, std::uint64_t candidates) {
    if (best_ >= stop_at_) return;
    if (candidates == 0) {
      best_ = std::max(best_, size);
      return;
    }
    // Colour classes in order; vertices are popped from the last colour first.
    std::vector<std::pair<Vertex, int>> order;
    order.reserve(static_cast<std::size_t>(std::popcount(candidates)));
    std::uint64_t uncoloured = candidates;
    for (int colour = 1; uncoloured != 0; ++colour) {
      std::uint64_t available = uncoloured;
      while (available != 0) {
        const Vertex v = std::countr_zero(available);
        available &= ~g_.row(v) & ~(std::uint64_t{1} << v);
        uncoloured &= ~(std::uint64_t{1} << v);
        order.emplace_back(v, colour);
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      if (size + it->second <= best_) return;
      const Vertex v = it->first;
      expand(size + 1, candidates & g_.row(v));
      candidates &= ~(std::uint64_t{1} << v);
      if (best_ >= stop_at_) return;
    }
  }

  const Graph& g_;
  int stop_at_;
  int best_ = 0;
};

}  // namespace detail

/// ω(G), exact.
inline int clique_number(const Graph& g) { return detail::MaxClique(g, kMaxVertices + 1).run(); }

/// α(G), exact.
inline int independence_number(const Graph& g) { return clique_number(complement(g)); }

/// Whether α(G) >= k, stopping as soon as a witness is found.
inline bool has_independent_set(const Graph& g, int k) {
  if (k <= 0) return true;
  return detail::MaxClique(complement(g), k).run() >= k;
}

/// Number of labelled simple graphs on n vertices, 2^(n choose 2).
inline std::uint64_t labeled_graph_count(int n) {
  return std::uint64_t{1} << (static_cast<unsigned>(n) * static_cast<unsigned>(n - 1) / 2);
}

inline constexpr int kMaxEnumerationOrder = 7;

/// Graph whose pair (i, j), enumerated j-outer / i-inner, is an edge iff bit k of
/// `code` is set.
inline Graph graph_from_code(int n, std::uint64_t code) {
  std::array<std::uint64_t, kMaxVertices> rows{};
  int k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if ((code >> k) & 1U) rows[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
    }
  }
  return Graph::from_rows(n, rows);
}

/// Every labelled simple graph on n <= 7 vertices exactly once, in code order.
class LabeledGraphs {
 public:
  LabeledGraphs(int n, bool connected_only) : n_(n), connected_only_(connected_only) {
    if (n < 0 || n > kMaxEnumerationOrder) {
      throw PreconditionError("labelled enumeration supports n <= 7 (n = 7 is already 2^21 graphs); "
                              "ingest a graph6 corpus (e.g. from nauty geng) for larger n");
    }
  }

  int order() const { return n_; }
  std::uint64_t code_count() const { return labeled_graph_count(n_); }

  /// Calls fn(code, graph) for every accepted graph with code in [first, last).
  template <class Fn>
  void for_each(std::uint64_t first, std::uint64_t last, Fn&& fn) const {
    last = std::min(last, code_count());
    for (std::uint64_t code = first; code < last; ++code) {
      Graph g = graph_from_code(n_, code);
      if (connected_only_ && !is_connected(g)) continue;
      fn(code, g);
    }
  }

  template <class Fn>
  void for_each(Fn&& fn) const {
    for_each(0, code_count(), std::forward<Fn>(fn));
  }

  /// Pull-style cursor; single consumer.
  class Cursor {
   public:
    explicit Cursor(const LabeledGraphs& src) : src_(src) {}
    std::optional<Graph> next() {
      while (code_ < src_.code_count()) {
        Graph g = graph_from_code(src_.n_, code_++);
        if (!src_.connected_only_ || is_connected(g)) return g;
      }
      return std::nullopt;
    }

   private:
    const LabeledGraphs& src_;
    std::uint64_t code_ = 0;
  };

  Cursor cursor() const { return Cursor(*this); }

 private:
  int n_;
  bool connected_only_;
};

inline LabeledGraphs enumerate_labeled_graphs(int n, bool connected_only) { return {n, connected_only}; }

}  // namespace p5cops
