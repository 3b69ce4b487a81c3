#pragma once

// Induced-subgraph freeness tests and the strongly-regular / Moore / bijoined
// decision procedures. All witnesses are lexicographically least.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "p5cops/errors.hpp"
#include "p5cops/graph.hpp"
#include "p5cops/graph_algorithms.hpp"

namespace p5cops {

namespace detail {

// Depth-first extension of induced paths in ascending vertex order. `blocked`
// is the union of closed neighbourhoods of every path vertex except the last.
template <class Fn>
bool extend_induced_path(const Graph& g, std::vector<Vertex>& path, std::uint64_t blocked, int target, Fn& on_path) {
  if (static_cast<int>(path.size()) == target) return on_path(path);
  const Vertex last = path.back();
  std::uint64_t on_path_bits = 0;
  for (Vertex v : path) on_path_bits |= std::uint64_t{1} << v;
  std::uint64_t candidates = g.row(last) & ~blocked & ~on_path_bits;
  const std::uint64_t next_blocked = blocked | g.row(last) | (std::uint64_t{1} << last);
  for (; candidates != 0; candidates &= candidates - 1) {
    path.push_back(std::countr_zero(candidates));
    if (extend_induced_path(g, path, next_blocked, target, on_path)) return true;
    path.pop_back();
  }
  return false;
}

}  // namespace detail

inline constexpr int kMaxInducedPathOrder = 6;

/// Calls fn(path) for every induced path on t vertices as an ordered sequence
/// (each path appears once per direction when t >= 2). Stops early when fn
/// returns true.
template <class Fn>
void for_each_ordered_induced_path(const Graph& g, int t, Fn&& fn) {
  if (t < 1) return;
  std::vector<Vertex> path;
  path.reserve(static_cast<std::size_t>(t));
  for (Vertex v = 0; v < g.order(); ++v) {
    path.assign(1, v);
    if (detail::extend_induced_path(g, path, 0, t, fn)) return;
  }
}

/// Least ordered t-vertex induced path, 1 <= t <= 6.
inline std::optional<std::vector<Vertex>> find_induced_path(const Graph& g, int t) {
  if (t < 1 || t > kMaxInducedPathOrder) {
    throw PreconditionError("induced path order must be in 1..6, got " + std::to_string(t));
  }
  std::optional<std::vector<Vertex>> found;
  for_each_ordered_induced_path(g, t, [&](const std::vector<Vertex>& p) {
    found = p;
    return true;
  });
  return found;
}

/// Every induced path with at least one vertex and at most max_order vertices,
/// one orientation each (front < back), in lexicographic order by length.
inline std::vector<std::vector<Vertex>> induced_paths(const Graph& g, int max_order) {
  std::vector<std::vector<Vertex>> out;
  for (int t = 1; t <= max_order; ++t) {
    for_each_ordered_induced_path(g, t, [&](const std::vector<Vertex>& p) {
      if (p.size() == 1 || p.front() < p.back()) out.push_back(p);
      return false;
    });
  }
  return out;
}

inline std::optional<std::vector<Vertex>> find_induced_p5(const Graph& g) { return find_induced_path(g, 5); }

/// Least (a, b, c, d) with edges ab, cd (a < b, c < d, a < c) and no edge between them.
inline std::optional<std::array<Vertex, 4>> find_induced_2k2(const Graph& g) {
  const auto edges = g.edges();
  for (std::size_t x = 0; x < edges.size(); ++x) {
    const std::uint64_t around = g.row(edges[x].u) | g.row(edges[x].v);
    for (std::size_t y = x + 1; y < edges.size(); ++y) {
      const Edge& f = edges[y];
      if (f.u <= edges[x].u || f.has(edges[x].u) || f.has(edges[x].v)) continue;
      if (((around >> f.u) & 1U) || ((around >> f.v) & 1U)) continue;
      return std::array<Vertex, 4>{edges[x].u, edges[x].v, f.u, f.v};
    }
  }
  return std::nullopt;
}

/// Least ordered (v0, v1, v2, v3) inducing the cycle v0-v1-v2-v3-v0.
inline std::optional<std::array<Vertex, 4>> find_induced_c4(const Graph& g) {
  const int n = g.order();
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b : g.neighbours(a)) {
      for (Vertex c : g.neighbours(b).without(a)) {
        if (g.adjacent(a, c)) continue;
        for (Vertex d : g.neighbours(c) & g.neighbours(a)) {
          if (d == b || g.adjacent(b, d)) continue;
          return std::array<Vertex, 4>{a, b, c, d};
        }
      }
    }
  }
  return std::nullopt;
}

/// Least sorted 4-clique.
inline std::optional<std::array<Vertex, 4>> find_k4(const Graph& g) {
  const int n = g.order();
  for (Vertex a = 0; a < n; ++a) {
    const std::uint64_t above_a = g.row(a) & ~((std::uint64_t{2} << a) - 1);
    for (std::uint64_t rb = above_a; rb != 0; rb &= rb - 1) {
      const Vertex b = std::countr_zero(rb);
      for (std::uint64_t rc = above_a & g.row(b) & ~((std::uint64_t{2} << b) - 1); rc != 0; rc &= rc - 1) {
        const Vertex c = std::countr_zero(rc);
        const std::uint64_t rd = above_a & g.row(b) & g.row(c) & ~((std::uint64_t{2} << c) - 1);
        if (rd != 0) return std::array<Vertex, 4>{a, b, c, std::countr_zero(rd)};
      }
    }
  }
  return std::nullopt;
}

inline bool is_p5_free(const Graph& g) { return !find_induced_p5(g).has_value(); }
inline bool is_2k2_free(const Graph& g) { return !find_induced_2k2(g).has_value(); }
inline bool is_c4_free(const Graph& g) { return !find_induced_c4(g).has_value(); }
inline bool is_k4_free(const Graph& g) { return !find_k4(g).has_value(); }

/// Length of a shortest cycle; nullopt for forests.
inline std::optional<int> girth(const Graph& g) {
  std::optional<int> best;
  for (Vertex s = 0; s < g.order(); ++s) {
    std::vector<int> dist(static_cast<std::size_t>(g.order()), kUnreachable);
    std::vector<Vertex> parent(static_cast<std::size_t>(g.order()), -1);
    std::vector<Vertex> queue{s};
    dist[static_cast<std::size_t>(s)] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex x = queue[head];
      for (Vertex y : g.neighbours(x)) {
        if (dist[static_cast<std::size_t>(y)] == kUnreachable) {
          dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
          parent[static_cast<std::size_t>(y)] = x;
          queue.push_back(y);
        } else if (parent[static_cast<std::size_t>(x)] != y) {
          const int len = dist[static_cast<std::size_t>(x)] + dist[static_cast<std::size_t>(y)] + 1;
          if (!best || len < *best) best = len;
        }
      }
    }
  }
  return best;
}

struct SrgParams {
  int n = 0;
  int k = 0;
  int a = 0;
  /// Absent only for complete graphs, which have no nonadjacent pair.
  std::optional<int> c;

  friend bool operator==(const SrgParams&, const SrgParams&) = default;
};

inline int common_neighbours(const Graph& g, Vertex u, Vertex v) { return (g.neighbours(u) & g.neighbours(v)).size(); }

/// Parameters (n, k, a, c) when g is strongly regular. Complete and edgeless
/// graphs have an undefined a or c and yield nullopt.
inline std::optional<SrgParams> srg_parameters(const Graph& g) {
  if (g.is_null()) throw PreconditionError("srg_parameters: null graph");
  const int n = g.order();
  const int m = g.edge_count();
  if (m == 0 || m == n * (n - 1) / 2) return std::nullopt;
  if (!is_regular(g)) return std::nullopt;
  SrgParams p{n, g.degree(0), -1, std::nullopt};
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const int common = common_neighbours(g, u, v);
      if (g.adjacent(u, v)) {
        if (p.a < 0) p.a = common;
        if (p.a != common) return std::nullopt;
      } else {
        if (!p.c) p.c = common;
        if (*p.c != common) return std::nullopt;
      }
    }
  }
  return p;
}

/// Feasibility condition for strongly regular parameters: either
/// 2k = (n-1)(c-a) or (a-c)^2 + 4(k-c) is a perfect square. Exact integer
/// arithmetic; parameters without c are never feasible.
inline bool srg_feasible(const SrgParams& p) {
  if (!p.c) return false;
  const std::int64_t n = p.n;
  const std::int64_t k = p.k;
  const std::int64_t a = p.a;
  const std::int64_t c = *p.c;
  if (2 * k == (n - 1) * (c - a)) return true;
  const std::int64_t disc = (a - c) * (a - c) + 4 * (k - c);
  if (disc < 0) return false;
  std::int64_t root = 0;
  while ((root + 1) * (root + 1) <= disc) ++root;
  return root * root == disc;
}

/// Degrees for which an (n, k, 0, 1) strongly regular graph can exist. Cited
/// result (Hoffman-Singleton), looked up rather than derived.
inline constexpr std::array<int, 4> kMooreDegrees{2, 3, 7, 57};

struct MooreReport {
  bool moore = false;
  int k = 0;
  int n = 0;
  bool degree_in_cited_list = false;
  bool order_is_k_squared_plus_one = false;
};

inline MooreReport moore_report(const Graph& g) {
  MooreReport r;
  r.n = g.order();
  if (g.is_null()) return r;
  const auto p = srg_parameters(g);
  if (!p || p->a != 0 || p->c != 1) return r;
  r.moore = true;
  r.k = p->k;
  r.degree_in_cited_list = std::find(kMooreDegrees.begin(), kMooreDegrees.end(), p->k) != kMooreDegrees.end();
  r.order_is_k_squared_plus_one = p->n == p->k * p->k + 1;
  return r;
}

inline bool is_moore(const Graph& g) { return moore_report(g).moore; }

inline std::optional<Vertex> has_universal_vertex(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == g.order() - 1) return v;
  }
  return std::nullopt;
}

struct BijoinedReport {
  bool bijoined = false;
  /// Least nonadjacent pair whose common neighbourhood is not an edge.
  std::optional<std::pair<Vertex, Vertex>> failing_pair;
  std::optional<std::array<Vertex, 4>> clique;
};

/// Every nonadjacent pair has exactly two common neighbours, adjacent to each
/// other, and there is no 4-clique. Graphs without nonadjacent pairs satisfy
/// the first condition vacuously.
inline BijoinedReport bijoined_report(const Graph& g) {
  BijoinedReport r;
  for (Vertex u = 0; u < g.order() && !r.failing_pair; ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (g.adjacent(u, v)) continue;
      const VertexSet common = g.neighbours(u) & g.neighbours(v);
      if (common.size() != 2) {
        r.failing_pair = {u, v};
        break;
      }
      const auto members = common.to_vector();
      if (!g.adjacent(members[0], members[1])) {
        r.failing_pair = {u, v};
        break;
      }
    }
  }
  r.clique = find_k4(g);
  r.bijoined = !r.failing_pair && !r.clique;
  return r;
}

inline bool is_bijoined(const Graph& g) { return bijoined_report(g).bijoined; }

/// Girth at least five (forests included), exactly one common neighbour for
/// every nonadjacent pair, and a connected complement.
inline bool moore_degree_lemma_premises(const Graph& g) {
  const auto gi = girth(g);
  if (gi && *gi < 5) return false;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (!g.adjacent(u, v) && common_neighbours(g, u, v) != 1) return false;
    }
  }
  return is_connected(complement(g));
}

}  // namespace p5cops
