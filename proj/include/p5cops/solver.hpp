#pragma once

// Exact cops-and-robbers solver by retrograde analysis. Cop positions are
// unordered multisets; cops move first after the robber picks its start.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "p5cops/errors.hpp"
#include "p5cops/graph.hpp"
#include "p5cops/graph_algorithms.hpp"

namespace p5cops {

inline constexpr int kMaxCops = 3;
inline constexpr int kMaxOrderThreeCops = 12;

enum class Turn : std::uint8_t { kCopsToMove = 0, kRobberToMove = 1 };

/// Cops as a sorted multiset (k entries, repetition allowed).
using CopConfig = std::vector<Vertex>;

struct GameState {
  CopConfig cops;
  Vertex robber = 0;
  Turn turn = Turn::kCopsToMove;

  bool captured() const { return std::find(cops.begin(), cops.end(), robber) != cops.end(); }
  friend bool operator==(const GameState&, const GameState&) = default;
};

enum class Outcome : std::uint8_t { kCopWin, kRobberEscape };

inline std::vector<CopConfig> legal_cop_moves(const Graph& g, const CopConfig& cops) {
  std::vector<CopConfig> out;
  CopConfig cur(cops.size());
  const auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == cops.size()) {
      CopConfig sorted = cur;
      std::sort(sorted.begin(), sorted.end());
      out.push_back(std::move(sorted));
      return;
    }
    for (Vertex x : closed_nbhd(g, cops[i])) {
      cur[i] = x;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline std::vector<CopConfig> legal_cop_moves(const Graph& g, const GameState& s) { return legal_cop_moves(g, s.cops); }

inline std::vector<Vertex> legal_robber_moves(const Graph& g, const GameState& s) {
  return closed_nbhd(g, s.robber).to_vector();
}

/// Minimax outcome for every state of the k-cop game on one graph. Distances
/// count cop turns until capture; kEscape marks robber-escape states.
class SolveTable {
 public:
  static constexpr int kEscape = -1;

  const Graph& graph() const { return g_; }
  int cops() const { return k_; }
  int config_count() const { return static_cast<int>(configs_.size()); }
  const CopConfig& config(int index) const { return configs_[static_cast<std::size_t>(index)]; }
  const std::vector<int>& successors(int config_index) const { return succ_[static_cast<std::size_t>(config_index)]; }

  int config_index(CopConfig cops) const {
    if (static_cast<int>(cops.size()) != k_) throw PreconditionError("cop count does not match the table");
    std::sort(cops.begin(), cops.end());
    std::size_t code = 0;
    for (Vertex c : cops) {
      g_.check(c);
      code = code * static_cast<std::size_t>(g_.order()) + static_cast<std::size_t>(c);
    }
    return lookup_[code];
  }

  int distance(int config_index, Vertex robber, Turn turn) const { return dist_[state(config_index, robber, turn)]; }
  int distance(const GameState& s) const { return distance(config_index(s.cops), s.robber, s.turn); }
  Outcome outcome(const GameState& s) const { return distance(s) == kEscape ? Outcome::kRobberEscape : Outcome::kCopWin; }

  /// Least optimal cop reply from a CopsToMove state.
  CopConfig optimal_cop_move(const GameState& s) const {
    const int ci = config_index(s.cops);
    const int here = distance(ci, s.robber, Turn::kCopsToMove);
    int best = -1;
    int best_dist = std::numeric_limits<int>::max();
    for (int next : successors(ci)) {
      const int d = distance(next, s.robber, Turn::kRobberToMove);
      if (d == kEscape) continue;
      if (d < best_dist || (d == best_dist && config(next) < config(best))) {
        best = next;
        best_dist = d;
      }
    }
    if (here == kEscape || best < 0) return config(successors(ci).front());
    return config(best);
  }

  std::size_t state_count() const { return dist_.size(); }

 private:
  friend SolveTable solve(const Graph& g, int k);

  std::size_t state(int ci, Vertex r, Turn t) const {
    return (static_cast<std::size_t>(ci) * static_cast<std::size_t>(g_.order()) + static_cast<std::size_t>(r)) * 2 +
           static_cast<std::size_t>(t);
  }

  Graph g_;
  int k_ = 0;
  std::vector<CopConfig> configs_;
  std::vector<std::vector<int>> succ_;
  std::vector<int> lookup_;
  std::vector<int> dist_;
};

/// Retrograde bucketed BFS from captured states. A cop-to-move state takes
/// the first (least) distance offered by a successor plus one; a
/// robber-to-move state is resolved when its last robber move is known to
/// lose, which under increasing processing order is the maximum.
inline SolveTable solve(const Graph& g, int k = 2) {
  if (!is_connected(g)) throw PreconditionError("solve: graph must be connected and non-null");
  if (k < 1 || k > kMaxCops) throw PreconditionError("solve: k must be 1, 2 or 3");
  if (k == 3 && g.order() > kMaxOrderThreeCops) {
    throw PreconditionError("solve: k = 3 is limited to n <= " + std::to_string(kMaxOrderThreeCops));
  }
  SolveTable t;
  t.g_ = g;
  t.k_ = k;
  const int n = g.order();
  std::size_t codes = 1;
  for (int i = 0; i < k; ++i) codes *= static_cast<std::size_t>(n);
  t.lookup_.assign(codes, -1);

  CopConfig cur(static_cast<std::size_t>(k));
  const auto gen = [&](auto&& self, int i, Vertex from) -> void {
    if (i == k) {
      t.configs_.push_back(cur);
      return;
    }
    for (Vertex v = from; v < n; ++v) {
      cur[static_cast<std::size_t>(i)] = v;
      self(self, i + 1, v);
    }
  };
  gen(gen, 0, 0);
  for (std::size_t ci = 0; ci < t.configs_.size(); ++ci) {
    std::size_t code = 0;
    for (Vertex c : t.configs_[ci]) code = code * static_cast<std::size_t>(n) + static_cast<std::size_t>(c);
    t.lookup_[code] = static_cast<int>(ci);
  }
  // Successor indices, deduplicated with a stamp; configs are generated in
  // lexicographic order, so sorting indices sorts the configs.
  t.succ_.resize(t.configs_.size());
  std::vector<std::size_t> stamp(t.configs_.size(), std::numeric_limits<std::size_t>::max());
  std::array<Vertex, kMaxCops> pick{};
  for (std::size_t ci = 0; ci < t.configs_.size(); ++ci) {
    const CopConfig& from = t.configs_[ci];
    auto& out = t.succ_[ci];
    const auto emit = [&](auto&& self, int i) -> void {
      if (i == k) {
        std::array<Vertex, kMaxCops> sorted = pick;
        std::sort(sorted.begin(), sorted.begin() + k);
        std::size_t code = 0;
        for (int j = 0; j < k; ++j) code = code * static_cast<std::size_t>(n) + static_cast<std::size_t>(sorted[static_cast<std::size_t>(j)]);
        const int idx = t.lookup_[code];
        if (stamp[static_cast<std::size_t>(idx)] != ci) {
          stamp[static_cast<std::size_t>(idx)] = ci;
          out.push_back(idx);
        }
        return;
      }
      for (std::uint64_t m = g.row(from[static_cast<std::size_t>(i)]) | (std::uint64_t{1} << from[static_cast<std::size_t>(i)]);
           m != 0; m &= m - 1) {
        pick[static_cast<std::size_t>(i)] = std::countr_zero(m);
        self(self, i + 1);
      }
    };
    emit(emit, 0);
    std::sort(out.begin(), out.end());
  }

  const std::size_t states = t.configs_.size() * static_cast<std::size_t>(n) * 2;
  t.dist_.assign(states, SolveTable::kEscape);
  std::vector<int> pending(states, 0);
  std::vector<std::vector<std::size_t>> buckets(1);
  std::vector<std::uint64_t> cop_mask(t.configs_.size(), 0);
  for (std::size_t ci = 0; ci < t.configs_.size(); ++ci) {
    for (Vertex c : t.configs_[ci]) cop_mask[ci] |= std::uint64_t{1} << c;
  }
  for (std::size_t ci = 0; ci < t.configs_.size(); ++ci) {
    for (Vertex r = 0; r < n; ++r) {
      const auto ic = static_cast<int>(ci);
      if ((cop_mask[ci] >> r) & 1U) {
        t.dist_[t.state(ic, r, Turn::kCopsToMove)] = 0;
        t.dist_[t.state(ic, r, Turn::kRobberToMove)] = 0;
        buckets[0].push_back(t.state(ic, r, Turn::kCopsToMove));
        buckets[0].push_back(t.state(ic, r, Turn::kRobberToMove));
      } else {
        pending[t.state(ic, r, Turn::kRobberToMove)] = g.degree(r) + 1;
      }
    }
  }

  for (std::size_t d = 0; d < buckets.size(); ++d) {
    for (std::size_t idx = 0; idx < buckets[d].size(); ++idx) {
      const std::size_t s = buckets[d][idx];
      const auto turn = static_cast<Turn>(s & 1U);
      const auto r = static_cast<Vertex>((s >> 1) % static_cast<std::size_t>(n));
      const auto ci = static_cast<int>((s >> 1) / static_cast<std::size_t>(n));
      if (turn == Turn::kRobberToMove) {
        // Predecessors: cop configs that can move to ci (the move relation is symmetric).
        for (int prev : t.succ_[static_cast<std::size_t>(ci)]) {
          const std::size_t p = t.state(prev, r, Turn::kCopsToMove);
          if (t.dist_[p] != SolveTable::kEscape) continue;
          t.dist_[p] = static_cast<int>(d) + 1;
          if (buckets.size() <= d + 1) buckets.resize(d + 2);
          buckets[d + 1].push_back(p);
        }
      } else {
        for (Vertex prev_r : closed_nbhd(g, r)) {
          const std::size_t p = t.state(ci, prev_r, Turn::kRobberToMove);
          if (t.dist_[p] != SolveTable::kEscape) continue;
          if (--pending[p] == 0) {
            t.dist_[p] = static_cast<int>(d);
            buckets[d].push_back(p);
          }
        }
      }
    }
  }
  return t;
}

/// Robber reply: an escaping move if any, else the move maximising the
/// capture distance; least vertex among ties. A captured robber stays.
inline Vertex optimal_robber(const SolveTable& table, const GameState& s) {
  if (s.turn != Turn::kRobberToMove) throw PreconditionError("optimal_robber: robber must be to move");
  if (s.captured()) return s.robber;
  const int ci = table.config_index(s.cops);
  Vertex best = -1;
  int best_dist = -2;
  for (Vertex x : closed_nbhd(table.graph(), s.robber)) {
    int d = table.distance(ci, x, Turn::kCopsToMove);
    if (d == SolveTable::kEscape) d = std::numeric_limits<int>::max();
    if (d > best_dist) {
      best = x;
      best_dist = d;
    }
  }
  return best;
}

/// Capture distance from placement `cops` once the robber starts at r (cops
/// move next); kEscape if the robber escapes.
inline int placement_distance(const SolveTable& table, int config_index, Vertex r) {
  return table.distance(config_index, r, Turn::kCopsToMove);
}

/// Robber start maximising the capture distance against `cops` (escape if
/// possible); least vertex among ties.
inline Vertex best_robber_start(const SolveTable& table, const CopConfig& cops) {
  const int ci = table.config_index(cops);
  Vertex best = -1;
  int best_dist = -2;
  for (Vertex r = 0; r < table.graph().order(); ++r) {
    int d = placement_distance(table, ci, r);
    if (d == SolveTable::kEscape) d = std::numeric_limits<int>::max();
    if (d > best_dist) {
      best = r;
      best_dist = d;
    }
  }
  return best;
}

/// Worst-case capture distance over robber starts, or kEscape.
inline int worst_case_distance(const SolveTable& table, const CopConfig& cops) {
  const int ci = table.config_index(cops);
  int worst = 0;
  for (Vertex r = 0; r < table.graph().order(); ++r) {
    const int d = placement_distance(table, ci, r);
    if (d == SolveTable::kEscape) return SolveTable::kEscape;
    worst = std::max(worst, d);
  }
  return worst;
}

/// Placement minimising the worst-case capture distance (least config among
/// ties). If every placement loses, the least config is returned.
inline CopConfig best_initial(const SolveTable& table) {
  int best = -1;
  int best_dist = std::numeric_limits<int>::max();
  for (int ci = 0; ci < table.config_count(); ++ci) {
    const int d = worst_case_distance(table, table.config(ci));
    if (d != SolveTable::kEscape && d < best_dist) {
      best = ci;
      best_dist = d;
    }
  }
  return table.config(best < 0 ? 0 : best);
}

inline bool cops_win(const SolveTable& table) {
  for (int ci = 0; ci < table.config_count(); ++ci) {
    if (worst_case_distance(table, table.config(ci)) != SolveTable::kEscape) return true;
  }
  return false;
}

/// Least k <= k_max such that k cops win; nullopt when even k_max cops lose.
inline std::optional<int> cop_number(const Graph& g, int k_max = kMaxCops) {
  if (!is_connected(g)) throw PreconditionError("cop_number: graph must be connected and non-null");
  if (k_max < 1 || k_max > kMaxCops) throw PreconditionError("cop_number: k_max must be 1, 2 or 3");
  for (int k = 1; k <= k_max; ++k) {
    if (k == 3 && g.order() > kMaxOrderThreeCops) {
      throw PreconditionError("cop_number: three cops are limited to n <= " + std::to_string(kMaxOrderThreeCops));
    }
    if (cops_win(solve(g, k))) return k;
  }
  return std::nullopt;
}

}  // namespace p5cops
