#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "p5cops/errors.hpp"

namespace p5cops {

using Vertex = int;

/// Largest vertex count a Graph can hold; one adjacency row is one machine word.
inline constexpr int kMaxVertices = 64;

/// Bitset over the vertices 0..n-1 of one graph.
class VertexSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    iterator() = default;
    explicit iterator(std::uint64_t rest) : rest_(rest) {}
    Vertex operator*() const { return std::countr_zero(rest_); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr VertexSet(int n, std::uint64_t bits) : bits_(bits & full_mask(n)), n_(n) {}

  static constexpr VertexSet empty(int n) { return VertexSet(n, 0); }
  static constexpr VertexSet all(int n) { return VertexSet(n, full_mask(n)); }
  static VertexSet of(int n, std::initializer_list<Vertex> vs) {
    VertexSet s(n, 0);
    for (Vertex v : vs) s.insert(v);
    return s;
  }
  static VertexSet of(int n, std::span<const Vertex> vs) {
    VertexSet s(n, 0);
    for (Vertex v : vs) s.insert(v);
    return s;
  }

  constexpr int universe() const { return n_; }
  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(Vertex v) const { return v >= 0 && v < n_ && ((bits_ >> v) & 1U); }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool is_empty() const { return bits_ == 0; }
  /// Least member; -1 when empty.
  constexpr Vertex first() const { return bits_ == 0 ? -1 : std::countr_zero(bits_); }

  void insert(Vertex v) {
    check(v);
    bits_ |= std::uint64_t{1} << v;
  }
  void erase(Vertex v) {
    check(v);
    bits_ &= ~(std::uint64_t{1} << v);
  }
  VertexSet with(Vertex v) const {
    VertexSet s = *this;
    s.insert(v);
    return s;
  }
  VertexSet without(Vertex v) const {
    VertexSet s = *this;
    s.erase(v);
    return s;
  }

  constexpr bool subset_of(const VertexSet& o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(const VertexSet& o) const { return (bits_ & o.bits_) != 0; }
  constexpr VertexSet complement() const { return VertexSet(n_, ~bits_); }

  friend constexpr VertexSet operator|(VertexSet x, VertexSet y) { return {x.n_, x.bits_ | y.bits_}; }
  friend constexpr VertexSet operator&(VertexSet x, VertexSet y) { return {x.n_, x.bits_ & y.bits_}; }
  friend constexpr VertexSet operator-(VertexSet x, VertexSet y) { return {x.n_, x.bits_ & ~y.bits_}; }
  VertexSet& operator|=(VertexSet o) { return *this = *this | o; }
  VertexSet& operator&=(VertexSet o) { return *this = *this & o; }
  VertexSet& operator-=(VertexSet o) { return *this = *this - o; }
  friend constexpr bool operator==(const VertexSet&, const VertexSet&) = default;

  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

  std::vector<Vertex> to_vector() const { return {begin(), end()}; }

  std::string to_string() const {
    std::string out = "{";
    bool first_item = true;
    for (Vertex v : *this) {
      if (!first_item) out += ",";
      out += std::to_string(v);
      first_item = false;
    }
    return out + "}";
  }

 private:
  static constexpr std::uint64_t full_mask(int n) {
    if (n <= 0) return 0;
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  }
  void check(Vertex v) const {
    if (v < 0 || v >= n_) throw PreconditionError("vertex " + std::to_string(v) + " outside 0.." + std::to_string(n_ - 1));
  }

  std::uint64_t bits_ = 0;
  int n_ = 0;
};

/// Undirected edge with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  constexpr Edge() = default;
  constexpr Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  constexpr bool has(Vertex x) const { return x == u || x == v; }
  /// Endpoint other than x; x must be an endpoint.
  constexpr Vertex other(Vertex x) const { return x == u ? v : u; }
  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected graph on vertices 0..n-1 with bitset
/// adjacency rows. Symmetric and irreflexive by construction.
class Graph {
 public:
  Graph() = default;

  /// Throws PreconditionError on n outside 0..64, self-loops, or endpoints out of range.
  Graph(int n, std::span<const Edge> edges) : n_(checked_order(n)) {
    for (const Edge& e : edges) add(e.u, e.v);
  }
  Graph(int n, std::initializer_list<Edge> edges) : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  /// Builds from raw rows; rows are symmetrised and the diagonal cleared.
  static Graph from_rows(int n, std::span<const std::uint64_t> rows) {
    Graph g;
    g.n_ = checked_order(n);
    for (int i = 0; i < n; ++i) {
      std::uint64_t row = rows[static_cast<std::size_t>(i)] & VertexSet::all(n).bits() & ~(std::uint64_t{1} << i);
      for (std::uint64_t r = row; r != 0; r &= r - 1) {
        int j = std::countr_zero(r);
        g.rows_[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
        g.rows_[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
      }
    }
    return g;
  }

  int order() const { return n_; }
  bool is_null() const { return n_ == 0; }

  bool adjacent(Vertex a, Vertex b) const {
    return a >= 0 && a < n_ && b >= 0 && b < n_ && ((rows_[static_cast<std::size_t>(a)] >> b) & 1U);
  }
  std::uint64_t row(Vertex v) const { return rows_[static_cast<std::size_t>(v)]; }
  VertexSet neighbours(Vertex v) const {
    check(v);
    return {n_, rows_[static_cast<std::size_t>(v)]};
  }
  int degree(Vertex v) const { return neighbours(v).size(); }
  VertexSet vertices() const { return VertexSet::all(n_); }

  int edge_count() const {
    int total = 0;
    for (int i = 0; i < n_; ++i) total += std::popcount(rows_[static_cast<std::size_t>(i)]);
    return total / 2;
  }

  /// Edges in increasing (u, v) order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (int i = 0; i < n_; ++i) {
      for (std::uint64_t r = rows_[static_cast<std::size_t>(i)] >> i >> 1; r != 0; r &= r - 1) {
        out.emplace_back(i, i + 1 + std::countr_zero(r));
      }
    }
    return out;
  }

  void check(Vertex v) const {
    if (v < 0 || v >= n_) throw PreconditionError("vertex " + std::to_string(v) + " outside 0.." + std::to_string(n_ - 1));
  }

  friend bool operator==(const Graph& x, const Graph& y) {
    if (x.n_ != y.n_) return false;
    for (int i = 0; i < x.n_; ++i) {
      if (x.rows_[static_cast<std::size_t>(i)] != y.rows_[static_cast<std::size_t>(i)]) return false;
    }
    return true;
  }

 private:
  static int checked_order(int n) {
    if (n < 0 || n > kMaxVertices) {
      throw PreconditionError("graph order " + std::to_string(n) + " outside 0.." + std::to_string(kMaxVertices));
    }
    return n;
  }
  void add(Vertex a, Vertex b) {
    check(a);
    check(b);
    if (a == b) throw PreconditionError("self-loop at vertex " + std::to_string(a));
    rows_[static_cast<std::size_t>(a)] |= std::uint64_t{1} << b;
    rows_[static_cast<std::size_t>(b)] |= std::uint64_t{1} << a;
  }

  int n_ = 0;
  std::array<std::uint64_t, kMaxVertices> rows_{};
};

}  // namespace p5cops
