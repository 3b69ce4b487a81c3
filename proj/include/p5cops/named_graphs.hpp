#pragma once

#include <vector>

#include "p5cops/graph.hpp"

namespace p5cops::named {

inline Graph path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return {n, e};
}

inline Graph cycle(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return {n, e};
}

inline Graph complete(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  }
  return {n, e};
}

inline Graph empty(int n) { return {n, std::vector<Edge>{}}; }

/// K_{p,q}: parts {0..p-1} and {p..p+q-1}.
inline Graph complete_bipartite(int p, int q) {
  std::vector<Edge> e;
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < q; ++j) e.emplace_back(i, p + j);
  }
  return {p + q, e};
}

/// K_{1,k} with centre 0.
inline Graph star(int leaves) { return complete_bipartite(1, leaves); }

/// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
inline Graph petersen() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
    e.emplace_back(i, i + 5);
  }
  return {10, e};
}

/// C_{n-1} on 0..n-2 plus apex n-1 adjacent to all.
inline Graph wheel(int rim) {
  std::vector<Edge> e;
  for (int i = 0; i < rim; ++i) {
    e.emplace_back(i, (i + 1) % rim);
    e.emplace_back(i, rim);
  }
  return {rim + 1, e};
}

/// Two disjoint edges 0-1, 2-3.
inline Graph two_k2() { return {4, {{0, 1}, {2, 3}}}; }

}  // namespace p5cops::named
