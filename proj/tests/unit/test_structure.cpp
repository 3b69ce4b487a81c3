#include <gtest/gtest.h>

#include "p5cops/errors.hpp"
#include "p5cops/graph6.hpp"
#include "p5cops/named_graphs.hpp"
#include "p5cops/recognition.hpp"
#include "p5cops/structure.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace p5cops;
using Kind = ExpansionResult::Kind;

namespace {

const Graph kP4 = named::path(4);
// Triangle 1-2-3 with pendant 0 on 1.
const Graph kPaw(4, {{0, 1}, {1, 2}, {1, 3}, {2, 3}});

VertexSet set(int n, std::initializer_list<Vertex> vs) { return VertexSet::of(n, vs); }

std::optional<std::array<Vertex, 3>> naive_weak(const Graph& g) {
  const int n = g.order();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (a == b || b == c || a == c || !g.adjacent(a, b) || !g.adjacent(b, c)) continue;
        bool ok = true;
        for (int x = 0; x < n; ++x) ok = ok && (!g.adjacent(c, x) || g.adjacent(a, x) || g.adjacent(b, x));
        if (ok) return std::array<Vertex, 3>{a, b, c};
      }
  return std::nullopt;
}

}  // namespace

TEST(Domineering, Examples) {
  EXPECT_TRUE(is_domineering(named::path(3), 0, 1, 2));
  const Graph c5 = named::cycle(5);
  EXPECT_FALSE(is_domineering(c5, 1, 2, 3));
  EXPECT_TRUE(is_domineering(named::star(3), 1, 0, 2));
  EXPECT_FALSE(find_domineering_3path(c5));
  EXPECT_FALSE(find_domineering_3path(complement(named::petersen())));
  EXPECT_THROW(is_domineering(c5, 1, 1, 2), PreconditionError);
}

TEST(Domineering, P4EndsAtALeaf) {
  const auto p = find_domineering_3path(kP4);
  ASSERT_TRUE(p);
  EXPECT_EQ(*p, (DomineeringPath{1, 2, 3}));
  EXPECT_TRUE(kP4.degree(p->c) == 1);
}

TEST(Domineering, AgreesWithNaiveTripleScan) {
  for (int n = 1; n <= 6; ++n) {
    fixtures::each_graph(n, false, [&](const Graph& g) {
      const auto p = find_domineering_3path(g);
      ASSERT_EQ(p.has_value(), oracle::has_domineering(g));
      if (!p) return;
      ASSERT_TRUE(oracle::domineering(g, p->a, p->b, p->c));
      // Lex least among all valid triples.
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int c = 0; c < n; ++c) {
            if (oracle::domineering(g, a, b, c)) {
              ASSERT_LE((DomineeringPath{p->a, p->b, p->c}), (DomineeringPath{a, b, c}));
              a = b = c = n;
            }
          }
    });
  }
}

TEST(Domineering, DeletingTheEndLeavesGraphConnected) {
  for (int n = 3; n <= 6; ++n) {
    fixtures::each_graph(n, true, [&](const Graph& g) {
      for (Vertex a = 0; a < n; ++a)
        for (Vertex b = 0; b < n; ++b)
          for (Vertex r = 0; r < n; ++r) {
            if (oracle::domineering(g, a, b, r)) {
              ASSERT_TRUE(is_connected(g, g.vertices().without(r)));
            }
          }
    });
  }
}

TEST(WeakDomineering, Examples) {
  EXPECT_FALSE(find_weak_domineering(named::cycle(5)));
  const auto t = find_weak_domineering(named::complete(3));
  ASSERT_TRUE(t);
  EXPECT_EQ(*t, (std::array<Vertex, 3>{0, 1, 2}));
}

TEST(WeakDomineering, AgreesWithNaiveScan) {
  for (int n = 1; n <= 6; ++n) {
    fixtures::each_graph(n, false, [&](const Graph& g) {
      ASSERT_EQ(find_weak_domineering(g), naive_weak(g));
    });
  }
}

TEST(DominatingPair, Examples) {
  EXPECT_EQ(dominating_pair(named::cycle(5)), (std::pair<Vertex, Vertex>{0, 2}));
  EXPECT_EQ(dominating_pair(Graph(1, {})), (std::pair<Vertex, Vertex>{0, 0}));
  const auto p = dominating_pair(kP4);
  ASSERT_TRUE(p);
  EXPECT_EQ(closed_nbhd(kP4, p->first) | closed_nbhd(kP4, p->second), kP4.vertices());
  EXPECT_FALSE(dominating_pair(named::path(7)));
  EXPECT_THROW(dominating_pair(named::empty(2)), PreconditionError);
}

TEST(DominatingPair, ExistsWhenAlphaAtMostTwo) {
  for (int n = 1; n <= 6; ++n) {
    fixtures::each_graph(n, true, [&](const Graph& g) {
      if (!has_independent_set(g, 3)) {
        ASSERT_TRUE(dominating_pair(g));
      }
    });
  }
}

TEST(Retract, Examples) {
  const auto star = find_retract(named::star(3), 1);
  ASSERT_TRUE(star);
  EXPECT_EQ(star->u, 0);
  EXPECT_EQ(star->component, set(4, {2}));
  EXPECT_FALSE(find_retract(named::cycle(5), 0));
  const auto c4 = find_retract(named::cycle(4), 0);
  ASSERT_TRUE(c4);
  EXPECT_EQ(c4->u, 1);
  EXPECT_EQ(c4->component, set(4, {2}));
}

TEST(P3Connected, Examples) {
  const auto single = is_p3_connected(named::complete(3), set(3, {0, 1}), {{0, 1}});
  ASSERT_TRUE(single);
  EXPECT_TRUE(validate_p3_certificate(named::complete(3), *single));
  EXPECT_FALSE(is_p3_connected(named::complete(3), set(3, {0, 1, 2}), {{0, 1}, {1, 2}, {0, 2}}));
  const auto path = is_p3_connected(kP4, kP4.vertices(), {{0, 1}, {1, 2}, {2, 3}});
  ASSERT_TRUE(path);
  EXPECT_EQ(path->parent, (std::vector<int>{-1, 0, 1}));
  EXPECT_THROW(is_p3_connected(kP4, kP4.vertices(), {{0, 2}}), PreconditionError);
}

TEST(P3Connected, TamperedCertificateFailsValidation) {
  auto h = *is_p3_connected(kP4, kP4.vertices(), {{0, 1}, {1, 2}, {2, 3}});
  h.parent[2] = 0;  // 2-3 and 0-1 share no vertex
  EXPECT_FALSE(validate_p3_certificate(kP4, h));
}

TEST(P3Connected, EveryInducedPathIsP3Connected) {
  for (int n = 2; n <= 6; ++n) {
    fixtures::each_graph(n, true, [&](const Graph& g) {
      for (const auto& p : induced_paths(g, n)) {
        if (p.size() < 2) continue;
        const auto h = is_p3_connected(g, VertexSet::of(n, p), path_edges(p));
        ASSERT_TRUE(h);
        ASSERT_TRUE(validate_p3_certificate(g, *h));
      }
    });
  }
}

TEST(P3Expand, ExtendedOnP4) {
  const P3Subgraph h = p3_subgraph_of_path(kP4, {2, 3});
  const ExpansionResult ex = p3_expand(kP4, h, 0);
  EXPECT_EQ(ex.kind, Kind::kExtended);
  ASSERT_TRUE(ex.h);
  EXPECT_EQ(ex.h->vertices, kP4.vertices());
  EXPECT_EQ(ex.h->sorted_edges(), (std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}}));
}

TEST(P3Expand, CompleteOnTriangle) {
  const Graph k3 = named::complete(3);
  EXPECT_EQ(p3_expand(k3, p3_subgraph_of_path(k3, {1, 2}), 0).kind, Kind::kComplete);
}

TEST(P3Expand, ApexOnPaw) {
  const ExpansionResult ex = p3_expand(kPaw, p3_subgraph_of_path(kPaw, {2, 3}), 0);
  EXPECT_EQ(ex.kind, Kind::kApex);
  EXPECT_EQ(ex.apex, 1);
  ASSERT_TRUE(ex.h);
  EXPECT_EQ(ex.h->sorted_edges(), (std::vector<Edge>{{0, 1}, {1, 2}, {1, 3}}));
}

TEST(P3Expand, VertexInsideHIsExtendedTrivially) {
  const P3Subgraph h = p3_subgraph_of_path(kP4, {1, 2});
  const ExpansionResult ex = p3_expand(kP4, h, 1);
  EXPECT_EQ(ex.kind, Kind::kExtended);
  EXPECT_EQ(ex.h->sorted_edges(), h.sorted_edges());
}

TEST(P3Expand, OutcomesAreSoundOnP5FreeGraphs) {
  for (int n = 2; n <= 6; ++n) {
    fixtures::each_graph(n, true, [&](const Graph& g) {
      if (!is_p5_free(g)) return;
      for (const auto& p : induced_paths(g, 4)) {
        if (p.size() < 2) continue;
        const P3Subgraph h = p3_subgraph_of_path(g, p);
        for (Vertex v = 0; v < n; ++v) {
          const ExpansionResult ex = p3_expand(g, h, v);
          if (ex.kind == Kind::kComplete) {
            ASSERT_TRUE(complete_to(g, v, h.vertices));
            continue;
          }
          ASSERT_TRUE(ex.h && validate_p3_certificate(g, *ex.h));
          ASSERT_TRUE(ex.h->vertices.contains(v));
          if (ex.kind == Kind::kExtended) {
            ASSERT_TRUE(h.vertices.subset_of(ex.h->vertices));
            for (const Edge& e : h.edges) ASSERT_TRUE(ex.h->has_edge(e));
          } else {
            for (Vertex w : h.vertices) ASSERT_TRUE(ex.h->has_edge(Edge(ex.apex, w)));
          }
        }
      }
    });
  }
}

TEST(AnticompletePropagation, HoldsOnP5FreeAndFailsOnP5) {
  // On P5 itself: H = edge 0-1, u = 3, v = 2 has a neighbour in H.
  const Graph p5 = named::path(5);
  const auto h = p3_subgraph_of_path(p5, {0, 1});
  EXPECT_EQ(anticomplete_propagation(p5, h, 3, 2), std::nullopt);  // v = 2 misses no edge of H
  const auto h2 = p3_subgraph_of_path(p5, {0, 1, 2});
  EXPECT_EQ(anticomplete_propagation(p5, h2, 4, 3), std::optional<bool>(false));
  for (int n = 2; n <= 5; ++n) {
    fixtures::each_graph(n, true, [&](const Graph& g) {
      if (!is_p5_free(g)) return;
      for (const auto& p : induced_paths(g, 4)) {
        if (p.size() < 2) continue;
        const P3Subgraph hp = p3_subgraph_of_path(g, p);
        for (const Edge& e : g.edges()) {
          for (auto [u, v] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
            const auto r = anticomplete_propagation(g, hp, u, v);
            if (r) {
              ASSERT_TRUE(*r);
            }
          }
        }
      }
    });
  }
}

TEST(Snare, P4Example) {
  const Snare s = build_snare(kP4, 3, 1, 2, 0, 0);
  EXPECT_EQ(s.h.vertices, set(4, {0, 1}));
  EXPECT_EQ(s.h.sorted_edges(), (std::vector<Edge>{{0, 1}}));
  EXPECT_EQ(s.d1, 0);
  EXPECT_EQ(s.d2, 1);
  EXPECT_EQ(s.construction, "A/complete");
  EXPECT_TRUE(verify_snare(kP4, s, 0, 0));
  EXPECT_EQ(snare_violation(kP4, s, 3, 3), 3);
  EXPECT_EQ(snare_walk(s), (std::vector<Edge>{{0, 1}}));
}

TEST(Snare, ContainingBFailsH2) {
  Snare s = build_snare(kP4, 3, 1, 2, 0, 0);
  s.h = *is_p3_connected(kP4, set(4, {0, 1, 2}), {{0, 1}, {1, 2}});
  EXPECT_EQ(snare_violation(kP4, s, 0, 0), 2);
}

TEST(Snare, PreconditionsAreReported) {
  const auto reason = [](auto&& fn) {
    try {
      fn();
    } catch (const SnareConstructionError& e) {
      return e.reason();
    }
    return SnareError::kBadVertices;
  };
  EXPECT_EQ(reason([] { build_snare(kP4, 3, 0, 1, 0, 0); }), SnareError::kNotDomineering);
  EXPECT_EQ(reason([] { build_snare(kP4, 3, 1, 2, 2, 0); }), SnareError::kCopNotInNonNeighbourhood);
  EXPECT_EQ(reason([] { build_snare(kP4, 3, 1, 2, 1, 1); }), SnareError::kDirectWin);
  EXPECT_EQ(reason([] { build_snare(named::star(3), 1, 2, 0, 3, 3); }), SnareError::kNonNeighbourhoodDisconnected);
}

TEST(Snare, ConstructionSucceedsWheneverPreconditionsHold) {
  long built = 0;
  for (int n = 4; n <= 6; ++n) {
    fixtures::each_graph(n, true, [&](const Graph& g) {
      if (!is_p5_free(g)) return;
      for (Vertex r = 0; r < n; ++r) {
        const VertexSet mr = non_nbhd(g, r);
        if (mr.is_empty() || !is_connected(g, mr) || find_retract(g, r)) continue;
        for (Vertex a = 0; a < n; ++a)
          for (Vertex b = 0; b < n; ++b) {
            if (!oracle::domineering(g, a, b, r)) continue;
            for (Vertex c1 : mr)
              for (Vertex c2 : mr) {
                if (direct_win_available(g, a, b, c1, c2)) continue;
                const Snare s = build_snare(g, r, a, b, c1, c2);
                ASSERT_TRUE(verify_snare(g, s, c1, c2)) << write_graph6(g);
                const auto walk = snare_walk(s);
                ASSERT_EQ(walk.front(), Edge(s.d1, s.d2));
                for (std::size_t i = 1; i < walk.size(); ++i) ASSERT_TRUE(forms_induced_p3(g, walk[i - 1], walk[i]));
                ++built;
              }
          }
      }
    });
  }
  EXPECT_GT(built, 0);
}
