#include "harness/checks.hpp"

#include <memory>

#include "p5cops/errors.hpp"
#include "p5cops/graph6.hpp"
#include "p5cops/graph_algorithms.hpp"
#include "p5cops/recognition.hpp"
#include "p5cops/solver.hpp"
#include "p5cops/strategy.hpp"
#include "p5cops/structure.hpp"

namespace p5cops::harness {

namespace {

struct Named {
  CheckId id;
  const char* name;
};

constexpr Named kChecks[] = {
    {CheckId::kThm11, "thm1.1"},         {CheckId::kThm11Strategy, "thm1.1-strategy"},
    {CheckId::kThm12, "thm1.2"},         {CheckId::kThm14, "thm1.4"},
    {CheckId::kThm21, "thm2.1"},         {CheckId::kThm24, "thm2.4"},
    {CheckId::kLemma41, "lemma4.1"},     {CheckId::kLemma42, "lemma4.2"},
    {CheckId::kAlpha2Diameter, "alpha2-diameter"},
};

Verdict fail(std::string detail, Json data = nullptr) { return {true, false, std::move(detail), std::move(data)}; }
Verdict pass() { return {true, true, {}, nullptr}; }
Verdict skip() { return {false, true, {}, nullptr}; }

std::string edges_text(const P3Subgraph& h) {
  std::string s;
  for (const Edge& e : h.sorted_edges()) s += (s.empty() ? "" : ",") + std::to_string(e.u) + "-" + std::to_string(e.v);
  return "V=" + h.vertices.to_string() + " E={" + s + "}";
}

bool connected_p5_free(const Graph& g) { return is_connected(g) && is_p5_free(g); }

Verdict thm11(const Graph& g) {
  if (!connected_p5_free(g)) return skip();
  const SolveTable table = solve(g, 2);
  if (cops_win(table)) return pass();
  return fail("two cops lose on a connected P5-free graph");
}

Verdict thm11_strategy(const Graph& g, const CheckOptions& options) {
  if (!connected_p5_free(g)) return skip();
  const auto table = std::make_shared<const SolveTable>(solve(g, 2));
  StrategyEngine engine(synthesize(g));
  const auto judge = [&](RobberPolicy& robber) -> std::optional<Verdict> {
    const Transcript t = execute(engine, robber);
    if (t.captured() && t.violations.empty()) return std::nullopt;
    std::string why = t.captured() ? "invariant violation: " + t.violations.front()
                                   : "cap failure after " + std::to_string(t.turns.size()) + " turns";
    return fail(robber.name() + ": " + why, {{"plan", to_json(engine.plan())}, {"transcript", to_json(t)}});
  };
  OptimalRobber optimal(table);
  if (auto bad = judge(optimal)) return *bad;
  const int seeds = options.random_seeds >= 0 ? options.random_seeds : (g.order() <= 6 ? 100 : 0);
  for (int s = 0; s < seeds; ++s) {
    RandomRobber random(static_cast<std::uint64_t>(s));
    if (auto bad = judge(random)) return *bad;
  }
  return pass();
}

Verdict thm12(const Graph& g) {
  if (!connected_p5_free(g) || !has_independent_set(g, 3)) return skip();
  if (find_domineering_3path(g)) return pass();
  return fail("no domineering 3-path although connected, P5-free and alpha >= 3");
}

Verdict thm14(const Graph& g) {
  if (g.order() < 3 || !is_connected(g) || !is_2k2_free(g) || is_c5(g)) return skip();
  if (find_weak_domineering(g)) return pass();
  return fail("no weak-domineering triple in a connected 2K2-free graph other than C5");
}

Verdict thm21(const Graph& g) {
  if (g.is_null() || !moore_degree_lemma_premises(g)) return skip();
  if (is_regular(g)) return pass();
  return fail("premises hold but degrees differ");
}

Verdict thm24(const Graph& g) {
  if (g.is_null() || !is_bijoined(g)) return skip();
  if (has_universal_vertex(g)) return pass();
  return fail("bijoined graph without a universal vertex");
}

Verdict lemma41(const Graph& g) {
  if (!connected_p5_free(g)) return skip();
  long configurations = 0;
  for (const P3Subgraph& h : lemma_subgraph_family(g)) {
    for (const Edge& e : g.edges()) {
      for (auto [u, v] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
        const auto holds = anticomplete_propagation(g, h, u, v);
        if (!holds) continue;
        ++configurations;
        if (!*holds) {
          return fail("v has a neighbour in V(H): H " + edges_text(h) + ", u=" + std::to_string(u) +
                      ", v=" + std::to_string(v));
        }
      }
    }
  }
  return {true, true, {}, {{"configurations", configurations}}};
}

std::optional<std::string> expansion_problem(const Graph& g, const P3Subgraph& h, Vertex v) {
  using Kind = ExpansionResult::Kind;
  const ExpansionResult ex = p3_expand(g, h, v);
  if (ex.kind == Kind::kComplete) {
    if (!complete_to(g, v, h.vertices.without(v)) || h.vertices.contains(v)) return "Complete but v not complete to V(H)";
    return std::nullopt;
  }
  if (!ex.h || !validate_p3_certificate(g, *ex.h)) return "H' certificate does not validate";
  if (!ex.h->vertices.contains(v)) return "v not in V(H')";
  if (ex.kind == Kind::kExtended) {
    if (!h.vertices.subset_of(ex.h->vertices)) return "Extended but V(H) not inside V(H')";
    for (const Edge& e : h.edges) {
      if (!ex.h->has_edge(e)) return "Extended but E(H) not inside E(H')";
    }
    return std::nullopt;
  }
  for (Vertex w : h.vertices) {
    if (w != ex.apex && !ex.h->has_edge(Edge(ex.apex, w))) return "Apex u not complete to V(H) inside H'";
  }
  return std::nullopt;
}

Verdict lemma42(const Graph& g) {
  if (!connected_p5_free(g)) return skip();
  long configurations = 0;
  for (const P3Subgraph& h : lemma_subgraph_family(g)) {
    for (Vertex v = 0; v < g.order(); ++v) {
      ++configurations;
      if (const auto problem = expansion_problem(g, h, v)) {
        return fail(*problem + ": H " + edges_text(h) + ", v=" + std::to_string(v));
      }
    }
  }
  return {true, true, {}, {{"configurations", configurations}}};
}

Verdict alpha2_diameter(const Graph& g) {
  if (!is_connected(g) || !has_independent_set(g, 2) || has_independent_set(g, 3)) return skip();
  const bool absent = !find_domineering_3path(g);
  const auto diam = diameter(complement(g));
  const bool small = diam && *diam <= 2;
  if (absent == small) return pass();
  return fail(std::string("domineering path ") + (absent ? "absent" : "present") + " but complement diameter " +
              (diam ? std::to_string(*diam) : std::string("infinite")));
}

}  // namespace

const std::vector<CheckId>& all_checks() {
  static const std::vector<CheckId> ids = [] {
    std::vector<CheckId> out;
    for (const Named& n : kChecks) out.push_back(n.id);
    return out;
  }();
  return ids;
}

const char* to_string(CheckId id) {
  for (const Named& n : kChecks) {
    if (n.id == id) return n.name;
  }
  return "?";
}

std::optional<CheckId> parse_check(std::string_view text) {
  for (const Named& n : kChecks) {
    if (text == n.name) return n.id;
  }
  return std::nullopt;
}

bool is_c5(const Graph& g) { return g.order() == 5 && g.edge_count() == 5 && is_regular(g) && is_connected(g); }

std::vector<P3Subgraph> lemma_subgraph_family(const Graph& g) {
  std::vector<P3Subgraph> family;
  for (const auto& p : induced_paths(g, 4)) family.push_back(p3_subgraph_of_path(g, p));
  const std::size_t paths = family.size();
  for (std::size_t i = 0; i < paths; ++i) {
    for (Vertex v = 0; v < g.order(); ++v) {
      ExpansionResult ex = p3_expand(g, family[i], v);
      if (ex.h && ex.path.size() > 1) family.push_back(std::move(*ex.h));
    }
  }
  return family;
}

Verdict run_check(CheckId id, const Graph& g, const CheckOptions& options) {
  try {
    switch (id) {
      case CheckId::kThm11: return thm11(g);
      case CheckId::kThm11Strategy: return thm11_strategy(g, options);
      case CheckId::kThm12: return thm12(g);
      case CheckId::kThm14: return thm14(g);
      case CheckId::kThm21: return thm21(g);
      case CheckId::kThm24: return thm24(g);
      case CheckId::kLemma41: return lemma41(g);
      case CheckId::kLemma42: return lemma42(g);
      case CheckId::kAlpha2Diameter: return alpha2_diameter(g);
    }
  } catch (const std::exception& e) {
    return fail(std::string("exception: ") + e.what());
  }
  return fail("unknown check");
}

}  // namespace p5cops::harness
