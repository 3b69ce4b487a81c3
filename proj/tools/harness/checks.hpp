#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "harness/serialize.hpp"
#include "p5cops/graph.hpp"

namespace p5cops::harness {

enum class CheckId {
  kThm11,
  kThm11Strategy,
  kThm12,
  kThm14,
  kThm21,
  kThm24,
  kLemma41,
  kLemma42,
  kAlpha2Diameter,
};

const std::vector<CheckId>& all_checks();
const char* to_string(CheckId id);
std::optional<CheckId> parse_check(std::string_view text);

struct CheckOptions {
  /// Random robbers per graph for thm1.1-strategy; negative selects 100 for
  /// n <= 6 and none above.
  int random_seeds = -1;
};

/// Outcome of one check on one graph. `passed` is meaningful only when applicable.
struct Verdict {
  bool applicable = false;
  bool passed = true;
  std::string detail;
  Json data;
};

/// Filters then asserts; any exception thrown on an applicable graph becomes
/// a failed verdict rather than escaping.
Verdict run_check(CheckId id, const Graph& g, const CheckOptions& options = {});

/// Every induced path of g as a P3-connected subgraph, followed by every
/// Extended/Apex output of expanding those paths by each vertex.
std::vector<P3Subgraph> lemma_subgraph_family(const Graph& g);

bool is_c5(const Graph& g);

}  // namespace p5cops::harness
