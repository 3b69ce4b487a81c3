// Runs every primary acceptance criterion and prints one PASS/FAIL line per
// criterion. Exit status is nonzero if any criterion fails.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include "harness/scan.hpp"
#include "p5cops/graph6.hpp"
#include "p5cops/named_graphs.hpp"
#include "p5cops/recognition.hpp"
#include "p5cops/solver.hpp"
#include "p5cops/structure.hpp"
#include "support/fixtures.hpp"

using namespace p5cops;
using namespace p5cops::harness;

namespace {

struct CriterionResult {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    pass = false;
    detail += (detail.empty() ? "" : "; ") + why;
  }
  void note(const std::string& what) { detail += (detail.empty() ? "" : "; ") + what; }
};

int g_jobs = 1;

std::string g6(int n) { return fixtures::data_path("graphs_n" + std::to_string(n) + ".g6"); }

// Scans and folds the report into the outcome; notes applicable counts.
void scan_into(CriterionResult& o, CheckId id, const Corpus& corpus, const CheckOptions& options = {}) {
  const ScanReport r = scan(id, corpus, g_jobs, options);
  const std::string where = corpus.is_enumerated() ? "n=" + std::to_string(corpus.order()) : r.corpus.at("file").get<std::string>();
  if (!r.ok()) {
    std::string first = r.findings.empty() ? "" : " first " + r.findings.front().graph6 + ": " + r.findings.front().detail;
    o.fail(std::string(to_string(id)) + " " + where + " " + std::to_string(r.applicable - r.passed) + " findings" + first);
  } else {
    o.note(where + ":" + std::to_string(r.applicable));
  }
}

CriterionResult thm11_oracle() {
  CriterionResult o;
  for (int n = 1; n <= 7; ++n) scan_into(o, CheckId::kThm11, Corpus::enumerated(n));
  scan_into(o, CheckId::kThm11, Corpus::graph6_file(g6(8)));
  return o;
}

CriterionResult thm11_strategy() {
  CriterionResult o;
  for (int n = 1; n <= 7; ++n) scan_into(o, CheckId::kThm11Strategy, Corpus::enumerated(n), {n <= 6 ? 100 : 0});
  return o;
}

CriterionResult thm12() {
  CriterionResult o;
  for (int n = 1; n <= 7; ++n) scan_into(o, CheckId::kThm12, Corpus::enumerated(n));
  scan_into(o, CheckId::kThm12, Corpus::graph6_file(g6(8)));
  for (int n = 1; n <= 7; ++n) scan_into(o, CheckId::kAlpha2Diameter, Corpus::enumerated(n));
  return o;
}

CriterionResult thm14() {
  CriterionResult o;
  for (int n = 3; n <= 7; ++n) scan_into(o, CheckId::kThm14, Corpus::enumerated(n));
  if (find_weak_domineering(named::cycle(5))) o.fail("C5 has a weak-domineering triple");
  return o;
}

CriterionResult thm24() {
  CriterionResult o;
  for (int n = 1; n <= 9; ++n) scan_into(o, CheckId::kThm24, Corpus::graph6_file(g6(n)));
  return o;
}

CriterionResult thm21() {
  CriterionResult o;
  for (int n = 1; n <= 8; ++n) scan_into(o, CheckId::kThm21, Corpus::graph6_file(g6(n)));
  return o;
}

CriterionResult thm23() {
  CriterionResult o;
  const std::pair<SrgParams, bool> cases[] = {
      {{5, 2, 0, 1}, true}, {{10, 3, 0, 1}, true}, {{41, 10, 3, 2}, false}, {{3250, 57, 0, 1}, true}};
  for (const auto& [p, expected] : cases) {
    const bool got = srg_feasible(p);
    const std::string tuple = "(" + std::to_string(p.n) + "," + std::to_string(p.k) + "," + std::to_string(p.a) + "," +
                              std::to_string(*p.c) + ")";
    if (got != expected) o.fail(tuple + " gave " + (got ? "true" : "false"));
    else o.note(tuple + "=" + (got ? "true" : "false"));
  }
  return o;
}

CriterionResult lemmas() {
  CriterionResult o;
  for (int n = 1; n <= 6; ++n) {
    scan_into(o, CheckId::kLemma41, Corpus::enumerated(n));
    scan_into(o, CheckId::kLemma42, Corpus::enumerated(n));
  }
  return o;
}

CriterionResult solver_sanity() {
  CriterionResult o;
  const auto expect = [&](const std::string& name, const Graph& g, int want) {
    const auto got = cop_number(g, g.order() <= kMaxOrderThreeCops ? 3 : 2);
    if (got != want) o.fail("c(" + name + ")=" + (got ? std::to_string(*got) : ">k_max") + ", expected " + std::to_string(want));
  };
  for (int n = 1; n <= 8; ++n) {
    expect("P" + std::to_string(n), named::path(n), 1);
    expect("K" + std::to_string(n), named::complete(n), 1);
  }
  for (int n = 4; n <= 10; ++n) expect("C" + std::to_string(n), named::cycle(n), 2);
  expect("Petersen", named::petersen(), 3);
  if (o.pass) o.note("P1..P8, K1..K8 = 1; C4..C10 = 2; Petersen = 3");
  return o;
}

CriterionResult graph6_codec() {
  CriterionResult o;
  std::uint64_t round_trips = 0;
  for (int n = 0; n <= kMaxEnumerationOrder; ++n) {
    enumerate_labeled_graphs(n, false).for_each([&](std::uint64_t, const Graph& g) {
      ++round_trips;
      if (!(parse_graph6(write_graph6(g)) == g) && o.pass) o.fail("round trip broke on n=" + std::to_string(n));
    });
  }
  o.note(std::to_string(round_trips) + " round trips");

  // graphs_n9.g6 was written by nauty's geng, the reference encoder.
  std::vector<std::string> lines;
  {
    std::istringstream in(fixtures::slurp(g6(9)));
    for (std::string line; std::getline(in, line);) {
      if (!line.empty()) lines.push_back(line);
    }
  }
  if (lines.size() < 1000) {
    o.fail("graphs_n9.g6 has fewer than 1000 lines");
    return o;
  }
  std::mt19937_64 rng(20240607);
  int sampled = 0;
  for (int i = 0; i < 1000; ++i) {
    const std::string& line = lines[rng() % lines.size()];
    ++sampled;
    if (write_graph6(parse_graph6(line)) != line) {
      o.fail("byte mismatch on " + line);
      break;
    }
  }
  o.note(std::to_string(sampled) + " geng lines byte-equal");

  std::istringstream tsv(fixtures::slurp(fixtures::data_path("networkx_reference.tsv")));
  int nx = 0;
  for (std::string line; std::getline(tsv, line);) {
    if (line.empty()) continue;
    const std::string code = line.substr(0, line.find('\t'));
    std::istringstream row(line.substr(code.size() + 1));
    int n = 0;
    std::string edges_text;
    row >> n;
    row.ignore();
    std::getline(row, edges_text);
    std::vector<Edge> edges;
    std::istringstream es(edges_text);
    for (std::string item; std::getline(es, item, ',');) {
      const auto dash = item.find('-');
      edges.emplace_back(std::stoi(item.substr(0, dash)), std::stoi(item.substr(dash + 1)));
    }
    if (write_graph6(Graph(n, edges)) != code) {
      o.fail("networkx mismatch on " + code);
      break;
    }
    ++nx;
  }
  o.note(std::to_string(nx) + " networkx codes");
  return o;
}

struct Criterion {
  const char* id;
  std::function<CriterionResult()> run;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"primary acceptance criteria"};
  std::vector<std::string> only;
  g_jobs = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
  app.add_option("--only", only, "run just these criteria");
  app.add_option("--jobs", g_jobs)->check(CLI::PositiveNumber);
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> criteria = {
      {"thm1.1-oracle", thm11_oracle},  {"thm1.1-strategy", thm11_strategy}, {"thm1.2", thm12},
      {"thm1.4", thm14},                {"thm2.4", thm24},                   {"thm2.1", thm21},
      {"thm2.3-arithmetic", thm23},     {"lemma4.1-4.2", lemmas},            {"solver-sanity", solver_sanity},
      {"graph6-codec", graph6_codec},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    const auto start = std::chrono::steady_clock::now();
    CriterionResult o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failures;
    std::ostringstream line;
    line << (o.pass ? "PASS " : "FAIL ") << c.id << " (" << std::fixed << std::setprecision(1) << secs << "s): " << o.detail;
    std::cout << line.str() << std::endl;
  }
  std::cout << "NOTE no secondary component built; the playground criterion is out of this suite" << std::endl;
  return failures == 0 ? 0 : 1;
}
