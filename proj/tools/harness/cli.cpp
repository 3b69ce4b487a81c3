#include "harness/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "harness/scan.hpp"
#include "harness/serialize.hpp"
#include "harness/service.hpp"
#include "p5cops/errors.hpp"
#include "p5cops/graph6.hpp"
#include "p5cops/graph_algorithms.hpp"
#include "p5cops/recognition.hpp"
#include "p5cops/solver.hpp"
#include "p5cops/strategy.hpp"
#include "p5cops/structure.hpp"

namespace p5cops::harness {

namespace {

// Raised for bad input that CLI11 cannot see (unreadable file, bad graph).
struct UsageError : Error {
  using Error::Error;
};

std::string read_text(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  buf << in.rdbuf();
  return buf.str();
}

GraphFormat parse_format(const std::string& f) {
  if (f == "graph6") return GraphFormat::kGraph6;
  if (f == "edgelist") return GraphFormat::kEdgeList;
  return GraphFormat::kAuto;
}

std::string join(const auto& vertices, const char* sep = " ") {
  std::string s;
  for (Vertex v : vertices) s += (s.empty() ? "" : sep) + std::to_string(v);
  return s;
}

std::string witness(const std::optional<std::vector<Vertex>>& w) { return w ? "false (" + join(*w) + ")" : "true"; }
std::string witness(const std::optional<std::array<Vertex, 4>>& w) { return w ? "false (" + join(*w) + ")" : "true"; }

struct Input {
  std::string path = "-";
  std::string format = "auto";

  std::vector<Graph> graphs() const {
    try {
      return parse_graphs(read_text(path), parse_format(format));
    } catch (const ParseError& e) {
      throw UsageError(std::string("input: ") + e.what());
    }
  }
};

void add_input(CLI::App* cmd, Input& in) {
  cmd->add_option("input", in.path, "graph file, or - for stdin")->required();
  cmd->add_option("--format", in.format, "input format")->check(CLI::IsMember({"auto", "graph6", "edgelist"}));
}

int recognize(const Input& in, const std::map<std::string, bool>& wanted, std::ostream& out) {
  bool any = false;
  for (const auto& [k, v] : wanted) any = any || v;
  const auto want = [&](const char* key) { return !any || wanted.at(key); };
  for (const Graph& g : in.graphs()) {
    if (want("p5")) out << "p5-free: " << witness(find_induced_p5(g)) << "\n";
    if (want("2k2")) out << "2k2-free: " << witness(find_induced_2k2(g)) << "\n";
    if (want("c4")) out << "c4-free: " << witness(find_induced_c4(g)) << "\n";
    if (want("bijoined")) {
      out << "bijoined: " << (is_bijoined(g) ? "true" : "false")
          << ", universal vertex: " << (has_universal_vertex(g) ? "present" : "absent") << "\n";
    }
    if (want("srg")) {
      const auto p = g.is_null() ? std::nullopt : srg_parameters(g);
      if (!p) {
        out << "srg: false\n";
      } else {
        out << "srg: (" << p->n << "," << p->k << "," << p->a << "," << *p->c << ")"
            << ", feasible: " << (srg_feasible(*p) ? "true" : "false") << "\n";
      }
    }
    if (want("moore")) {
      const MooreReport r = moore_report(g);
      out << "moore: " << (r.moore ? "true" : "false");
      if (r.moore) {
        out << ", k=" << r.k << ", degree in {2,3,7,57}: " << (r.degree_in_cited_list ? "yes" : "no")
            << ", n=k^2+1: " << (r.order_is_k_squared_plus_one ? "yes" : "no");
      }
      out << "\n";
    }
  }
  return kExitOk;
}

int copnumber(const Input& in, std::optional<int> k_max, std::ostream& out) {
  for (const Graph& g : in.graphs()) {
    if (!is_connected(g)) throw UsageError("copnumber: graph is not connected");
    const int k = k_max.value_or(g.order() <= kMaxOrderThreeCops ? 3 : 2);
    if (k < 1 || k > kMaxCops) throw UsageError("--kmax must be between 1 and 3");
    if (k == 3 && g.order() > kMaxOrderThreeCops) throw UsageError("--kmax 3 needs n <= 12");
    const auto c = cop_number(g, k);
    if (c) out << *c << "\n";
    else out << ">" << k << "\n";
  }
  return kExitOk;
}

int domineering(const Input& in, std::ostream& out) {
  for (const Graph& g : in.graphs()) {
    const auto p = find_domineering_3path(g);
    if (p) out << p->a << " " << p->b << " " << p->c << "\n";
    else out << "none\n";
  }
  return kExitOk;
}

Graph single(const Input& in) {
  auto graphs = in.graphs();
  if (graphs.size() != 1) throw UsageError("expected exactly one graph, got " + std::to_string(graphs.size()));
  return std::move(graphs.front());
}

int strategy_synth(const Input& in, bool json, std::ostream& out) {
  const Graph g = single(in);
  StrategyPlan plan;
  try {
    plan = synthesize(g);
  } catch (const PreconditionError& e) {
    throw UsageError(e.what());
  }
  if (json) {
    out << to_json(plan).dump(2) << "\n";
    return kExitOk;
  }
  for (std::size_t i = 0; i < plan.levels.size(); ++i) {
    out << "L" << i << " " << plan.levels[i].describe() << " on " << plan.levels[i].vertices.to_string() << "\n";
  }
  out << "capture bound: " << capture_bound(plan) << "\n";
  return kExitOk;
}

struct RunOptions {
  std::string robber = "optimal";
  std::uint64_t seed = 0;
  int max_turns = 0;
  std::string replay;
  std::string transcript;
  bool json = false;
};

int strategy_run(const Input& in, const RunOptions& o, std::ostream& out) {
  const Graph g = single(in);
  StrategyPlan plan;
  try {
    plan = synthesize(g);
  } catch (const PreconditionError& e) {
    throw UsageError(e.what());
  }
  std::unique_ptr<RobberPolicy> robber;
  if (!o.replay.empty()) {
    const Json recorded = Json::parse(read_text(o.replay), nullptr, false);
    if (recorded.is_discarded()) throw UsageError("--replay: not JSON");
    try {
      auto [start, moves] = robber_line(recorded.contains("transcript") ? recorded.at("transcript") : recorded);
      robber = std::make_unique<ScriptedRobber>(start, std::move(moves));
    } catch (const Json::exception& e) {
      throw UsageError(std::string("--replay: ") + e.what());
    }
  } else if (o.robber == "optimal") {
    robber = std::make_unique<OptimalRobber>(std::make_shared<const SolveTable>(solve(g, 2)));
  } else if (o.robber == "random") {
    robber = std::make_unique<RandomRobber>(o.seed);
  } else if (o.robber == "greedy") {
    robber = std::make_unique<GreedyFarRobber>();
  } else {
    robber = std::make_unique<StationaryRobber>();
  }
  Transcript t;
  try {
    t = execute(plan, *robber, {o.max_turns, std::nullopt});
  } catch (const PreconditionError& e) {
    throw UsageError(e.what());
  }
  const Json j = to_json(t);
  if (!o.transcript.empty()) {
    std::ofstream f(o.transcript);
    if (!f) throw UsageError("cannot write " + o.transcript);
    f << j.dump(2) << "\n";
  }
  if (o.json) {
    out << j.dump(2) << "\n";
  } else {
    out << "cops " << join(t.initial_cops) << ", robber " << t.robber_start << "\n";
    for (const TurnRecord& r : t.turns) {
      out << "turn " << r.turn << ": cops " << join(r.cops_after) << " [" << r.phase << "], robber "
          << r.robber_after << "\n";
    }
    out << to_string(t.status);
    if (t.captured()) out << " at turn " << t.capture_turn;
    out << "\n";
    for (const std::string& v : t.violations) out << "violation: " << v << "\n";
  }
  return t.captured() && t.violations.empty() ? kExitOk : kExitFindings;
}

struct ScanOptions {
  std::string check;
  std::optional<int> n;
  std::string graph6;
  int jobs = 1;
  std::string report;
  bool no_timing = false;
  int seeds = -1;
};

int scan_command(const ScanOptions& o, std::ostream& out) {
  const auto id = parse_check(o.check);
  if (!id) throw UsageError("unknown check " + o.check);
  if (o.n.has_value() == !o.graph6.empty()) throw UsageError("give exactly one of --n and --graph6");
  Corpus corpus = o.n ? Corpus::enumerated(*o.n) : Corpus::graph6_file(o.graph6);
  const ScanReport r = scan(*id, corpus, o.jobs, {o.seeds});
  const std::string json = to_json(r, !o.no_timing).dump(2) + "\n";
  if (o.report == "-") {
    out << json;
  } else {
    if (!o.report.empty()) {
      std::ofstream f(o.report);
      if (!f) throw UsageError("cannot write " + o.report);
      f << json;
    }
    out << summary(r) << "\n";
    for (const ScanFinding& f : r.findings) out << "  finding #" << f.index << " " << f.graph6 << ": " << f.detail << "\n";
  }
  return r.ok() ? kExitOk : kExitFindings;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cops and robbers on P5-free graphs: recognition, solving, strategies and scans", "p5cops"};
  app.require_subcommand(1);

  Input in;
  std::map<std::string, bool> wanted{{"p5", false}, {"2k2", false}, {"c4", false},
                                     {"bijoined", false}, {"srg", false}, {"moore", false}};
  auto* recognize_cmd = app.add_subcommand("recognize", "report forbidden subgraphs and regularity properties");
  add_input(recognize_cmd, in);
  for (auto& [key, flag] : wanted) recognize_cmd->add_flag("--" + key, flag);

  std::optional<int> k_max;
  auto* cop_cmd = app.add_subcommand("copnumber", "exact cop number by retrograde analysis");
  add_input(cop_cmd, in);
  cop_cmd->add_option("--kmax", k_max, "largest number of cops tried (at most 3)");

  auto* dom_cmd = app.add_subcommand("domineering", "least domineering 3-path, or none");
  add_input(dom_cmd, in);

  auto* strategy_cmd = app.add_subcommand("strategy", "synthesize or run the two-cop strategy");
  strategy_cmd->require_subcommand(1);
  bool synth_json = false;
  auto* synth_cmd = strategy_cmd->add_subcommand("synth", "print the strategy plan");
  add_input(synth_cmd, in);
  synth_cmd->add_flag("--json", synth_json);
  RunOptions run;
  auto* run_cmd = strategy_cmd->add_subcommand("run", "play the strategy against a robber");
  add_input(run_cmd, in);
  run_cmd->add_option("--robber", run.robber)->check(CLI::IsMember({"optimal", "random", "greedy", "stationary"}));
  run_cmd->add_option("--seed", run.seed);
  run_cmd->add_option("--max-turns", run.max_turns)->check(CLI::PositiveNumber);
  run_cmd->add_option("--replay", run.replay, "transcript JSON whose robber line is replayed");
  run_cmd->add_option("--transcript", run.transcript, "write the transcript JSON here");
  run_cmd->add_flag("--json", run.json, "print the transcript as JSON");

  ScanOptions scan_opts;
  auto* scan_cmd = app.add_subcommand("scan", "check a theorem over a corpus");
  scan_cmd->add_option("--check", scan_opts.check)->required();
  scan_cmd->add_option("--n", scan_opts.n, "enumerate labeled graphs on n <= 7 vertices");
  scan_cmd->add_option("--graph6", scan_opts.graph6, "graph6 corpus file");
  scan_cmd->add_option("--jobs", scan_opts.jobs)->check(CLI::PositiveNumber);
  scan_cmd->add_option("--report", scan_opts.report, "write the JSON report here (- for stdout)");
  scan_cmd->add_flag("--no-timing", scan_opts.no_timing, "omit wall time from the report");
  scan_cmd->add_option("--seeds", scan_opts.seeds, "random robbers per graph for thm1.1-strategy");

  int port = default_port();
  ServiceConfig service;
  long ttl = service.idle_ttl.count();
  auto* serve_cmd = app.add_subcommand("serve", "run the HTTP game service on 127.0.0.1");
  serve_cmd->add_option("--port", port)->check(CLI::Range(1, 65535));
  serve_cmd->add_option("--ttl", ttl, "idle session expiry in seconds")->check(CLI::PositiveNumber);
  serve_cmd->add_option("--max-sessions", service.max_sessions)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*recognize_cmd) return recognize(in, wanted, out);
    if (*cop_cmd) return copnumber(in, k_max, out);
    if (*dom_cmd) return domineering(in, out);
    if (*synth_cmd) return strategy_synth(in, synth_json, out);
    if (*run_cmd) return strategy_run(in, run, out);
    if (*scan_cmd) return scan_command(scan_opts, out);
    if (*serve_cmd) {
      service.idle_ttl = std::chrono::seconds(ttl);
      err << "serving on http://127.0.0.1:" << port << "\n";
      if (!serve(port, service)) {
        err << "p5cops: cannot bind port " << port << "\n";
        return kExitUsage;
      }
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "p5cops: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "p5cops: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace p5cops::harness
