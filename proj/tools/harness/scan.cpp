#include "harness/scan.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "p5cops/errors.hpp"
#include "p5cops/graph6.hpp"

namespace p5cops::harness {

namespace {

constexpr std::uint64_t kChunk = 2048;

struct Partial {
  std::uint64_t scanned = 0;
  std::uint64_t applicable = 0;
  std::uint64_t passed = 0;
  std::vector<ScanFinding> findings;
};

Json describe(const Corpus& c) {
  if (c.is_enumerated()) return {{"kind", "enumerated"}, {"n", c.order()}, {"graphs", c.size()}};
  std::string name = c.path();
  if (const auto slash = name.find_last_of('/'); slash != std::string::npos) name = name.substr(slash + 1);
  return {{"kind", "graph6"}, {"file", name}, {"sha256", c.sha256()}, {"graphs", c.size()}};
}

void run_chunk(CheckId check, const Corpus& corpus, const CheckOptions& options, std::uint64_t first,
               std::uint64_t last, Partial& out) {
  for (std::uint64_t i = first; i < last; ++i) {
    ++out.scanned;
    Graph g;
    try {
      g = corpus.graph(i);
    } catch (const Error& e) {
      ++out.applicable;
      out.findings.push_back({i, "", std::string("unreadable graph: ") + e.what(), nullptr});
      continue;
    }
    Verdict v = run_check(check, g, options);
    if (!v.applicable) continue;
    ++out.applicable;
    if (v.passed) {
      ++out.passed;
      continue;
    }
    std::string code = g.order() <= kGraph6MaxOrder ? write_graph6(g) : std::string();
    out.findings.push_back({i, std::move(code), std::move(v.detail), std::move(v.data)});
  }
}

}  // namespace

ScanReport scan(CheckId check, const Corpus& corpus, int jobs, const CheckOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t total = corpus.size();
  const std::uint64_t chunks = (total + kChunk - 1) / kChunk;
  std::vector<Partial> parts(static_cast<std::size_t>(chunks));
  std::atomic<std::uint64_t> next{0};
  const auto worker = [&] {
    for (std::uint64_t c = next++; c < chunks; c = next++) {
      run_chunk(check, corpus, options, c * kChunk, std::min(total, (c + 1) * kChunk), parts[static_cast<std::size_t>(c)]);
    }
  };
  const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(std::max<std::uint64_t>(chunks, 1))));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  ScanReport report;
  report.check = check;
  report.corpus = describe(corpus);
  for (Partial& p : parts) {
    report.scanned += p.scanned;
    report.applicable += p.applicable;
    report.passed += p.passed;
    for (ScanFinding& f : p.findings) report.findings.push_back(std::move(f));
  }
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

Json to_json(const ScanReport& r, bool include_timing) {
  Json findings = Json::array();
  for (const ScanFinding& f : r.findings) {
    Json j{{"index", f.index}, {"graph6", f.graph6}, {"detail", f.detail}};
    if (!f.data.is_null()) j["data"] = f.data;
    findings.push_back(std::move(j));
  }
  Json out{{"check", to_string(r.check)},
           {"corpus", r.corpus},
           {"counts", {{"scanned", r.scanned}, {"applicable", r.applicable}, {"passed", r.passed}}},
           {"status", r.ok() ? "pass" : "fail"},
           {"findings", findings}};
  if (include_timing) out["wall_seconds"] = r.wall_seconds;
  return out;
}

std::string summary(const ScanReport& r) {
  std::string corpus = r.corpus.value("kind", "") == "enumerated"
                           ? "n=" + std::to_string(r.corpus.at("n").get<int>())
                           : r.corpus.value("file", std::string("?"));
  return std::string(to_string(r.check)) + " " + corpus + ": scanned " + std::to_string(r.scanned) + ", applicable " +
         std::to_string(r.applicable) + ", passed " + std::to_string(r.passed) + (r.ok() ? " [pass]" : " [FAIL]");
}

}  // namespace p5cops::harness
