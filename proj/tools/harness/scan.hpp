#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "harness/checks.hpp"
#include "harness/corpus.hpp"
#include "harness/serialize.hpp"

namespace p5cops::harness {

struct ScanFinding {
  std::uint64_t index = 0;
  std::string graph6;
  std::string detail;
  Json data;
};

/// Invariant: findings.size() == applicable - passed.
struct ScanReport {
  CheckId check = CheckId::kThm11;
  Json corpus;
  std::uint64_t scanned = 0;
  std::uint64_t applicable = 0;
  std::uint64_t passed = 0;
  std::vector<ScanFinding> findings;
  double wall_seconds = 0.0;

  bool ok() const { return passed == applicable; }
};

/// Runs the check over the corpus in fixed-size chunks on `jobs` threads and
/// merges chunk results in index order, so the report does not depend on jobs.
ScanReport scan(CheckId check, const Corpus& corpus, int jobs = 1, const CheckOptions& options = {});

Json to_json(const ScanReport& report, bool include_timing = true);

/// One-line human summary.
std::string summary(const ScanReport& report);

}  // namespace p5cops::harness
