#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "p5cops/graph.hpp"

namespace p5cops::harness {

/// Either every labeled graph on n vertices (n <= 7) or the lines of a
/// graph6 file. Graphs are addressed by a dense index so scans can split work.
class Corpus {
 public:
  static Corpus enumerated(int n);
  /// Throws Error when the file cannot be read; malformed lines surface per index.
  static Corpus graph6_file(const std::string& path);

  bool is_enumerated() const { return enumerated_; }
  int order() const { return n_; }
  const std::string& path() const { return path_; }
  const std::string& sha256() const { return digest_; }
  std::uint64_t size() const;

  /// Throws ParseError for a malformed file line.
  Graph graph(std::uint64_t index) const;

 private:
  bool enumerated_ = true;
  int n_ = 0;
  std::string path_;
  std::string digest_;
  std::vector<std::string> lines_;
};

std::string sha256_hex(const std::string& bytes);

}  // namespace p5cops::harness
