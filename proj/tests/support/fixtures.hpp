#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "p5cops/graph_algorithms.hpp"

namespace fixtures {

inline std::string data_path(const std::string& name) { return std::string(P5COPS_TEST_DATA) + "/" + name; }

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

template <class Fn>
void each_graph(int n, bool connected_only, Fn&& fn) {
  p5cops::enumerate_labeled_graphs(n, connected_only).for_each([&](std::uint64_t, const p5cops::Graph& g) { fn(g); });
}

}  // namespace fixtures
