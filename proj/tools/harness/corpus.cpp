#include "harness/corpus.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <sstream>

#include "p5cops/errors.hpp"
#include "p5cops/graph6.hpp"
#include "p5cops/graph_algorithms.hpp"

namespace p5cops::harness {

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw Error("sha256 failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += kHex[md[i] >> 4];
    out += kHex[md[i] & 15];
  }
  return out;
}

Corpus Corpus::enumerated(int n) {
  if (n < 0 || n > kMaxEnumerationOrder) {
    throw PreconditionError("labeled enumeration is limited to n <= " + std::to_string(kMaxEnumerationOrder) +
                            "; ingest a graph6 corpus (e.g. from nauty geng) for larger orders");
  }
  Corpus c;
  c.n_ = n;
  return c;
}

Corpus Corpus::graph6_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read corpus " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  Corpus c;
  c.enumerated_ = false;
  c.path_ = path;
  const std::string text = buf.str();
  c.digest_ = sha256_hex(text);
  std::istringstream lines(text);
  for (std::string line; std::getline(lines, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) c.lines_.push_back(line);
  }
  return c;
}

std::uint64_t Corpus::size() const { return enumerated_ ? labeled_graph_count(n_) : lines_.size(); }

Graph Corpus::graph(std::uint64_t index) const {
  if (enumerated_) return graph_from_code(n_, index);
  return parse_graph6(lines_.at(static_cast<std::size_t>(index)));
}

}  // namespace p5cops::harness
