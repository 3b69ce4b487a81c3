#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace p5cops {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input violates an operation's precondition (null graph, disconnected graph,
/// vertex out of range, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

enum class ParseErrorKind {
  kEmpty,
  kBadLength,
  kByteOutOfRange,
  kTrailingGarbage,
  kNonzeroPadding,
  kTooManyVertices,
  kBadHeader,
  kVertexOutOfRange,
  kSelfLoop,
  kEdgeCountMismatch,
};

class ParseError : public Error {
 public:
  ParseError(ParseErrorKind kind, std::size_t offset, const std::string& what)
      : Error(what + " (at byte " + std::to_string(offset) + ")"),
        kind_(kind),
        offset_(offset) {}

  ParseErrorKind kind() const noexcept { return kind_; }
  std::size_t offset() const noexcept { return offset_; }

 private:
  ParseErrorKind kind_;
  std::size_t offset_;
};

/// A computation produced something one of the proven theorems rules out on a
/// valid input. These are never swallowed: the harness reports them as
/// findings.
class Finding : public Error {
 public:
  using Error::Error;
};

}  // namespace p5cops
