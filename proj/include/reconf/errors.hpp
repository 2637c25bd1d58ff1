#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace reconf {

enum class ErrorKind {
  ResourceCap,
  ImproperInput,
  NoColourings,
  NotCliquePartition,
  EmptyInput,
  NoLayering,
  AmbiguousLayering,
  InvalidComponent,
  UnsupportedCase,
  NotConnected,
  NotLineGraph,
  NoFrozenVertex,
  PreconditionViolated,
  ParseError,
  RootAmbiguity,
};

const char* to_string(ErrorKind kind);

// Typed failure. `offset` is a byte offset into the input and is only
// meaningful for ParseError.
class Error : public std::runtime_error {
 public:
  static constexpr std::size_t no_offset = static_cast<std::size_t>(-1);

  Error(ErrorKind kind, const std::string& message, std::size_t offset = no_offset)
      : std::runtime_error(message), kind_(kind), offset_(offset) {}

  ErrorKind kind() const { return kind_; }
  std::size_t offset() const { return offset_; }

 private:
  ErrorKind kind_;
  std::size_t offset_;
};

// Budgets for the exponential searches.  Exceeding a budget throws
// Error(ResourceCap); the failure point is deterministic for a given input.
struct Caps {
  long long search_nodes = 50'000'000;   // backtracking nodes (colouring, Krausz)
  long long max_colourings = 10'000'000; // proper colourings enumerated
  long long max_sets = 10'000'000;       // independent sets enumerated
};

}  // namespace reconf
