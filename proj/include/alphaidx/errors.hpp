#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace alphaidx {

/// A mathematical hypothesis required by a checked statement does not hold
/// for the given instance (e.g. rho < 2 for the pendent-path results). This
/// is distinct from the statement being violated.
class HypothesisError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed graph6 / edge-list input. `offset()` is the byte offset (or the
/// 1-based line number for edge lists) where parsing stopped.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at offset " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace alphaidx
