#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tinygraph {

/// Malformed input text (graph6, configs). `offset` is the byte position of
/// the first offending character.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)),
        message_(what),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }
  const std::string& message() const { return message_; }

 private:
  std::string message_;
  std::size_t offset_;
};

/// An enumeration would exceed its configured step budget. Carries the
/// smallest k whose work could not be completed.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, std::size_t limiting_k)
      : std::runtime_error(what + " (limiting k = " +
                           std::to_string(limiting_k) + ")"),
        limiting_k_(limiting_k) {}
  std::size_t limiting_k() const { return limiting_k_; }

 private:
  std::size_t limiting_k_;
};

/// A dense operation was requested on a graph above the configured vertex cap.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace tinygraph
