#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace domgame {

// Malformed graph input: out-of-range vertex, self-loop, bad generator spec.
class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public GraphError {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : GraphError(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Invalid GameConfig, or a graph the game cannot be played on.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IllegalMove : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The strategy's preconditions (variant, role, graph shape) do not hold.
class NotApplicable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A strategy found no move its rules allow while the game is still running.
class StrategyViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The solver refused an instance larger than its state-space cap.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace domgame
