#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace monophilic {

// Malformed or out-of-contract input: bad files, invalid parameters, pins
// outside their lists, disconnected graphs where connectivity is required.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A search exceeded its node budget. The answer is unknown, not negative.
class ResourceExhausted : public std::runtime_error {
 public:
  ResourceExhausted(const std::string& what, std::uint64_t nodes_visited)
      : std::runtime_error(what), nodes_visited_(nodes_visited) {}

  std::uint64_t nodes_visited() const noexcept { return nodes_visited_; }

 private:
  std::uint64_t nodes_visited_;
};

}  // namespace monophilic
