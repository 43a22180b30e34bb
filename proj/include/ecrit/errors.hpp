#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ecrit {

// Malformed textual input (graph6, coloring files, swap scripts).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// An operation was called outside its documented precondition.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// The coloring is not in the state an operation requires (uncolored edge
// expected to be colored, stale Kempe chain, improper recolor).
class StateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The exact solver ran out of its node budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::uint64_t nodes, int edges_colored, int edges_total)
      : std::runtime_error("search budget exceeded after " +
                           std::to_string(nodes) + " nodes (" +
                           std::to_string(edges_colored) + "/" +
                           std::to_string(edges_total) +
                           " edges at deepest point)"),
        nodes_(nodes),
        deepest_(edges_colored),
        total_(edges_total) {}
  std::uint64_t nodes() const { return nodes_; }
  int deepest() const { return deepest_; }
  int total() const { return total_; }

 private:
  std::uint64_t nodes_;
  int deepest_;
  int total_;
};

}  // namespace ecrit
