#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "ecrit/coloring.hpp"

namespace ecrit {

inline constexpr std::uint64_t kDefaultNodeBudget = 50'000'000;

struct SolverOptions {
  std::uint64_t node_budget = kDefaultNodeBudget;
  // 0 keeps the natural order. Other values permute edge tie-breaks, the
  // order in which reused colors are tried, and the final color names.
  std::uint64_t seed = 0;
};

struct SolveStats {
  std::uint64_t nodes = 0;
};

// Proper k-edge-coloring of g with the `skip` edges left uncolored, or
// nullopt if none exists. Throws BudgetExceeded.
std::optional<PartialEdgeColoring> SolveEdgeColoring(
    const Graph& g, int k, const std::vector<Edge>& skip = {},
    const SolverOptions& opts = {}, SolveStats* stats = nullptr);

// Every proper k-coloring of g − skip up to renaming of colors, each
// reported once with colors numbered by first use. The callback returns
// false to stop. Returns the number of colorings reported.
std::uint64_t EnumerateEdgeColorings(
    const Graph& g, int k, const std::vector<Edge>& skip,
    const std::function<bool(const PartialEdgeColoring&)>& visit,
    const SolverOptions& opts = {});

// Portable Fisher-Yates over mt19937_64, identical on every platform.
std::vector<int> SeededPermutation(int n, std::uint64_t seed);

}  // namespace ecrit
