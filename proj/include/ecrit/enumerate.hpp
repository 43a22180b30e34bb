#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "ecrit/graph.hpp"

namespace ecrit {

inline constexpr int kMaxEnumerationOrder = 8;

// All simple graphs on n vertices up to isomorphism, each in canonical form
// (see Canonicalize). Built by canonical augmentation: a child of a parent
// on n−1 vertices is accepted when the added vertex lies in the orbit of the
// canonically last vertex; children of one parent are deduplicated by
// canonical form. Output order is deterministic.
// Throws PreconditionError for n outside [0, kMaxEnumerationOrder].
std::vector<Graph> EnumerateGraphs(int n);

// Streams all graphs with order 1..n_max, smallest order first.
void ForEachGraphUpTo(int n_max, const std::function<void(const Graph&)>& f);

}  // namespace ecrit
