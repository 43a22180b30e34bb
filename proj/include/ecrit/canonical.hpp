#pragma once

#include <cstdint>
#include <vector>

#include "ecrit/graph.hpp"

namespace ecrit {

// Canonical labeling by partition refinement and exhaustive
// individualization: among all leaves of the search tree, the labeling whose
// relabeled adjacency rows (row 0 first, most significant vertex first) are
// lexicographically largest. Exact but exponential on highly symmetric
// graphs; intended for n ≤ 10.
struct CanonicalLabeling {
  std::vector<int> label;  // label[v] = canonical position of v
  Graph graph;             // g relabeled by `label`
  // Vertices that some optimal leaf places last, i.e. the orbit of the
  // canonically last vertex.
  VertexMask last_orbit = 0;
  // orbit[v] = smallest vertex in the automorphism orbit of v.
  std::vector<int> orbit;
};

CanonicalLabeling Canonicalize(const Graph& g);

// Isomorphism-invariant key: graph6 of the canonical graph.
std::string CanonicalKey(const Graph& g);

bool Isomorphic(const Graph& a, const Graph& b);

}  // namespace ecrit
