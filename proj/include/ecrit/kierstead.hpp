#pragma once

#include <string>
#include <vector>

#include "ecrit/coloring.hpp"

namespace ecrit {

// Path v_0 v_1 ... v_p with v_0v_1 uncolored; for i ≥ 2 the color of
// v_{i-1}v_i is missing at some v_j with 0 ≤ j < i.
struct KiersteadPath {
  std::vector<Vertex> v;

  int length() const { return static_cast<int>(v.size()) - 1; }
  VertexMask VertexSet() const;
  std::string ToString() const;
  friend bool operator==(const KiersteadPath&, const KiersteadPath&) = default;
  friend auto operator<=>(const KiersteadPath&, const KiersteadPath&) = default;
};

bool IsKiersteadPath(const PartialEdgeColoring& c, const std::vector<Vertex>& v);

// All Kierstead paths with p edges starting on the unique uncolored edge, in
// both orientations, sorted. Requires exactly one uncolored edge and
// 1 ≤ p ≤ 4.
std::vector<KiersteadPath> FindKiersteadPaths(const PartialEdgeColoring& c,
                                              int p);

// Paths with p edges starting at the ordered pair (v0, v1).
std::vector<KiersteadPath> KiersteadPathsFrom(const PartialEdgeColoring& c,
                                              Vertex v0, Vertex v1, int p);

}  // namespace ecrit
