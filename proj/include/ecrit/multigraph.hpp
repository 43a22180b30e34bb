#pragma once

#include <vector>

#include "ecrit/graph.hpp"

namespace ecrit {

// Loopless multigraph as an edge multiset. Only produced by identifying an
// adjacent pair; no coloring operations live here.
struct Multigraph {
  int n = 0;
  std::vector<Edge> edges;  // normalised, sorted, repeated for multiplicity

  int Degree(Vertex v) const;
  int Multiplicity(Vertex a, Vertex b) const;
  int MaxDegree() const;
  bool IsRegular() const;
};

struct Identification {
  Multigraph graph;
  // vertex_map[v] is the image of v; a and b both map to the merged vertex.
  std::vector<Vertex> vertex_map;
};

// Merge adjacent a and b into one vertex, drop the edge ab, keep every other
// incidence (parallel edges allowed). The merged vertex takes min(a, b);
// vertices above max(a, b) shift down by one.
Identification IdentifyPair(const Graph& g, Vertex a, Vertex b);

}  // namespace ecrit
