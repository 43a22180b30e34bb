#include "ecrit/multigraph.hpp"

#include <algorithm>

#include "ecrit/errors.hpp"

namespace ecrit {

int Multigraph::Degree(Vertex v) const {
  int d = 0;
  for (const Edge& e : edges) d += e.Touches(v) ? 1 : 0;
  return d;
}

int Multigraph::Multiplicity(Vertex a, Vertex b) const {
  const Edge key = Edge::Of(a, b);
  return static_cast<int>(std::count(edges.begin(), edges.end(), key));
}

int Multigraph::MaxDegree() const {
  int best = 0;
  for (Vertex v = 0; v < n; ++v) best = std::max(best, Degree(v));
  return best;
}

bool Multigraph::IsRegular() const {
  for (Vertex v = 1; v < n; ++v) {
    if (Degree(v) != Degree(0)) return false;
  }
  return true;
}

Identification IdentifyPair(const Graph& g, Vertex a, Vertex b) {
  if (a == b || !g.HasEdge(a, b)) {
    throw PreconditionError("identify_pair requires an edge between " +
                            std::to_string(a) + " and " + std::to_string(b));
  }
  const Vertex keep = std::min(a, b);
  const Vertex drop = std::max(a, b);
  Identification out;
  out.vertex_map.resize(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    out.vertex_map[v] = v == drop ? keep : v - (v > drop ? 1 : 0);
  }
  out.graph.n = g.order() - 1;
  for (const Edge& e : g.Edges()) {
    if (e == Edge::Of(a, b)) continue;
    out.graph.edges.push_back(
        Edge::Of(out.vertex_map[e.u], out.vertex_map[e.v]));
  }
  std::sort(out.graph.edges.begin(), out.graph.edges.end());
  return out;
}

}  // namespace ecrit
