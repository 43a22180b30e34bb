#include "ecrit/enumerate.hpp"

#include <set>

#include "ecrit/canonical.hpp"
#include "ecrit/errors.hpp"

namespace ecrit {
namespace {

std::vector<Graph> Extend(const std::vector<Graph>& parents, int m) {
  std::vector<Graph> out;
  for (const Graph& p : parents) {
    std::set<std::vector<VertexMask>> seen;
    for (VertexMask s = 0; s < Bit(m); ++s) {
      Graph child(m + 1);
      for (const Edge& e : p.Edges()) child.AddEdge(e.u, e.v);
      for (VertexMask t = s; t; t &= t - 1) child.AddEdge(std::countr_zero(t), m);
      CanonicalLabeling cl = Canonicalize(child);
      if (!((cl.last_orbit >> m) & 1U)) continue;
      std::vector<VertexMask> key(m + 1);
      for (Vertex v = 0; v <= m; ++v) key[v] = cl.graph.Neighbors(v);
      if (seen.insert(key).second) out.push_back(std::move(cl.graph));
    }
  }
  return out;
}

}  // namespace

std::vector<Graph> EnumerateGraphs(int n) {
  if (n < 0 || n > kMaxEnumerationOrder) {
    throw PreconditionError("enumeration supports 0 <= n <= " +
                            std::to_string(kMaxEnumerationOrder));
  }
  std::vector<Graph> level{Graph(0)};
  for (int m = 0; m < n; ++m) level = Extend(level, m);
  return level;
}

void ForEachGraphUpTo(int n_max, const std::function<void(const Graph&)>& f) {
  if (n_max < 1 || n_max > kMaxEnumerationOrder) {
    throw PreconditionError("enumeration supports 1 <= n <= " +
                            std::to_string(kMaxEnumerationOrder));
  }
  std::vector<Graph> level{Graph(0)};
  for (int m = 0; m < n_max; ++m) {
    level = Extend(level, m);
    for (const Graph& g : level) f(g);
  }
}

}  // namespace ecrit
