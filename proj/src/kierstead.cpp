#include "ecrit/kierstead.hpp"

#include <algorithm>

#include "ecrit/errors.hpp"

namespace ecrit {

VertexMask KiersteadPath::VertexSet() const {
  VertexMask m = 0;
  for (Vertex x : v) m |= Bit(x);
  return m;
}

std::string KiersteadPath::ToString() const {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    s += (i ? "-" : "") + std::to_string(v[i]);
  }
  return s;
}

bool IsKiersteadPath(const PartialEdgeColoring& c,
                     const std::vector<Vertex>& v) {
  if (v.size() < 2) return false;
  VertexMask seen = 0;
  ColorSet missing;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 0 || v[i] >= c.order() || ((seen >> v[i]) & 1U)) return false;
    seen |= Bit(v[i]);
    if (i == 0) {
      missing = c.Missing(v[0]);
      continue;
    }
    if (!c.graph().HasEdge(v[i - 1], v[i])) return false;
    const Color col = c.ColorOf(v[i - 1], v[i]);
    if (i == 1) {
      if (col != 0) return false;
    } else if (col == 0 || !missing.Contains(col)) {
      return false;
    }
    missing = missing | c.Missing(v[i]);
  }
  return true;
}

namespace {

void Extend(const PartialEdgeColoring& c, std::vector<Vertex>& path,
            VertexMask used, ColorSet missing, int p,
            std::vector<KiersteadPath>& out) {
  if (static_cast<int>(path.size()) == p + 1) {
    out.push_back({path});
    return;
  }
  const Vertex last = path.back();
  for (VertexMask m = c.graph().Neighbors(last) & ~used; m; m &= m - 1) {
    const Vertex w = std::countr_zero(m);
    const Color col = c.ColorOf(last, w);
    if (!col || !missing.Contains(col)) continue;
    path.push_back(w);
    Extend(c, path, used | Bit(w), missing | c.Missing(w), p, out);
    path.pop_back();
  }
}

}  // namespace

std::vector<KiersteadPath> KiersteadPathsFrom(const PartialEdgeColoring& c,
                                              Vertex v0, Vertex v1, int p) {
  std::vector<KiersteadPath> out;
  if (!c.graph().HasEdge(v0, v1) || c.ColorOf(v0, v1) != 0) return out;
  std::vector<Vertex> path{v0, v1};
  Extend(c, path, Bit(v0) | Bit(v1), c.Missing(v0) | c.Missing(v1), p, out);
  return out;
}

std::vector<KiersteadPath> FindKiersteadPaths(const PartialEdgeColoring& c,
                                              int p) {
  if (p < 1 || p > 4) throw PreconditionError("path length must be in [1, 4]");
  const std::vector<Edge> un = c.Uncolored();
  if (un.size() != 1) {
    throw PreconditionError("Kierstead paths need exactly one uncolored edge");
  }
  std::vector<KiersteadPath> out = KiersteadPathsFrom(c, un[0].u, un[0].v, p);
  std::vector<KiersteadPath> rev = KiersteadPathsFrom(c, un[0].v, un[0].u, p);
  out.insert(out.end(), rev.begin(), rev.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ecrit
