#include "ecrit/graph.hpp"

#include <algorithm>
#include <queue>

#include "ecrit/errors.hpp"

namespace ecrit {

std::string ToString(const Edge& e) {
  return std::to_string(e.u) + "-" + std::to_string(e.v);
}

Graph::Graph(int n) {
  if (n < 0 || n > kMaxOrder) {
    throw PreconditionError("graph order " + std::to_string(n) +
                            " outside [0, 64]");
  }
  adj_.assign(n, 0);
}

Graph Graph::FromEdges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (const Edge& e : edges) g.AddEdge(e.u, e.v);
  return g;
}

void Graph::CheckVertex(Vertex v) const {
  if (v < 0 || v >= order()) {
    throw PreconditionError("vertex " + std::to_string(v) +
                            " out of range for order " +
                            std::to_string(order()));
  }
}

std::vector<Vertex> Graph::NeighborList(Vertex v) const {
  std::vector<Vertex> out;
  for (VertexMask m = adj_[v]; m != 0; m &= m - 1) {
    out.push_back(std::countr_zero(m));
  }
  return out;
}

void Graph::AddEdge(Vertex a, Vertex b) {
  CheckVertex(a);
  CheckVertex(b);
  if (a == b) throw PreconditionError("loops are not allowed");
  if (HasEdge(a, b)) {
    throw PreconditionError("parallel edge " + ToString(Edge::Of(a, b)));
  }
  adj_[a] |= Bit(b);
  adj_[b] |= Bit(a);
  ++edge_count_;
}

void Graph::RemoveEdge(Vertex a, Vertex b) {
  CheckVertex(a);
  CheckVertex(b);
  if (!HasEdge(a, b)) {
    throw PreconditionError("no edge " + ToString(Edge::Of(a, b)));
  }
  adj_[a] &= ~Bit(b);
  adj_[b] &= ~Bit(a);
  --edge_count_;
}

Graph Graph::WithoutEdge(Edge e) const {
  Graph h = *this;
  h.RemoveEdge(e.u, e.v);
  return h;
}

std::vector<Edge> Graph::Edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    const VertexMask above = u == 63 ? 0 : ~(Bit(u + 1) - 1);
    for (VertexMask m = adj_[u] & above; m != 0; m &= m - 1) {
      out.push_back({u, std::countr_zero(m)});
    }
  }
  return out;
}

std::vector<int> Graph::DegreeSequence() const {
  std::vector<int> d(order());
  for (Vertex v = 0; v < order(); ++v) d[v] = Degree(v);
  std::sort(d.begin(), d.end());
  return d;
}

bool Graph::IsValid() const {
  int twice = 0;
  for (Vertex u = 0; u < order(); ++u) {
    if (adj_[u] & Bit(u)) return false;
    if (adj_[u] & ~AllVertices()) return false;
    for (Vertex v : NeighborList(u)) {
      if (!HasEdge(v, u)) return false;
    }
    twice += Degree(u);
  }
  return twice == 2 * edge_count_;
}

int MaxDegree(const Graph& g) {
  int best = 0;
  for (Vertex v = 0; v < g.order(); ++v) best = std::max(best, g.Degree(v));
  return best;
}

bool IsOverfull(const Graph& g) {
  return g.size() > MaxDegree(g) * (g.order() / 2);
}

bool IsConnected(const Graph& g) {
  if (g.order() == 0) return true;
  VertexMask seen = Bit(0);
  VertexMask frontier = Bit(0);
  while (frontier != 0) {
    VertexMask next = 0;
    for (VertexMask m = frontier; m != 0; m &= m - 1) {
      next |= g.Neighbors(std::countr_zero(m));
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == g.AllVertices();
}

bool IsRegular(const Graph& g) {
  for (Vertex v = 1; v < g.order(); ++v) {
    if (g.Degree(v) != g.Degree(0)) return false;
  }
  return true;
}

int DistanceToSet(const Graph& g, Vertex u, VertexMask targets) {
  if (targets == 0) throw PreconditionError("target set must be non-empty");
  VertexMask seen = Bit(u);
  VertexMask frontier = Bit(u);
  for (int d = 0; frontier != 0; ++d) {
    if (frontier & targets) return d;
    VertexMask next = 0;
    for (VertexMask m = frontier; m != 0; m &= m - 1) {
      next |= g.Neighbors(std::countr_zero(m));
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return kUnreachable;
}

std::vector<Edge> FullDeficiencyPairs(const Graph& g) {
  const int delta = MaxDegree(g);
  std::vector<Edge> out;
  for (const Edge& e : g.Edges()) {
    if (g.Degree(e.u) + g.Degree(e.v) == delta + 2) out.push_back(e);
  }
  return out;
}

Graph SplitVertex(const Graph& g, const SplitSpec& spec) {
  const Vertex v = spec.v;
  if (v < 0 || v >= g.order()) {
    throw PreconditionError("split vertex out of range");
  }
  const VertexMask nbrs = g.Neighbors(v);
  if (spec.part_one == 0 || (spec.part_one & ~nbrs) != 0 ||
      spec.part_one == nbrs) {
    throw PreconditionError(
        "invalid split: part_one must be a non-empty proper subset of N(v)");
  }
  const Vertex fresh = g.order();
  Graph out(g.order() + 1);
  for (const Edge& e : g.Edges()) {
    if (!e.Touches(v)) out.AddEdge(e.u, e.v);
  }
  for (VertexMask m = nbrs; m != 0; m &= m - 1) {
    const Vertex w = std::countr_zero(m);
    out.AddEdge((spec.part_one & Bit(w)) ? v : fresh, w);
  }
  out.AddEdge(v, fresh);
  return out;
}

bool IsBipartite(const Graph& g) {
  std::vector<int> side(g.order(), -1);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::queue<Vertex> q;
    q.push(s);
    while (!q.empty()) {
      const Vertex x = q.front();
      q.pop();
      for (Vertex y : g.NeighborList(x)) {
        if (side[y] < 0) {
          side[y] = 1 - side[x];
          q.push(y);
        } else if (side[y] == side[x]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace ecrit
