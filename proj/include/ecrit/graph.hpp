#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace ecrit {

using Vertex = int;
using VertexMask = std::uint64_t;

inline constexpr VertexMask Bit(Vertex v) { return VertexMask{1} << v; }

// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  static constexpr Edge Of(Vertex a, Vertex b) {
    return a < b ? Edge{a, b} : Edge{b, a};
  }
  constexpr bool Touches(Vertex w) const { return u == w || v == w; }
  constexpr Vertex Other(Vertex w) const { return w == u ? v : u; }

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

std::string ToString(const Edge& e);

// Simple undirected graph on vertices [0, n) with bitset adjacency.
// Up to 64 vertices; every algorithm in this library targets desk-scale
// inputs well below that.
class Graph {
 public:
  static constexpr int kMaxOrder = 64;

  Graph() = default;
  explicit Graph(int n);
  static Graph FromEdges(int n, std::span<const Edge> edges);

  int order() const { return static_cast<int>(adj_.size()); }
  int size() const { return edge_count_; }

  bool HasEdge(Vertex a, Vertex b) const {
    return (adj_[a] >> b) & 1U;
  }
  VertexMask Neighbors(Vertex v) const { return adj_[v]; }
  int Degree(Vertex v) const { return std::popcount(adj_[v]); }
  std::vector<Vertex> NeighborList(Vertex v) const;

  void AddEdge(Vertex a, Vertex b);
  void RemoveEdge(Vertex a, Vertex b);
  Graph WithoutEdge(Edge e) const;

  // Edges in lexicographic order of (u, v), u < v.
  std::vector<Edge> Edges() const;
  std::vector<int> DegreeSequence() const;  // sorted ascending
  VertexMask AllVertices() const {
    return order() == 64 ? ~VertexMask{0} : Bit(order()) - 1;
  }

  // Symmetric, loop-free, edge count consistent.
  bool IsValid() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void CheckVertex(Vertex v) const;

  std::vector<VertexMask> adj_;
  int edge_count_ = 0;
};

// Δ(G); 0 for the empty graph.
int MaxDegree(const Graph& g);

// |E| > Δ·⌊n/2⌋. For odd n this is the same as |E| > Δ·(n−1)/2.
bool IsOverfull(const Graph& g);

bool IsConnected(const Graph& g);
bool IsRegular(const Graph& g);

inline constexpr int kUnreachable = std::numeric_limits<int>::max();

// min over s in targets of dist(u, s); kUnreachable when none is reachable.
int DistanceToSet(const Graph& g, Vertex u, VertexMask targets);

// Adjacent pairs (u, v), u < v, with d(u) + d(v) = Δ + 2.
std::vector<Edge> FullDeficiencyPairs(const Graph& g);

// A vertex-splitting of v: v keeps the neighbours in part_one plus the new
// vertex; the new vertex (id n) takes the remaining neighbours plus v.
struct SplitSpec {
  Vertex v = 0;
  VertexMask part_one = 0;
};

Graph SplitVertex(const Graph& g, const SplitSpec& spec);

bool IsBipartite(const Graph& g);

}  // namespace ecrit
