#include "ecrit/fixtures.hpp"

#include <stdexcept>

namespace ecrit {

Graph CompleteGraph(int n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) g.AddEdge(u, v);
  }
  return g;
}

Graph CycleGraph(int n) {
  Graph g(n);
  for (Vertex v = 0; v < n; ++v) g.AddEdge(v, (v + 1) % n);
  return g;
}

Graph PathGraph(int n) {
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.AddEdge(v, v + 1);
  return g;
}

Graph StarGraph(int leaves) {
  Graph g(leaves + 1);
  for (Vertex v = 1; v <= leaves; ++v) g.AddEdge(0, v);
  return g;
}

Graph PetersenGraph() {
  Graph g(10);
  for (Vertex i = 0; i < 5; ++i) {
    g.AddEdge(i, (i + 1) % 5);
    g.AddEdge(i, i + 5);
    g.AddEdge(i + 5, (i + 2) % 5 + 5);
  }
  return g;
}

Graph DisjointUnion(const Graph& a, const Graph& b) {
  Graph g(a.order() + b.order());
  for (const Edge& e : a.Edges()) g.AddEdge(e.u, e.v);
  for (const Edge& e : b.Edges()) {
    g.AddEdge(e.u + a.order(), e.v + a.order());
  }
  return g;
}

namespace {

Graph DeleteVertex(const Graph& g, Vertex x) {
  Graph h(g.order() - 1);
  for (const Edge& e : g.Edges()) {
    if (e.Touches(x)) continue;
    h.AddEdge(e.u - (e.u > x ? 1 : 0), e.v - (e.v > x ? 1 : 0));
  }
  return h;
}

}  // namespace

Graph BuiltinFixture(std::string_view name) {
  if (name == "triangle") return CycleGraph(3);
  if (name == "c4") return CycleGraph(4);
  if (name == "c5") return CycleGraph(5);
  if (name == "k4") return CompleteGraph(4);
  if (name == "k5") return CompleteGraph(5);
  if (name == "k6") return CompleteGraph(6);
  if (name == "k7") return CompleteGraph(7);
  if (name == "petersen") return PetersenGraph();
  if (name == "pstar") return DeleteVertex(PetersenGraph(), 0);
  if (name == "splitk4") {
    return SplitVertex(CompleteGraph(4), SplitSpec{3, Bit(0)});
  }
  throw std::out_of_range("unknown fixture '" + std::string(name) + "'");
}

std::vector<std::string> BuiltinFixtureNames() {
  return {"triangle", "c4", "c5",       "k4",    "k5",
          "k6",       "k7", "petersen", "pstar", "splitk4"};
}

}  // namespace ecrit
