#include "ecrit/classifier.hpp"

#include <algorithm>

#include "ecrit/errors.hpp"
#include "ecrit/kempe.hpp"

namespace ecrit {
namespace {

// Maximal fan at u starting with v: each later leaf's edge color is free on
// the previous leaf.
std::vector<Vertex> MaximalFan(const PartialEdgeColoring& c, Vertex u,
                               Vertex v) {
  std::vector<Vertex> fan{v};
  VertexMask in_fan = Bit(v);
  for (bool grown = true; grown;) {
    grown = false;
    const ColorSet free_last = c.Missing(fan.back());
    for (VertexMask m = c.graph().Neighbors(u) & ~in_fan; m; m &= m - 1) {
      const Vertex w = std::countr_zero(m);
      const Color col = c.ColorOf(u, w);
      if (col && free_last.Contains(col)) {
        fan.push_back(w);
        in_fan |= Bit(w);
        grown = true;
        break;
      }
    }
  }
  return fan;
}

void ColorOneEdge(PartialEdgeColoring& c, Vertex u, Vertex v) {
  const std::vector<Vertex> fan = MaximalFan(c, u, v);
  const Color cu = c.Missing(u).Min();
  const Color dl = c.Missing(fan.back()).Min();
  if (cu != dl) SwapAt(c, u, cu, dl);
  // First leaf w free of dl whose prefix is still a fan.
  std::size_t j = 0;
  for (;; ++j) {
    if (j >= fan.size()) {
      throw StateError("fan rotation failed; coloring is inconsistent");
    }
    if (j > 0) {
      const Color col = c.ColorOf(u, fan[j]);
      if (!col || !c.Missing(fan[j - 1]).Contains(col)) {
        throw StateError("fan prefix broken before a free leaf was found");
      }
    }
    if (c.Missing(fan[j]).Contains(dl)) break;
  }
  for (std::size_t i = 0; i < j; ++i) {
    const Color next = c.ColorOf(u, fan[i + 1]);
    c.SetRaw(Edge::Of(u, fan[i + 1]), 0);
    c.SetRaw(Edge::Of(u, fan[i]), next);
  }
  c.SetRaw(Edge::Of(u, fan[j]), dl);
}

}  // namespace

PartialEdgeColoring VizingPlusOneColoring(const Graph& g) {
  if (g.order() < 2) throw PreconditionError("Vizing coloring needs n >= 2");
  PartialEdgeColoring c(g, MaxDegree(g) + 1);
  for (const Edge& e : g.Edges()) ColorOneEdge(c, e.u, e.v);
  if (!c.Validate()) {
    throw StateError("Vizing coloring produced an invalid result: " +
                     c.Diagnose());
  }
  return c;
}

int ExactChromaticIndex(const Graph& g, const SolverOptions& opts) {
  const int delta = MaxDegree(g);
  if (delta == 0) return 0;
  return SolveEdgeColoring(g, delta, {}, opts) ? delta : delta + 1;
}

EdgeClass Classify(const Graph& g, const SolverOptions& opts) {
  return ExactChromaticIndex(g, opts) == MaxDegree(g) ? EdgeClass::kClass1
                                                      : EdgeClass::kClass2;
}

bool EdgeHasDeltaColoringOfMinusE(const Graph& g, Edge e,
                                  const SolverOptions& opts) {
  return SolveEdgeColoring(g, MaxDegree(g), {e}, opts).has_value();
}

bool IsCriticalEdge(const Graph& g, Edge e, const SolverOptions& opts) {
  if (!g.HasEdge(e.u, e.v)) {
    throw PreconditionError(ToString(e) + " is not an edge of the graph");
  }
  if (Classify(g, opts) != EdgeClass::kClass2) {
    throw PreconditionError("critical-edge test requires a Class 2 graph");
  }
  return EdgeHasDeltaColoringOfMinusE(g, e, opts);
}

bool IsDeltaCritical(const Graph& g, const SolverOptions& opts) {
  if (g.size() == 0 || !IsConnected(g)) return false;
  if (Classify(g, opts) != EdgeClass::kClass2) return false;
  for (const Edge& e : g.Edges()) {
    if (!EdgeHasDeltaColoringOfMinusE(g, e, opts)) return false;
  }
  return true;
}

PartialEdgeColoring DeltaColoringOfMinusE(const Graph& g, Edge e,
                                          std::uint64_t seed,
                                          const SolverOptions& opts) {
  if (!g.HasEdge(e.u, e.v)) {
    throw PreconditionError(ToString(e) + " is not an edge of the graph");
  }
  SolverOptions o = opts;
  o.seed = seed;
  auto c = SolveEdgeColoring(g, MaxDegree(g), {e}, o);
  if (!c) {
    throw StateError("no Δ-coloring of G - " + ToString(e) +
                     " exists; the edge is not critical");
  }
  return *std::move(c);
}

}  // namespace ecrit
