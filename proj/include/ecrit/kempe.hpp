#pragma once

#include <optional>
#include <vector>

#include "ecrit/coloring.hpp"

namespace ecrit {

// A maximal (a,b)-alternating path or cycle, or a segment of one.
// Paths list vertices end to end; cycles start at the query vertex and do
// not repeat it at the end.
struct KempeChain {
  Color a = 0;
  Color b = 0;
  bool is_cycle = false;
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  VertexMask mask = 0;

  bool Contains(Vertex v) const { return (mask >> v) & 1U; }
  bool IsTrivial() const { return edges.empty(); }
  Vertex Front() const { return vertices.front(); }
  Vertex Back() const { return vertices.back(); }
};

// The (a,b)-component containing v. A path is listed from v when v is one of
// its ends, otherwise from the end reached by leaving v on its a-edge.
// Throws StateError if the coloring is improper enough to make the walk loop.
KempeChain ChainThrough(const PartialEdgeColoring& c, Vertex v, Color a,
                        Color b);

bool AreLinked(const PartialEdgeColoring& c, Vertex x, Vertex y, Color a,
               Color b);

// P_x(a,b): the path from x to the other end of its component. When x is
// interior, `first` names the color of the first edge and selects the
// segment; without it the call throws PreconditionError. Cycles throw too.
KempeChain ChainFrom(const PartialEdgeColoring& c, Vertex x, Color a, Color b,
                     std::optional<Color> first = std::nullopt);

// P_[x,y](a,b): the segment of x's path component between x and y.
// Throws PreconditionError if unlinked or if the component is a cycle.
KempeChain Subchain(const PartialEdgeColoring& c, Vertex x, Vertex y, Color a,
                    Color b);

// Exchange a and b on the chain's edges. Throws StateError if `chain` no
// longer matches a component (or segment) of the current coloring.
void SwapChain(PartialEdgeColoring& c, const KempeChain& chain);

// Exchange colors along P_[x,y](a,b). Raw swap: propriety at the segment
// boundary is the caller's responsibility.
void SwapSubchain(PartialEdgeColoring& c, Vertex x, Vertex y, Color a,
                  Color b);

// (a,b)-swap at x, i.e. exchange colors on P_x(a,b). a == b does nothing.
void SwapAt(PartialEdgeColoring& c, Vertex x, Color a, Color b,
            std::optional<Color> first = std::nullopt);

// (a,b)-swap at both x and y: one swap if they share a chain, else two.
void SwapAtBoth(PartialEdgeColoring& c, Vertex x, Vertex y, Color a, Color b);

}  // namespace ecrit
