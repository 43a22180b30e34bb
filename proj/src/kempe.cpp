#include "ecrit/kempe.hpp"

#include <algorithm>

#include "ecrit/errors.hpp"

namespace ecrit {
namespace {

// Walk from v leaving on color `first`, alternating with `other`.
// Returns the visited vertices after v; sets `closed` if the walk returns to v.
std::vector<Vertex> Walk(const PartialEdgeColoring& c, Vertex v, Color first,
                         Color other, bool& closed) {
  std::vector<Vertex> out;
  closed = false;
  Vertex cur = v;
  Color col = first;
  for (int steps = 0;; ++steps) {
    if (steps > c.order()) {
      throw StateError("Kempe walk does not terminate; coloring is improper");
    }
    const Vertex w = c.NeighborVia(cur, col);
    if (w < 0) break;
    if (w == v) {
      closed = true;
      break;
    }
    out.push_back(w);
    cur = w;
    col = col == first ? other : first;
  }
  return out;
}

KempeChain Build(Color a, Color b, bool cycle, std::vector<Vertex> vs) {
  KempeChain ch;
  ch.a = a;
  ch.b = b;
  ch.is_cycle = cycle;
  ch.vertices = std::move(vs);
  for (std::size_t i = 0; i + 1 < ch.vertices.size(); ++i) {
    ch.edges.push_back(Edge::Of(ch.vertices[i], ch.vertices[i + 1]));
  }
  if (cycle && ch.vertices.size() > 1) {
    ch.edges.push_back(Edge::Of(ch.vertices.back(), ch.vertices.front()));
  }
  for (Vertex v : ch.vertices) ch.mask |= Bit(v);
  return ch;
}

void CheckPair(Color a, Color b, int k) {
  if (a < 1 || b < 1 || a > k || b > k) {
    throw PreconditionError("Kempe colors out of range");
  }
}

void Exchange(PartialEdgeColoring& c, const std::vector<Edge>& edges, Color a,
              Color b) {
  std::vector<Color> next;
  next.reserve(edges.size());
  for (const Edge& e : edges) {
    const Color col = c.ColorOf(e);
    next.push_back(col == a ? b : col == b ? a : col);
  }
  for (std::size_t i = 0; i < edges.size(); ++i) c.SetRaw(edges[i], next[i]);
}

}  // namespace

KempeChain ChainThrough(const PartialEdgeColoring& c, Vertex v, Color a,
                        Color b) {
  CheckPair(a, b, c.k());
  if (a == b) throw PreconditionError("Kempe chain needs two distinct colors");
  bool closed = false;
  std::vector<Vertex> fwd = Walk(c, v, a, b, closed);
  if (closed) {
    fwd.insert(fwd.begin(), v);
    return Build(a, b, true, std::move(fwd));
  }
  bool dummy = false;
  std::vector<Vertex> bwd = Walk(c, v, b, a, dummy);
  std::vector<Vertex> vs;
  if (fwd.empty()) {
    vs.push_back(v);
    vs.insert(vs.end(), bwd.begin(), bwd.end());
  } else if (bwd.empty()) {
    vs.push_back(v);
    vs.insert(vs.end(), fwd.begin(), fwd.end());
  } else {
    vs.assign(fwd.rbegin(), fwd.rend());
    vs.push_back(v);
    vs.insert(vs.end(), bwd.begin(), bwd.end());
  }
  return Build(a, b, false, std::move(vs));
}

bool AreLinked(const PartialEdgeColoring& c, Vertex x, Vertex y, Color a,
               Color b) {
  if (x == y) return true;
  return ChainThrough(c, x, a, b).Contains(y);
}

KempeChain ChainFrom(const PartialEdgeColoring& c, Vertex x, Color a, Color b,
                     std::optional<Color> first) {
  KempeChain whole = ChainThrough(c, x, a, b);
  if (whole.is_cycle) {
    throw PreconditionError("P_x undefined: vertex " + std::to_string(x) +
                            " lies on an (" + std::to_string(a) + "," +
                            std::to_string(b) + ")-cycle");
  }
  if (whole.Front() == x) return whole;
  if (whole.Back() == x) {
    std::reverse(whole.vertices.begin(), whole.vertices.end());
    return Build(a, b, false, std::move(whole.vertices));
  }
  if (!first || (*first != a && *first != b)) {
    throw PreconditionError("P_x needs a first-edge color: vertex " +
                            std::to_string(x) + " is interior to its chain");
  }
  const Color other = *first == a ? b : a;
  bool closed = false;
  std::vector<Vertex> seg = Walk(c, x, *first, other, closed);
  seg.insert(seg.begin(), x);
  return Build(a, b, false, std::move(seg));
}

KempeChain Subchain(const PartialEdgeColoring& c, Vertex x, Vertex y, Color a,
                    Color b) {
  const KempeChain whole = ChainThrough(c, x, a, b);
  if (whole.is_cycle) {
    throw PreconditionError("subchain on an (" + std::to_string(a) + "," +
                            std::to_string(b) + ")-cycle is ambiguous");
  }
  if (!whole.Contains(y)) {
    throw PreconditionError("vertices " + std::to_string(x) + " and " +
                            std::to_string(y) + " are not (" +
                            std::to_string(a) + "," + std::to_string(b) +
                            ")-linked");
  }
  const auto& vs = whole.vertices;
  auto ix = std::find(vs.begin(), vs.end(), x) - vs.begin();
  auto iy = std::find(vs.begin(), vs.end(), y) - vs.begin();
  std::vector<Vertex> seg;
  if (ix <= iy) {
    seg.assign(vs.begin() + ix, vs.begin() + iy + 1);
  } else {
    for (auto i = ix; i >= iy; --i) seg.push_back(vs[i]);
  }
  return Build(a, b, false, std::move(seg));
}

void SwapChain(PartialEdgeColoring& c, const KempeChain& chain) {
  if (chain.a == chain.b || chain.vertices.empty()) return;
  for (const Edge& e : chain.edges) {
    const Color col = c.ColorOf(e);
    if (col != chain.a && col != chain.b) {
      throw StateError("stale Kempe chain: edge " + ToString(e) +
                       " no longer carries " + std::to_string(chain.a) + "/" +
                       std::to_string(chain.b));
    }
  }
  // A full component must still be maximal: its ends cannot be extended.
  const KempeChain now = ChainThrough(c, chain.vertices.front(), chain.a,
                                      chain.b);
  const bool is_segment = now.mask != chain.mask;
  if (is_segment && chain.is_cycle) {
    throw StateError("stale Kempe chain: cycle changed");
  }
  if (is_segment && (now.mask & chain.mask) != chain.mask) {
    throw StateError("stale Kempe chain: vertices no longer linked");
  }
  Exchange(c, chain.edges, chain.a, chain.b);
}

void SwapSubchain(PartialEdgeColoring& c, Vertex x, Vertex y, Color a,
                  Color b) {
  if (x == y) return;
  Exchange(c, Subchain(c, x, y, a, b).edges, a, b);
}

void SwapAt(PartialEdgeColoring& c, Vertex x, Color a, Color b,
            std::optional<Color> first) {
  if (a == b) return;
  Exchange(c, ChainFrom(c, x, a, b, first).edges, a, b);
}

void SwapAtBoth(PartialEdgeColoring& c, Vertex x, Vertex y, Color a,
                Color b) {
  if (a == b) return;
  const KempeChain cx = ChainThrough(c, x, a, b);
  const KempeChain cy = ChainThrough(c, y, a, b);
  Exchange(c, cx.edges, a, b);
  if (!cx.Contains(y)) Exchange(c, cy.edges, a, b);
}

}  // namespace ecrit
