#pragma once

#include <bit>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "ecrit/graph.hpp"

namespace ecrit {

using Color = int;  // 1..k; 0 means "uncolored"

inline constexpr int kMaxColors = 63;

// Set of colors in [1, 63], bit c for color c.
class ColorSet {
 public:
  constexpr ColorSet() = default;
  constexpr explicit ColorSet(std::uint64_t bits) : bits_(bits) {}
  static constexpr ColorSet Range(int k) {  // {1, ..., k}
    return ColorSet(((std::uint64_t{1} << k) - 1) << 1);
  }
  static constexpr ColorSet Of(Color c) {
    return ColorSet(std::uint64_t{1} << c);
  }

  constexpr bool Contains(Color c) const { return (bits_ >> c) & 1U; }
  constexpr bool Empty() const { return bits_ == 0; }
  constexpr int Size() const { return std::popcount(bits_); }
  constexpr std::uint64_t bits() const { return bits_; }
  // Smallest member; 0 when empty.
  constexpr Color Min() const { return bits_ ? std::countr_zero(bits_) : 0; }

  constexpr void Insert(Color c) { bits_ |= std::uint64_t{1} << c; }
  constexpr void Erase(Color c) { bits_ &= ~(std::uint64_t{1} << c); }

  friend constexpr ColorSet operator|(ColorSet a, ColorSet b) {
    return ColorSet(a.bits_ | b.bits_);
  }
  friend constexpr ColorSet operator&(ColorSet a, ColorSet b) {
    return ColorSet(a.bits_ & b.bits_);
  }
  friend constexpr ColorSet operator-(ColorSet a, ColorSet b) {
    return ColorSet(a.bits_ & ~b.bits_);
  }
  friend constexpr bool operator==(ColorSet, ColorSet) = default;
  constexpr bool SubsetOf(ColorSet o) const { return (bits_ & ~o.bits_) == 0; }

  std::vector<Color> ToVector() const;
  std::string ToString() const;  // "{1,3}"

 private:
  std::uint64_t bits_ = 0;
};

// An edge k-coloring of G minus its uncolored edges. Stored as a dense color
// matrix plus per-vertex present sets. Raw writes (SetRaw) may leave the
// coloring improper; IsProper/Validate report that.
class PartialEdgeColoring {
 public:
  PartialEdgeColoring() = default;
  PartialEdgeColoring(std::shared_ptr<const Graph> g, int k);
  PartialEdgeColoring(const Graph& g, int k);

  const Graph& graph() const { return *graph_; }
  std::shared_ptr<const Graph> graph_ptr() const { return graph_; }
  int k() const { return k_; }
  int order() const { return graph_->order(); }

  Color ColorOf(Vertex a, Vertex b) const { return colors_[a * n_ + b]; }
  Color ColorOf(Edge e) const { return ColorOf(e.u, e.v); }
  bool IsColored(Edge e) const { return ColorOf(e) != 0; }

  ColorSet Present(Vertex v) const { return ColorSet(present_[v]); }
  ColorSet Missing(Vertex v) const { return ColorSet::Range(k_) - Present(v); }
  ColorSet MissingUnion(VertexMask vs) const;

  // Neighbour w with φ(vw) = c, or -1.
  Vertex NeighborVia(Vertex v, Color c) const;

  std::vector<Edge> Uncolored() const;
  int UncoloredCount() const;
  bool IsFull() const { return UncoloredCount() == 0; }

  // Checked mutators; all throw StateError on violation.
  void Assign(Edge e, Color c);   // e uncolored, c missing at both ends
  void Uncolor(Edge e);           // e colored
  void Recolor(Edge e, Color c);  // c missing at both ends ignoring e itself

  // Unchecked write used by swaps inside transactions. c may be 0.
  void SetRaw(Edge e, Color c);

  bool IsProper() const;
  // Proper, colors within [1, k], only graph edges colored, present sets
  // consistent with the color matrix.
  bool Validate() const;
  // First violation in human-readable form, empty when valid.
  std::string Diagnose() const;

  bool IsElementary(VertexMask vs) const;

  // All colored edges in Graph::Edges() order with their colors.
  std::vector<std::pair<Edge, Color>> Assignment() const;

  friend bool operator==(const PartialEdgeColoring& a,
                         const PartialEdgeColoring& b) {
    return a.k_ == b.k_ && a.n_ == b.n_ && a.colors_ == b.colors_ &&
           *a.graph_ == *b.graph_;
  }

 private:
  void CheckEdge(Edge e) const;
  void RebuildPresent(Vertex v);

  std::shared_ptr<const Graph> graph_;
  int k_ = 0;
  int n_ = 0;
  std::vector<std::uint8_t> colors_;  // symmetric n×n
  std::vector<std::uint64_t> present_;
};

// Text form: header "k=<k> uncolored=<count>", then one "u v c" line per
// graph edge in lexicographic order, c = 0 for uncolored edges.
std::string SerializeColoring(const PartialEdgeColoring& c);
PartialEdgeColoring ParseColoring(std::shared_ptr<const Graph> g,
                                  const std::string& text);

// For a full coloring, the number of vertices missing each color 1..k
// (index 0 unused).
std::vector<int> DeficiencyCounts(const PartialEdgeColoring& c);

}  // namespace ecrit
