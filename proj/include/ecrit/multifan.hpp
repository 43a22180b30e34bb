#pragma once

#include <string>
#include <vector>

#include "ecrit/coloring.hpp"

namespace ecrit {

// Center r, leaves s_1..s_p with rs_1 uncolored; every later leaf's edge
// color is missing at some earlier leaf.
struct Multifan {
  Vertex r = 0;
  std::vector<Vertex> leaves;

  VertexMask VertexSet() const;  // r and all leaves
  std::string ToString() const;
};

// Greedy closure: repeatedly append the smallest-index neighbour of r whose
// edge color is missing at a current leaf. Throws PreconditionError unless
// rs1 is an uncolored edge.
Multifan GrowMultifan(const PartialEdgeColoring& c, Vertex r, Vertex s1);

// Independent re-check of the defining condition and distinctness.
bool IsMultifan(const PartialEdgeColoring& c, const Multifan& f);

// Leaves induced by each color missing at s_1. On an elementary fan the
// leaves s_2..s_p form a forest: the parent of s_i is the unique leaf
// missing φ(rs_i), and a root-to-node walk is an α-sequence.
class AlphaSequences {
 public:
  // Throws StateError listing the clashing colors if V(F) is not elementary.
  AlphaSequences(const PartialEdgeColoring& c, const Multifan& f);

  // Anchor color in φ̄(s_1) inducing `color`, or 0 if `color` is not missing
  // at any leaf.
  Color AnchorOf(Color color) const;
  // Leaf index (0-based) at which `color` is missing, or -1.
  int LeafOf(Color color) const;
  // δ ≺ λ: same anchor and either δ is the anchor (λ ≠ δ) or δ's leaf is a
  // strict ancestor of λ's leaf.
  bool Precedes(Color delta, Color lambda) const;

  // Maximal α-sequences (root-to-leaf walks of the forest), as leaf indices.
  const std::vector<std::pair<Color, std::vector<int>>>& sequences() const {
    return sequences_;
  }

 private:
  std::vector<int> parent_;  // per leaf index; -1 for s_1, 0 for leaves under s_1
  std::vector<Color> anchor_;
  std::vector<int> leaf_of_color_;
  std::vector<std::pair<Color, std::vector<int>>> sequences_;
};

}  // namespace ecrit
