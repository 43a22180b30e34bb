#include "ecrit/multifan.hpp"

#include <algorithm>

#include "ecrit/errors.hpp"

namespace ecrit {

VertexMask Multifan::VertexSet() const {
  VertexMask m = Bit(r);
  for (Vertex s : leaves) m |= Bit(s);
  return m;
}

std::string Multifan::ToString() const {
  std::string s = "r=" + std::to_string(r) + " leaves=";
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    s += (i ? "," : "") + std::to_string(leaves[i]);
  }
  return s;
}

Multifan GrowMultifan(const PartialEdgeColoring& c, Vertex r, Vertex s1) {
  if (!c.graph().HasEdge(r, s1) || c.ColorOf(r, s1) != 0) {
    throw PreconditionError("multifan root edge " +
                            ToString(Edge::Of(r, s1)) + " must be uncolored");
  }
  Multifan f{r, {s1}};
  VertexMask in_fan = Bit(r) | Bit(s1);
  ColorSet leaf_missing = c.Missing(s1);
  for (bool grown = true; grown;) {
    grown = false;
    for (VertexMask m = c.graph().Neighbors(r) & ~in_fan; m; m &= m - 1) {
      const Vertex w = std::countr_zero(m);
      const Color col = c.ColorOf(r, w);
      if (col && leaf_missing.Contains(col)) {
        f.leaves.push_back(w);
        in_fan |= Bit(w);
        leaf_missing = leaf_missing | c.Missing(w);
        grown = true;
        break;
      }
    }
  }
  return f;
}

bool IsMultifan(const PartialEdgeColoring& c, const Multifan& f) {
  if (f.leaves.empty()) return false;
  VertexMask seen = Bit(f.r);
  for (std::size_t i = 0; i < f.leaves.size(); ++i) {
    const Vertex s = f.leaves[i];
    if ((seen >> s) & 1U) return false;
    seen |= Bit(s);
    if (!c.graph().HasEdge(f.r, s)) return false;
    const Color col = c.ColorOf(f.r, s);
    if (i == 0) {
      if (col != 0) return false;
      continue;
    }
    bool ok = false;
    for (std::size_t j = 0; j < i && !ok; ++j) {
      ok = col != 0 && c.Missing(f.leaves[j]).Contains(col);
    }
    if (!ok) return false;
  }
  return true;
}

AlphaSequences::AlphaSequences(const PartialEdgeColoring& c,
                               const Multifan& f) {
  const int p = static_cast<int>(f.leaves.size());
  leaf_of_color_.assign(c.k() + 1, -1);
  std::string clashes;
  for (int i = 0; i < p; ++i) {
    for (Color col : c.Missing(f.leaves[i]).ToVector()) {
      if (leaf_of_color_[col] >= 0) {
        clashes += " " + std::to_string(col);
      } else {
        leaf_of_color_[col] = i;
      }
    }
  }
  if (c.Missing(f.r).bits() & c.MissingUnion(f.VertexSet() & ~Bit(f.r)).bits()) {
    clashes += " (center)";
  }
  if (!clashes.empty()) {
    throw StateError("fan is not elementary; repeated missing colors:" +
                     clashes);
  }
  parent_.assign(p, -1);
  anchor_.assign(p, 0);
  for (int i = 1; i < p; ++i) {
    const Color col = c.ColorOf(f.r, f.leaves[i]);
    const int j = leaf_of_color_[col];
    if (j < 0 || j >= i) {
      throw StateError("leaf " + std::to_string(f.leaves[i]) +
                       " violates the fan condition");
    }
    parent_[i] = j;
    anchor_[i] = j == 0 ? col : anchor_[j];
  }
  // Leaves with no children end maximal sequences.
  std::vector<bool> has_child(p, false);
  for (int i = 1; i < p; ++i) has_child[parent_[i]] = true;
  for (int i = 1; i < p; ++i) {
    if (has_child[i]) continue;
    std::vector<int> walk;
    for (int v = i; v > 0; v = parent_[v]) walk.push_back(v);
    std::reverse(walk.begin(), walk.end());
    sequences_.emplace_back(anchor_[i], std::move(walk));
  }
  std::sort(sequences_.begin(), sequences_.end());
}

int AlphaSequences::LeafOf(Color color) const {
  if (color <= 0 || color >= static_cast<int>(leaf_of_color_.size())) return -1;
  return leaf_of_color_[color];
}

Color AlphaSequences::AnchorOf(Color color) const {
  const int leaf = LeafOf(color);
  if (leaf < 0) return 0;
  return leaf == 0 ? color : anchor_[leaf];
}

bool AlphaSequences::Precedes(Color delta, Color lambda) const {
  if (delta == lambda) return false;
  const Color anchor = AnchorOf(delta);
  if (anchor == 0 || anchor != AnchorOf(lambda)) return false;
  if (delta == anchor) return true;
  const int ld = LeafOf(delta);
  for (int v = parent_[LeafOf(lambda)]; v > 0; v = parent_[v]) {
    if (v == ld) return true;
  }
  return false;
}

}  // namespace ecrit
