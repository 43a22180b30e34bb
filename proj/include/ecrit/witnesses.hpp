#pragma once

#include <string>
#include <vector>

#include "ecrit/coloring.hpp"

namespace ecrit {

enum class WitnessKind { kShortKite, kKite, kFork };

const char* KindName(WitnessKind k);
WitnessKind ParseKindName(const std::string& s);  // throws std::out_of_range

// Role order per kind:
//   short-kite  a b c u x y          edges ab ac bu cu ux uy
//   kite        a b c u s1 s2 t1 t2  edges ab ac bu cu us1 us2 s1t1 s2t2
//   fork        a b u s1 s2 t1 t2    edges ab bu us1 us2 s1t1 s2t2
// ab is always the uncolored edge.
struct StructureWitness {
  WitnessKind kind = WitnessKind::kShortKite;
  std::vector<Vertex> v;

  static const std::vector<std::string>& Roles(WitnessKind k);
  Vertex At(const std::string& role) const;
  std::string ToString() const;  // "shortkite a=0 b=1 ..."
  friend bool operator==(const StructureWitness&,
                         const StructureWitness&) = default;
  friend auto operator<=>(const StructureWitness&,
                          const StructureWitness&) = default;
};

// Every labeled embedding satisfying the defining edges and the color
// conditions of its kind, both orientations of the uncolored edge, sorted.
//   short-kite: (a,b,u,x) and (b,a,c,u,y) are Kierstead paths.
//   kite: (a,b,u,s1,t1) and (b,a,c,u,s2,t2) are Kierstead paths and
//         φ(s1t1) = φ(s2t2).
//   fork: φ(bu) ∈ φ̄(a); φ(us1), φ(us2) ∈ φ̄(a) ∪ φ̄(b);
//         φ(s1t1) ∈ (φ̄(a) ∪ φ̄(b)) ∩ φ̄(t2); φ(s2t2) likewise with t1.
//         The conditions are symmetric in (s1,t1) ↔ (s2,t2); only s1 < s2
//         is reported.
// Requires exactly one uncolored edge.
std::vector<StructureWitness> FindStructureWitnesses(
    const PartialEdgeColoring& c, WitnessKind kind);

// Independent check of one witness against the definitions above.
bool IsStructureWitness(const PartialEdgeColoring& c,
                        const StructureWitness& w);

}  // namespace ecrit
