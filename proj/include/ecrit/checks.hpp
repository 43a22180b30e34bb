#pragma once

#include <vector>

#include "ecrit/coloring.hpp"
#include "ecrit/kierstead.hpp"
#include "ecrit/multifan.hpp"
#include "ecrit/report.hpp"
#include "ecrit/witnesses.hpp"

namespace ecrit {

// Conclusion checkers for one concrete instance. Each returns a report whose
// instances/vacuous counters say whether the hypothesis applied; failures
// carry a counterexample. Callers are responsible for the global hypotheses
// (Class 2 host, critical uncolored edge, Δ-critical host for forks).

// Both ends of a critical edge xy: x has at least Δ − d(y) + 1 neighbours of
// degree Δ other than y, and symmetrically.
VerificationReport CheckVal(const Graph& g, Edge e);

// Full coloring: every color is missing at a number of vertices with the
// parity of n. Throws PreconditionError if some edge is uncolored.
VerificationReport CheckParity(const PartialEdgeColoring& c);

// The coloring of G minus its uncolored edges, on that smaller graph.
PartialEdgeColoring DropUncolored(const PartialEdgeColoring& c);

struct FanReports {
  VerificationReport basic;  // elementary vertex set, center/leaf linkage
  VerificationReport pairs;  // leaf/leaf linkage by inducing colors
};
FanReports CheckFanLemmas(const PartialEdgeColoring& c, const Multifan& f);

// Four-vertex path: elementary when min(d(v2), d(v3)) < Δ, and
// |φ̄(v3) ∩ (φ̄(v0) ∪ φ̄(v1))| ≤ 1.
VerificationReport CheckKierstead4(const PartialEdgeColoring& c,
                                   const KiersteadPath& k);

struct K5Reports {
  VerificationReport degrees;    // |Γ| ≥ 3 ⇒ d(b) = d(u) = Δ
  VerificationReport companion;  // |Γ| ≥ 4, companion x ⇒ d(x) = Δ
};
// Γ = φ̄(t) ∩ (φ̄(a) ∪ φ̄(b)) for K = (a,b,u,s,t). Companions are all x ∉ V(K)
// with (a,b,u,x) a Kierstead path.
K5Reports CheckK5Claims(const PartialEdgeColoring& c, const KiersteadPath& k);

// Hypothesis φ̄(x) ∪ φ̄(y) ⊆ φ̄(a) ∪ φ̄(b); conclusion max(d(x), d(y)) = Δ.
VerificationReport CheckShortKite(const PartialEdgeColoring& c,
                                  const StructureWitness& w);
// Conclusion |φ̄(t1) ∩ φ̄(t2) ∩ (φ̄(a) ∪ φ̄(b))| ≤ 4.
VerificationReport CheckKite(const PartialEdgeColoring& c,
                             const StructureWitness& w);
// Every vertex tuple carrying the fork's edge pattern with
// Δ ≥ d(a) + d(t1) + d(t2) + 1 is an instance; a fork among them fails.
VerificationReport CheckForkAbsence(const PartialEdgeColoring& c);

struct PairReports {
  VerificationReport lemma;      // pair degree and linkage properties
  VerificationReport corollary;  // at most one Δ−1 vertex when 4Δ ≥ 3(n−1)
};
// Requires (a,b) to be a full-deficiency pair with ab critical in a Class 2
// graph (not re-checked here).
PairReports CheckFullDeficiencyPair(const Graph& g, Vertex a, Vertex b);

// 4Δ ≥ 3(n−1), the degree bound shared by the pair results.
bool MeetsThreeQuarterBound(int delta, int n);

}  // namespace ecrit
