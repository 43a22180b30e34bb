#pragma once

#include <cstdint>

#include "ecrit/coloring.hpp"
#include "ecrit/exact_solver.hpp"

namespace ecrit {

enum class EdgeClass { kClass1 = 1, kClass2 = 2 };

// Full proper (Δ+1)-coloring built from fan rotations and Kempe swaps
// (Misra-Gries). Requires n ≥ 2.
PartialEdgeColoring VizingPlusOneColoring(const Graph& g);

// Δ if a Δ-coloring exists, else Δ+1. Throws BudgetExceeded.
int ExactChromaticIndex(const Graph& g, const SolverOptions& opts = {});
EdgeClass Classify(const Graph& g, const SolverOptions& opts = {});

// True iff G − e has a Δ(G)-coloring. Throws PreconditionError if g is
// Class 1.
bool IsCriticalEdge(const Graph& g, Edge e, const SolverOptions& opts = {});
// Same test without re-proving that g is Class 2.
bool EdgeHasDeltaColoringOfMinusE(const Graph& g, Edge e,
                                  const SolverOptions& opts = {});

// Connected, Class 2, every edge critical.
bool IsDeltaCritical(const Graph& g, const SolverOptions& opts = {});

// A Δ(G)-coloring of G − e with e uncolored, deterministic in `seed`.
// Throws StateError when none exists (e is not critical).
PartialEdgeColoring DeltaColoringOfMinusE(const Graph& g, Edge e,
                                          std::uint64_t seed = 0,
                                          const SolverOptions& opts = {});

}  // namespace ecrit
