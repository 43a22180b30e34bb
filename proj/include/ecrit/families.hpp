#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ecrit/coloring.hpp"
#include "ecrit/exact_solver.hpp"

namespace ecrit {

class FamilyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Round-robin 1-factorization of K_{2m}: vertex 2m−1 is fixed and round r
// pairs it with r; other pairs (r+i, r−i) mod (2m−1).
PartialEdgeColoring RoundRobinColoring(int n);

Graph CompleteBipartite(int a, int b);  // parts [0, a) and [a, a+b)
Graph Hypercube(int dim);
Graph Circulant(int n, const std::vector<int>& jumps);

// A Δ-regular graph together with a Δ-coloring certifying Class 1.
struct Class1Member {
  std::string name;
  Graph graph;
  PartialEdgeColoring certificate;
};

// complete-even: K_n for even n (round-robin certificate).
// bipartite-complete: K_{d,d}; hypercube: Q_dim (solver certificate).
// circulant: C_n(jumps); FamilyError if it is not regular or is Class 2.
Class1Member CompleteEvenMember(int n);
Class1Member BipartiteCompleteMember(int d);
Class1Member HypercubeMember(int dim);
Class1Member CirculantMember(int n, const std::vector<int>& jumps,
                             const SolverOptions& opts = {});

// Every vertex-splitting of g up to isomorphism of the resulting graph.
// Only one vertex per automorphism orbit is split.
std::vector<SplitSpec> SplitSpecsUpToIsomorphism(const Graph& g);

}  // namespace ecrit
