#include "ecrit/families.hpp"

#include <set>

#include "ecrit/canonical.hpp"
#include "ecrit/errors.hpp"
#include "ecrit/fixtures.hpp"

namespace ecrit {

PartialEdgeColoring RoundRobinColoring(int n) {
  if (n < 2 || n % 2 != 0) {
    throw FamilyError("round-robin needs an even order, got " +
                      std::to_string(n));
  }
  const int odd = n - 1;
  PartialEdgeColoring c(CompleteGraph(n), odd);
  for (int r = 0; r < odd; ++r) {
    c.Assign(Edge::Of(r, n - 1), r + 1);
    for (int i = 1; i <= (n - 2) / 2; ++i) {
      c.Assign(Edge::Of((r + i) % odd, (r - i + odd) % odd), r + 1);
    }
  }
  return c;
}

Graph CompleteBipartite(int a, int b) {
  Graph g(a + b);
  for (Vertex u = 0; u < a; ++u) {
    for (Vertex v = a; v < a + b; ++v) g.AddEdge(u, v);
  }
  return g;
}

Graph Hypercube(int dim) {
  const int n = 1 << dim;
  Graph g(n);
  for (Vertex v = 0; v < n; ++v) {
    for (int d = 0; d < dim; ++d) {
      if (v < (v ^ (1 << d))) g.AddEdge(v, v ^ (1 << d));
    }
  }
  return g;
}

Graph Circulant(int n, const std::vector<int>& jumps) {
  Graph g(n);
  for (int j : jumps) {
    if (j <= 0 || 2 * j > n) throw FamilyError("circulant jump out of range");
    for (Vertex v = 0; v < n; ++v) {
      const Vertex w = (v + j) % n;
      if (!g.HasEdge(v, w)) g.AddEdge(v, w);
    }
  }
  return g;
}

namespace {

Class1Member Certify(std::string name, Graph g, const SolverOptions& opts) {
  if (!IsRegular(g)) throw FamilyError(name + " is not regular");
  auto c = SolveEdgeColoring(g, MaxDegree(g), {}, opts);
  if (!c) throw FamilyError(name + " is Class 2");
  return {std::move(name), std::move(g), *std::move(c)};
}

}  // namespace

Class1Member CompleteEvenMember(int n) {
  PartialEdgeColoring c = RoundRobinColoring(n);
  return {"K" + std::to_string(n), c.graph(), c};
}

Class1Member BipartiteCompleteMember(int d) {
  return Certify("K" + std::to_string(d) + "," + std::to_string(d),
                 CompleteBipartite(d, d), {});
}

Class1Member HypercubeMember(int dim) {
  return Certify("Q" + std::to_string(dim), Hypercube(dim), {});
}

Class1Member CirculantMember(int n, const std::vector<int>& jumps,
                             const SolverOptions& opts) {
  std::string name = "C" + std::to_string(n) + "(";
  for (std::size_t i = 0; i < jumps.size(); ++i) {
    name += (i ? "," : "") + std::to_string(jumps[i]);
  }
  name += ")";
  return Certify(std::move(name), Circulant(n, jumps), opts);
}

std::vector<SplitSpec> SplitSpecsUpToIsomorphism(const Graph& g) {
  const CanonicalLabeling cl = Canonicalize(g);
  std::vector<SplitSpec> out;
  std::set<std::string> seen;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (cl.orbit[v] != v) continue;
    const std::vector<Vertex> nb = g.NeighborList(v);
    const int d = static_cast<int>(nb.size());
    for (std::uint64_t s = 1; s + 1 < (std::uint64_t{1} << d); ++s) {
      VertexMask part = 0;
      for (int i = 0; i < d; ++i) {
        if ((s >> i) & 1U) part |= Bit(nb[i]);
      }
      const SplitSpec spec{v, part};
      if (seen.insert(CanonicalKey(SplitVertex(g, spec))).second) {
        out.push_back(spec);
      }
    }
  }
  return out;
}

}  // namespace ecrit
