#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "ecrit/canonical.hpp"
#include "ecrit/errors.hpp"
#include "ecrit/fixtures.hpp"
#include "ecrit/graph.hpp"
#include "ecrit/graph6.hpp"
#include "ecrit/multigraph.hpp"

using namespace ecrit;

TEST(Graph, BasicMutation) {
  Graph g(4);
  g.AddEdge(0, 1);
  g.AddEdge(2, 1);
  EXPECT_EQ(g.size(), 2);
  EXPECT_TRUE(g.HasEdge(1, 0));
  EXPECT_EQ(g.Degree(1), 2);
  g.RemoveEdge(1, 0);
  EXPECT_EQ(g.size(), 1);
  EXPECT_TRUE(g.IsValid());
  EXPECT_EQ(g.Edges(), (std::vector<Edge>{Edge::Of(1, 2)}));
}

TEST(Graph, OverfullExamples) {
  EXPECT_TRUE(IsOverfull(BuiltinFixture("triangle")));
  for (const char* name : {"c5", "k5", "k7"}) {
    const Graph g = BuiltinFixture(name);
    EXPECT_TRUE(IsRegular(g)) << name;
    EXPECT_TRUE(IsOverfull(g)) << name;
  }
  EXPECT_FALSE(IsOverfull(BuiltinFixture("k4")));
  EXPECT_FALSE(IsOverfull(BuiltinFixture("pstar")));
  EXPECT_FALSE(IsOverfull(Graph(0)));
}

TEST(Graph, FullDeficiencyPairs) {
  EXPECT_EQ(FullDeficiencyPairs(BuiltinFixture("triangle")).size(), 3U);
  EXPECT_TRUE(FullDeficiencyPairs(BuiltinFixture("k4")).empty());
  // The split vertex 3 (degree 2) pairs with its twin 4 and its other
  // neighbour 0.
  const auto pairs = FullDeficiencyPairs(BuiltinFixture("splitk4"));
  EXPECT_EQ(pairs, (std::vector<Edge>{Edge::Of(0, 3), Edge::Of(3, 4)}));
}

TEST(Graph, DistanceToSet) {
  const Graph p = PathGraph(5);
  EXPECT_EQ(DistanceToSet(p, 4, Bit(0)), 4);
  EXPECT_EQ(DistanceToSet(p, 2, Bit(0) | Bit(4)), 2);
  EXPECT_EQ(DistanceToSet(p, 0, Bit(0)), 0);
  const Graph two = DisjointUnion(PathGraph(2), PathGraph(2));
  EXPECT_EQ(DistanceToSet(two, 0, Bit(3)), kUnreachable);
}

TEST(Graph, SplitVertexShape) {
  const Graph k4 = CompleteGraph(4);
  const Graph h = SplitVertex(k4, {3, Bit(0)});
  EXPECT_EQ(h.order(), 5);
  EXPECT_EQ(h.size(), 7);
  EXPECT_EQ(h.Degree(3), 2);
  EXPECT_EQ(h.Degree(4), 3);
  EXPECT_TRUE(h.HasEdge(3, 4));
  EXPECT_EQ(h, BuiltinFixture("splitk4"));
}

TEST(Multigraph, IdentifyTriangle) {
  const Identification id = IdentifyPair(BuiltinFixture("triangle"), 0, 1);
  EXPECT_EQ(id.graph.n, 2);
  EXPECT_EQ(id.graph.Multiplicity(0, 1), 2);
  EXPECT_EQ(id.graph.Degree(0), 2);
}

TEST(Multigraph, IdentifyRejectsNonAdjacent) {
  EXPECT_THROW(IdentifyPair(PathGraph(3), 0, 2), PreconditionError);
}

TEST(Multigraph, SplitThenIdentifyRestoresGraph) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 6);
    Graph g(n);
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (rng() % 2) g.AddEdge(u, v);
      }
    }
    const Vertex v = static_cast<Vertex>(rng() % n);
    const VertexMask nb = g.Neighbors(v);
    if (std::popcount(nb) < 2) continue;
    VertexMask part = nb & rng();
    if (part == 0 || part == nb) part = nb & (nb - 1);
    const Graph h = SplitVertex(g, {v, part});
    const Identification id = IdentifyPair(h, v, n);
    EXPECT_EQ(id.graph.Degree(id.vertex_map[v]), h.Degree(v) + h.Degree(n) - 2);
    // The merge is the identity on g because the new vertex is the last one.
    EXPECT_EQ(id.graph.n, n);
    EXPECT_EQ(id.graph.edges, g.Edges());
  }
}

TEST(Multigraph, SplitK4IdentifiesToK4) {
  const Identification id = IdentifyPair(BuiltinFixture("splitk4"), 3, 4);
  EXPECT_TRUE(id.graph.IsRegular());
  EXPECT_EQ(id.graph.MaxDegree(), 3);
  Graph simple(id.graph.n);
  for (const Edge& e : id.graph.edges) {
    EXPECT_EQ(id.graph.Multiplicity(e.u, e.v), 1);
    simple.AddEdge(e.u, e.v);
  }
  EXPECT_TRUE(Isomorphic(simple, CompleteGraph(4)));
}

TEST(Graph6, KnownStrings) {
  EXPECT_EQ(ToGraph6(BuiltinFixture("triangle")), "Bw");
  EXPECT_EQ(ToGraph6(BuiltinFixture("k4")), "C~");
  EXPECT_EQ(ToGraph6(BuiltinFixture("c5")), "Dhc");
  EXPECT_EQ(ToGraph6(PetersenGraph()), "IheA@GUAo");
  EXPECT_EQ(ToGraph6(Graph(0)), "?");
}

TEST(Graph6, RoundTripFixtures) {
  for (const auto& name : BuiltinFixtureNames()) {
    const Graph g = BuiltinFixture(name);
    EXPECT_EQ(FromGraph6(ToGraph6(g)), g) << name;
  }
  EXPECT_EQ(FromGraph6(">>graph6<<C~\n"), CompleteGraph(4));
}

TEST(Graph6, RoundTripRandomLarge) {
  std::mt19937_64 rng(3);
  for (int n : {0, 1, 2, 30, 62, 63, 64}) {
    Graph g(n);
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (rng() % 3 == 0) g.AddEdge(u, v);
      }
    }
    EXPECT_EQ(FromGraph6(ToGraph6(g)), g) << n;
  }
}

TEST(Graph6, ErrorsCarryOffsets) {
  try {
    FromGraph6("C~x");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 2U);
  }
  try {
    FromGraph6("C");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 1U);
  }
  try {
    FromGraph6("C\x1f");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 1U);
  }
  EXPECT_THROW(FromGraph6(""), ParseError);
  EXPECT_THROW(FromGraph6("Bx"), ParseError);  // nonzero padding bits
}

TEST(Canonical, InvariantUnderRelabeling) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 8);
    Graph g(n);
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (rng() % 2) g.AddEdge(u, v);
      }
    }
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Graph h(n);
    for (const Edge& e : g.Edges()) h.AddEdge(perm[e.u], perm[e.v]);
    EXPECT_EQ(CanonicalKey(g), CanonicalKey(h));
    EXPECT_TRUE(Isomorphic(g, h));
  }
  EXPECT_FALSE(Isomorphic(CycleGraph(6), DisjointUnion(CycleGraph(3), CycleGraph(3))));
}

TEST(Canonical, PetersenOrbitsAreTransitive) {
  const CanonicalLabeling cl = Canonicalize(PetersenGraph());
  for (int v = 0; v < 10; ++v) EXPECT_EQ(cl.orbit[v], 0);
  EXPECT_EQ(cl.last_orbit, PetersenGraph().AllVertices());
}
