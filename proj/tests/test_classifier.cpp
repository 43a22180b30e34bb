#include <gtest/gtest.h>

#include <random>

#include "ecrit/classifier.hpp"
#include "ecrit/errors.hpp"
#include "ecrit/families.hpp"
#include "ecrit/fixtures.hpp"
#include "oracles.hpp"

using namespace ecrit;

namespace {

Graph RandomGraph(std::mt19937_64& rng, int n, int percent) {
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (static_cast<int>(rng() % 100) < percent) g.AddEdge(u, v);
    }
  }
  return g;
}

}  // namespace

TEST(Classifier, FixtureIndices) {
  EXPECT_EQ(ExactChromaticIndex(BuiltinFixture("k4")), 3);
  EXPECT_EQ(ExactChromaticIndex(BuiltinFixture("k6")), 5);
  EXPECT_EQ(ExactChromaticIndex(BuiltinFixture("pstar")), 4);
  EXPECT_EQ(ExactChromaticIndex(BuiltinFixture("c5")), 3);
  EXPECT_EQ(ExactChromaticIndex(PetersenGraph()), 4);
  EXPECT_EQ(Classify(BuiltinFixture("k7")), EdgeClass::kClass2);
  EXPECT_EQ(Classify(BuiltinFixture("c4")), EdgeClass::kClass1);
}

TEST(Classifier, AgreesWithBruteForceOnSmallGraphs) {
  for (const char* name : {"triangle", "c4", "c5", "k4", "k5", "splitk4", "pstar"}) {
    const Graph g = BuiltinFixture(name);
    EXPECT_EQ(ExactChromaticIndex(g), oracle::BruteChromaticIndex(g)) << name;
  }
  std::mt19937_64 rng(23);
  int checked = 0;
  while (checked < 150) {
    const Graph g = RandomGraph(rng, 3 + static_cast<int>(rng() % 5), 50);
    if (g.size() == 0 || g.size() > 10) continue;
    ASSERT_EQ(ExactChromaticIndex(g), oracle::BruteChromaticIndex(g));
    ++checked;
  }
}

TEST(Classifier, KonigOnBipartite) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 60; ++trial) {
    const int a = 1 + static_cast<int>(rng() % 5);
    const int b = 1 + static_cast<int>(rng() % 5);
    Graph g(a + b);
    for (int u = 0; u < a; ++u) {
      for (int v = a; v < a + b; ++v) {
        if (rng() % 2) g.AddEdge(u, v);
      }
    }
    if (g.size() == 0) continue;
    EXPECT_EQ(ExactChromaticIndex(g), MaxDegree(g));
  }
}

TEST(Classifier, VizingColoringIsProperWithinDeltaPlusOne) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = RandomGraph(rng, 2 + static_cast<int>(rng() % 15), 20 + trial % 60);
    const PartialEdgeColoring c = VizingPlusOneColoring(g);
    ASSERT_TRUE(c.Validate()) << c.Diagnose();
    EXPECT_TRUE(c.IsFull());
    EXPECT_EQ(c.k(), MaxDegree(g) + 1);
  }
}

TEST(Classifier, Criticality) {
  for (const char* name : {"triangle", "c5", "pstar", "splitk4"}) {
    EXPECT_TRUE(IsDeltaCritical(BuiltinFixture(name))) << name;
  }
  // K5 and K7 are Class 2 but deleting an edge leaves them Class 2.
  EXPECT_FALSE(IsDeltaCritical(BuiltinFixture("k5")));
  EXPECT_FALSE(IsDeltaCritical(BuiltinFixture("k7")));
  EXPECT_FALSE(IsDeltaCritical(PetersenGraph()));
  EXPECT_FALSE(IsDeltaCritical(BuiltinFixture("k4")));
  EXPECT_THROW(IsCriticalEdge(BuiltinFixture("k4"), Edge::Of(0, 1)), PreconditionError);
}

TEST(Classifier, ColoringOfMinusEdge) {
  const Graph g = BuiltinFixture("pstar");
  for (const Edge& e : g.Edges()) {
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      const PartialEdgeColoring c = DeltaColoringOfMinusE(g, e, seed);
      EXPECT_TRUE(c.Validate());
      EXPECT_EQ(c.k(), 3);
      EXPECT_EQ(c.UncoloredCount(), 1);
      EXPECT_EQ(c.ColorOf(e.u, e.v), 0);
    }
    EXPECT_EQ(DeltaColoringOfMinusE(g, e, 1), DeltaColoringOfMinusE(g, e, 1));
  }
  EXPECT_THROW(DeltaColoringOfMinusE(BuiltinFixture("k5"), Edge::Of(0, 1)), StateError);
}

TEST(Families, RoundRobinIsOneFactorization) {
  for (int n : {2, 4, 6, 8, 10}) {
    const PartialEdgeColoring c = RoundRobinColoring(n);
    EXPECT_TRUE(c.Validate());
    EXPECT_TRUE(c.IsFull());
    EXPECT_EQ(c.k(), n - 1);
    EXPECT_EQ(c.graph(), CompleteGraph(n));
  }
}

TEST(Families, MembersCarryValidCertificates) {
  const std::vector<Class1Member> members = {
      CompleteEvenMember(6), BipartiteCompleteMember(3), HypercubeMember(3),
      CirculantMember(8, {1, 2, 3})};
  for (const auto& m : members) {
    EXPECT_TRUE(IsRegular(m.graph)) << m.name;
    EXPECT_TRUE(m.certificate.Validate()) << m.name;
    EXPECT_TRUE(m.certificate.IsFull()) << m.name;
    EXPECT_EQ(m.certificate.k(), MaxDegree(m.graph)) << m.name;
  }
  EXPECT_EQ(Hypercube(3).size(), 12);
  EXPECT_EQ(CompleteBipartite(2, 3).size(), 6);
  // C5(1) is an odd cycle, hence Class 2.
  EXPECT_THROW(CirculantMember(5, {1}), FamilyError);
}

TEST(Families, SplitSpecsRespectSymmetry) {
  // K4: one orbit, parts of size 1 or 2 of the 3 neighbours; up to
  // isomorphism the split graph depends only on the smaller part size.
  EXPECT_EQ(SplitSpecsUpToIsomorphism(CompleteGraph(4)).size(), 1U);
  const auto k6 = SplitSpecsUpToIsomorphism(CompleteGraph(6));
  EXPECT_EQ(k6.size(), 2U);
  for (const SplitSpec& s : k6) {
    const Graph h = SplitVertex(CompleteGraph(6), s);
    EXPECT_EQ(h.order(), 7);
  }
}
