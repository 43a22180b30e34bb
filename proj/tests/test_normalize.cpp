#include <gtest/gtest.h>

#include <random>

#include "ecrit/classifier.hpp"
#include "ecrit/errors.hpp"
#include "ecrit/exact_solver.hpp"
#include "ecrit/fixtures.hpp"
#include "ecrit/graph6.hpp"
#include "ecrit/kierstead.hpp"
#include "ecrit/normalize.hpp"
#include "ecrit/swap_script.hpp"

using namespace ecrit;

namespace {

int GammaSize(const PartialEdgeColoring& c, const KiersteadPath& k) {
  const ColorSet ab = c.Missing(k.v[0]) | c.Missing(k.v[1]);
  return (c.Missing(k.v[4]) & ab).Size();
}

PartialEdgeColoring Planted() {
  return ParseColoring(std::make_shared<const Graph>(FromGraph6("DB{")),
                       "k=4 uncolored=1\n0 4 1\n1 3 0\n1 4 2\n2 3 1\n2 4 3\n3 4 4\n");
}

}  // namespace

TEST(Normalize, PlantedHostYieldsFullColoring) {
  const PartialEdgeColoring c = Planted();
  const NormalizationOutcome o = NormalizeK5(c, {{1, 3, 2, 4, 0}});
  EXPECT_EQ(o.kind, NormalizationOutcome::Kind::kProperColoring);
  EXPECT_TRUE(o.coloring.IsFull());
  EXPECT_TRUE(o.coloring.Validate());
  EXPECT_LE(o.swaps, kNormalizeSwapBound);
}

TEST(Normalize, RejectsBadInput) {
  const PartialEdgeColoring c = Planted();
  EXPECT_THROW(NormalizeK5(c, {{1, 3, 2, 4}}), PreconditionError);
  EXPECT_THROW(NormalizeK5(c, {{3, 1, 2, 4, 0}}), PreconditionError);
  const Graph tri = BuiltinFixture("triangle");
  EXPECT_THROW(NormalizeK5(PartialEdgeColoring(tri, 2), {{0, 1, 2, 0, 1}}),
               PreconditionError);
}

// Every 5-vertex path with |Γ| ≥ 3 on random Class 1 hosts: the outcome
// must be normalized (and reproducible from its trace) or a full coloring.
TEST(Normalize, RandomClass1HostsAlwaysResolve) {
  std::mt19937_64 rng(43);
  int instances = 0;
  int normalized = 0;
  int already = 0;
  for (int trial = 0; trial < 3000 && instances < 400; ++trial) {
    const int n = 5 + static_cast<int>(rng() % 3);
    Graph g(n);
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (rng() % 100 < 60) g.AddEdge(u, v);
      }
    }
    const auto edges = g.Edges();
    if (edges.empty()) continue;
    const Edge e = edges[rng() % edges.size()];
    SolverOptions opts;
    opts.seed = rng();
    const auto c = SolveEdgeColoring(g, MaxDegree(g), {e}, opts);
    if (!c) continue;
    for (const KiersteadPath& k : FindKiersteadPaths(*c, 4)) {
      if (GammaSize(*c, k) < 3) continue;
      ++instances;
      const NormalizationOutcome o = NormalizeK5(*c, k);
      ASSERT_LE(o.swaps, kNormalizeSwapBound);
      ASSERT_TRUE(o.coloring.Validate()) << SerializeColoring(*c) << k.ToString();
      if (o.kind == NormalizationOutcome::Kind::kProperColoring) {
        ASSERT_TRUE(o.coloring.IsFull());
        continue;
      }
      ++normalized;
      ASSERT_TRUE(IsNormalizedK5(o.coloring, k));
      ASSERT_EQ(ApplyScript(*c, o.trace).coloring, o.coloring);
      ASSERT_TRUE(
          ReplayProofScript(*c, o.trace, ReplayExpectation::kProperPartial).Passed());
      if (IsNormalizedK5(*c, k)) {
        ++already;
        EXPECT_TRUE(o.trace.steps.empty());
        EXPECT_EQ(o.coloring, *c);
      }
    }
  }
  EXPECT_GT(instances, 50);
  EXPECT_GT(normalized, 0);
}
