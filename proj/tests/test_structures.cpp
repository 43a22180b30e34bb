#include <gtest/gtest.h>

#include <random>

#include "ecrit/checks.hpp"
#include "ecrit/classifier.hpp"
#include "ecrit/errors.hpp"
#include "ecrit/exact_solver.hpp"
#include "ecrit/fixtures.hpp"
#include "ecrit/harness.hpp"
#include "ecrit/kierstead.hpp"
#include "ecrit/multifan.hpp"
#include "ecrit/witnesses.hpp"
#include "oracles.hpp"

using namespace ecrit;

namespace {

// Δ-colorings with one uncolored edge: critical hosts on up to six vertices
// plus random Class 1 hosts on seven and eight.
std::vector<PartialEdgeColoring> Colorings() {
  std::vector<PartialEdgeColoring> out;
  for (const Graph& g : CriticalCorpus(6, 1)) {
    for (const Edge& e : g.Edges()) {
      for (std::uint64_t seed = 0; seed < 2; ++seed) {
        out.push_back(DeltaColoringOfMinusE(g, e, seed));
      }
    }
  }
  std::mt19937_64 rng(41);
  while (out.size() < 700) {
    const int n = 7 + static_cast<int>(rng() % 2);
    Graph g(n);
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (rng() % 100 < 55) g.AddEdge(u, v);
      }
    }
    const auto edges = g.Edges();
    if (edges.empty()) continue;
    const Edge e = edges[rng() % edges.size()];
    SolverOptions opts;
    opts.seed = rng();
    if (auto c = SolveEdgeColoring(g, MaxDegree(g), {e}, opts)) out.push_back(*c);
  }
  return out;
}

const std::vector<PartialEdgeColoring>& Corpus() {
  static const std::vector<PartialEdgeColoring> c = Colorings();
  return c;
}

}  // namespace

TEST(Kierstead, PathsMatchDefinition) {
  for (const PartialEdgeColoring& c : Corpus()) {
    for (int p = 1; p <= 4; ++p) {
      for (const KiersteadPath& k : FindKiersteadPaths(c, p)) {
        ASSERT_TRUE(oracle::IsKPath(c, k.v));
        ASSERT_EQ(k.length(), p);
      }
    }
  }
}

TEST(Kierstead, FourEdgeCountMatchesBruteForce) {
  int checked = 0;
  for (const PartialEdgeColoring& c : Corpus()) {
    if (c.order() > 7 || ++checked > 200) continue;
    std::size_t brute = 0;
    const int n = c.order();
    std::vector<int> v(5);
    for (v[0] = 0; v[0] < n; ++v[0])
      for (v[1] = 0; v[1] < n; ++v[1])
        for (v[2] = 0; v[2] < n; ++v[2])
          for (v[3] = 0; v[3] < n; ++v[3])
            for (v[4] = 0; v[4] < n; ++v[4]) brute += oracle::IsKPath(c, v);
    ASSERT_EQ(FindKiersteadPaths(c, 4).size(), brute);
  }
  EXPECT_GT(checked, 0);
}

class WitnessSearch : public ::testing::TestWithParam<WitnessKind> {};

TEST_P(WitnessSearch, MatchesBruteForce) {
  const WitnessKind kind = GetParam();
  int nonempty = 0;
  int checked = 0;
  for (const PartialEdgeColoring& c : Corpus()) {
    if (++checked % 3 != 0) continue;
    const auto fast = FindStructureWitnesses(c, kind);
    ASSERT_EQ(fast, oracle::BruteWitnesses(c, kind)) << SerializeColoring(c);
    for (const auto& w : fast) ASSERT_TRUE(IsStructureWitness(c, w));
    nonempty += !fast.empty();
  }
  RecordProperty("nonempty", nonempty);
}

INSTANTIATE_TEST_SUITE_P(Kinds, WitnessSearch,
                         ::testing::Values(WitnessKind::kShortKite, WitnessKind::kKite,
                                           WitnessKind::kFork));

TEST(Witnesses, KindNames) {
  for (auto k : {WitnessKind::kShortKite, WitnessKind::kKite, WitnessKind::kFork}) {
    EXPECT_EQ(ParseKindName(KindName(k)), k);
  }
  EXPECT_THROW(ParseKindName("triangle"), std::out_of_range);
}

TEST(Multifan, GrownFansSatisfyDefinition) {
  for (const PartialEdgeColoring& c : Corpus()) {
    const Edge e = c.Uncolored().front();
    for (auto [r, s] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
      const Multifan f = GrowMultifan(c, r, s);
      ASSERT_TRUE(IsMultifan(c, f));
      ASSERT_EQ(f.leaves.front(), s);
    }
  }
}

TEST(Multifan, CriticalHostsSatisfyFanLemmas) {
  for (const Graph& g : CriticalCorpus(6, 1)) {
    const Edge e = g.Edges().front();
    const PartialEdgeColoring c = DeltaColoringOfMinusE(g, e);
    const FanReports r = CheckFanLemmas(c, GrowMultifan(c, e.u, e.v));
    EXPECT_TRUE(r.basic.Passed());
    EXPECT_TRUE(r.pairs.Passed());
    EXPECT_EQ(r.basic.instances, 1U);
  }
}

TEST(Checks, ValOnCriticalEdges) {
  for (const char* name : {"triangle", "c5", "pstar", "splitk4"}) {
    const Graph g = BuiltinFixture(name);
    for (const Edge& e : g.Edges()) EXPECT_TRUE(CheckVal(g, e).Passed()) << name;
  }
}

TEST(Checks, ParityHoldsOnFullColorings) {
  const PartialEdgeColoring c = VizingPlusOneColoring(PetersenGraph());
  const VerificationReport r = CheckParity(c);
  EXPECT_TRUE(r.Passed());
  PartialEdgeColoring partial = c;
  partial.Uncolor(PetersenGraph().Edges().front());
  EXPECT_THROW(CheckParity(partial), PreconditionError);
}

TEST(Checks, ThreeQuarterBound) {
  EXPECT_TRUE(MeetsThreeQuarterBound(3, 5));
  EXPECT_FALSE(MeetsThreeQuarterBound(3, 6));
  EXPECT_TRUE(MeetsThreeQuarterBound(6, 9));
}

TEST(Checks, PlantedNegativesAllFail) {
  const auto reports = PlantedNegatives();
  ASSERT_EQ(reports.size(), 3U);
  for (const auto& r : reports) {
    EXPECT_FALSE(r.Passed()) << r.check;
    ASSERT_TRUE(r.counterexample.has_value()) << r.check;
    EXPECT_FALSE(r.counterexample->clause.empty());
  }
}
