#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ecrit/errors.hpp"
#include "ecrit/families.hpp"
#include "ecrit/harness.hpp"

using namespace ecrit;

TEST(Report, MergeIsOrderIndependent) {
  VerificationReport a("x"), b("x"), c("x");
  a.Hit();
  a.Count("k", 2);
  b.Miss();
  b.Fail({"Bw", "", "a=0", "z"});
  c.Hit();
  c.Fail({"Bw", "", "a=0", "y"});
  c.notes.insert("n");
  VerificationReport ab = a;
  ab.Merge(b);
  ab.Merge(c);
  VerificationReport cb = c;
  cb.Merge(b);
  cb.Merge(a);
  EXPECT_EQ(ab.ToJson(), cb.ToJson());
  EXPECT_EQ(ab.failures, 2U);
  EXPECT_EQ(ab.counterexample->clause, "y");
  EXPECT_EQ(VerificationReport::FromJson(ab.ToJson()).ToJson(), ab.ToJson());
}

TEST(Harness, ParallelForCoversEveryIndex) {
  std::vector<int> hits(1000, 0);
  ParallelFor(hits.size(), 4, [&](std::size_t i) { ++hits[i]; });
  for (int h : hits) EXPECT_EQ(h, 1);
  EXPECT_THROW(ParallelFor(10, 3, [](std::size_t i) {
                 if (i == 7) throw std::runtime_error("boom");
               }),
               std::runtime_error);
}

TEST(Harness, RejectsBadConfig) {
  HarnessConfig cfg;
  cfg.suite = "everything";
  EXPECT_THROW(RunSuite(cfg), std::invalid_argument);
  cfg = {};
  cfg.n_max = 9;
  EXPECT_THROW(RunSuite(cfg), std::invalid_argument);
  cfg = {};
  cfg.seeds = 0;
  EXPECT_THROW(RunSuite(cfg), std::invalid_argument);
}

TEST(Harness, SplitTheoremOnSmallCompleteGraphs) {
  for (int n : {4, 6}) {
    const VerificationReport r = VerifySplitTheorem(CompleteEvenMember(n));
    EXPECT_TRUE(r.Passed());
    EXPECT_GT(r.instances, 0U);
  }
}

TEST(Harness, CriticalCorpusSmallOrders) {
  // Connected Δ-critical graphs up to five vertices: K2, the triangle,
  // C5, K4 split (5 vertices), and no others with n = 4.
  const auto corpus = CriticalCorpus(5, 2);
  std::vector<int> orders;
  for (const Graph& g : corpus) orders.push_back(g.order());
  EXPECT_EQ(std::count(orders.begin(), orders.end(), 4), 0);
  EXPECT_GE(std::count(orders.begin(), orders.end(), 3), 1);
}

namespace {

std::string Slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST(Harness, ReportsAreDeterministicAcrossThreadCounts) {
  HarnessConfig cfg;
  cfg.suite = "lemmas";
  cfg.n_max = 6;
  cfg.seeds = 2;
  cfg.extended_corpus = false;
  const auto base = std::filesystem::temp_directory_path() / "ecrit_det";
  std::filesystem::remove_all(base);
  cfg.threads = 1;
  const SuiteResult one = RunSuite(cfg);
  WriteReports(one, base / "one");
  cfg.threads = 4;
  WriteReports(RunSuite(cfg), base / "four");
  EXPECT_FALSE(one.Failed());
  int files = 0;
  for (const auto& entry : std::filesystem::directory_iterator(base / "one")) {
    ++files;
    EXPECT_EQ(Slurp(entry.path()), Slurp(base / "four" / entry.path().filename()))
        << entry.path().filename();
  }
  EXPECT_GT(files, 5);
  std::filesystem::remove_all(base);
}
