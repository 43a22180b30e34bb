#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "ecrit/families.hpp"
#include "ecrit/graph.hpp"
#include "ecrit/report.hpp"

namespace ecrit {

struct HarnessConfig {
  std::string suite = "default";  // default | theorem1 | theorem2 | lemmas
  int n_max = 8;
  int seeds = 8;                  // colorings of G−e per critical edge
  bool extended_corpus = true;    // add family splits on 9 vertices
  bool planted_negatives = false;
  unsigned threads = 0;           // 0: hardware concurrency
};

struct CheckOutcome {
  VerificationReport report;
  double seconds = 0;
};

struct SuiteResult {
  std::vector<CheckOutcome> checks;

  // True iff some check has a failure on a hypothesis-met instance.
  bool Failed() const;
  // Table for stdout; the only place runtimes appear.
  std::string Summary() const;
};

const std::vector<std::string>& SuiteNames();

// Throws std::invalid_argument on an unknown suite or a bad n_max / seeds.
SuiteResult RunSuite(const HarnessConfig& config);

// One <check>.json per report. Contents depend only on the configuration.
void WriteReports(const SuiteResult& result, const std::filesystem::path& dir);

// Runs f(0..count-1) on a pool; f must only touch per-index state.
void ParallelFor(std::size_t count, unsigned threads,
                 const std::function<void(std::size_t)>& f);

// --- individual checks, also used by the tests ---

// Counts for n = 1..n_max against the known sequence of unlabeled graphs.
VerificationReport CheckEnumerationCounts(int n_max);

// Fixed chromatic indices, König on random bipartite graphs, and validation
// of the Δ+1 coloring on random graphs.
VerificationReport CheckClassifierSanity(int bipartite_trials = 200,
                                         int vizing_trials = 500,
                                         std::uint64_t seed = 1);

VerificationReport CheckPstarCertificate();

// Every split of a Class 1 member is Δ-critical, provided the split graph
// meets the degree bound (otherwise the member is vacuous). Throws
// PreconditionError when the certificate does not validate.
VerificationReport VerifySplitTheorem(const Class1Member& member);

// Connected Δ-critical graphs on up to n_max vertices, in enumeration order.
std::vector<Graph> CriticalCorpus(int n_max, unsigned threads);
// Δ-critical splits of K8 and of K8 minus a perfect matching.
std::vector<Graph> ExtendedCriticalCorpus();

struct PairSweepReports {
  VerificationReport overfull;   // "theorem2"
  VerificationReport lemma;      // "fulldpair"
  VerificationReport corollary;  // "fulldpair_corollary"
};
// Requires Δ-critical inputs.
PairSweepReports VerifyPairTheorem(const std::vector<Graph>& critical,
                                   unsigned threads);

// All lemma checks plus normalization mining over colorings of G−e for every
// edge e: all colorings up to renaming on hosts with at most six vertices,
// seeds 0..seeds-1 on larger ones. Report order is fixed.
std::vector<VerificationReport> RunLemmaSweeps(
    const std::vector<Graph>& critical, int seeds, unsigned threads);

// Normalization on Class 1 hosts up to n_max vertices: every outcome must
// validate. Includes the planted fixture, which must give a full coloring.
VerificationReport NormalizeOnClass1Hosts(int n_max, int seeds,
                                          unsigned threads);

// Checker runs on fixtures built to violate their conclusions.
std::vector<VerificationReport> PlantedNegatives();

}  // namespace ecrit
