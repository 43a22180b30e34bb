#include "ecrit/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <random>
#include <stdexcept>
#include <thread>

#include "ecrit/checks.hpp"
#include "ecrit/classifier.hpp"
#include "ecrit/enumerate.hpp"
#include "ecrit/errors.hpp"
#include "ecrit/exact_solver.hpp"
#include "ecrit/fixtures.hpp"
#include "ecrit/graph6.hpp"
#include "ecrit/kierstead.hpp"
#include "ecrit/multifan.hpp"
#include "ecrit/multigraph.hpp"
#include "ecrit/normalize.hpp"
#include "ecrit/witnesses.hpp"

namespace ecrit {
namespace {

// Unlabeled graphs on n vertices, n = 0..8.
constexpr std::uint64_t kGraphCounts[] = {1, 1, 2, 4, 11, 34, 156, 1044, 12346};

Counterexample GraphCx(const Graph& g, std::string witness, std::string clause) {
  return {ToGraph6(g), "", std::move(witness), std::move(clause)};
}

Counterexample ColoringCx(const PartialEdgeColoring& c, std::string witness,
                          std::string clause) {
  return {ToGraph6(c.graph()), SerializeColoring(c), std::move(witness),
          std::move(clause)};
}

unsigned ResolveThreads(unsigned threads) {
  if (threads != 0) return threads;
  return std::max(1U, std::thread::hardware_concurrency());
}

// Uniform integer in [0, bound) from the raw engine output, so the stream
// does not depend on the standard library's distributions.
int Draw(std::mt19937_64& rng, int bound) {
  return static_cast<int>(rng() % static_cast<std::uint64_t>(bound));
}

Graph RandomGraph(std::mt19937_64& rng, int n, int percent) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (Draw(rng, 100) < percent) g.AddEdge(u, v);
    }
  }
  return g;
}

Graph RandomBipartite(std::mt19937_64& rng, int p, int q, int percent) {
  Graph g(p + q);
  for (Vertex u = 0; u < p; ++u) {
    for (Vertex v = p; v < p + q; ++v) {
      if (Draw(rng, 100) < percent) g.AddEdge(u, v);
    }
  }
  return g;
}

// Merge per-index partial reports in index order.
std::vector<VerificationReport> MergeAll(
    const std::vector<std::vector<VerificationReport>>& parts,
    std::vector<VerificationReport> into) {
  for (const auto& part : parts) {
    for (std::size_t i = 0; i < part.size(); ++i) into[i].Merge(part[i]);
  }
  return into;
}

// The merged coloring of the identified multigraph is proper with Δ colors.
bool MergedColoringIsProper(const Graph& g, const PartialEdgeColoring& c,
                            const Identification& id) {
  const int delta = MaxDegree(g);
  std::vector<ColorSet> seen(id.graph.n);
  for (const auto& [e, col] : c.Assignment()) {
    if (col < 1 || col > delta) return false;
    for (Vertex x : {id.vertex_map[e.u], id.vertex_map[e.v]}) {
      if (seen[x].Contains(col)) return false;
      seen[x].Insert(col);
    }
  }
  return true;
}

}  // namespace

bool SuiteResult::Failed() const {
  for (const auto& c : checks) {
    if (!c.report.Passed()) return true;
  }
  return false;
}

std::string SuiteResult::Summary() const {
  std::string s;
  int failed = 0;
  int vacuous = 0;
  for (const auto& c : checks) {
    char t[32];
    std::snprintf(t, sizeof t, "  %8.2fs", c.seconds);
    s += c.report.SummaryLine() + t + "\n";
    failed += c.report.Passed() ? 0 : 1;
    vacuous += c.report.NeverInstantiated() ? 1 : 0;
  }
  s += std::to_string(checks.size()) + " checks, " + std::to_string(failed) +
       " failed, " + std::to_string(vacuous) + " never instantiated\n";
  for (const auto& c : checks) {
    if (c.report.NeverInstantiated()) {
      s += "warning: no hypothesis met for " + c.report.check + "\n";
    }
  }
  return s;
}

const std::vector<std::string>& SuiteNames() {
  static const std::vector<std::string> names{"default", "theorem1", "theorem2",
                                              "lemmas"};
  return names;
}

void ParallelFor(std::size_t count, unsigned threads,
                 const std::function<void(std::size_t)>& f) {
  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(ResolveThreads(threads), count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < count;) {
        try {
          f(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

VerificationReport CheckEnumerationCounts(int n_max) {
  VerificationReport r("enumeration");
  for (int n = 1; n <= n_max; ++n) {
    const std::uint64_t got = EnumerateGraphs(n).size();
    r.Hit();
    r.Count("n=" + std::to_string(n), got);
    if (got != kGraphCounts[n]) {
      r.Fail({"", "", "n=" + std::to_string(n),
              "count " + std::to_string(got) + ", expected " +
                  std::to_string(kGraphCounts[n])});
    }
  }
  return r;
}

VerificationReport CheckClassifierSanity(int bipartite_trials,
                                         int vizing_trials,
                                         std::uint64_t seed) {
  VerificationReport r("classifier_sanity");
  const std::pair<const char*, int> fixed[] = {
      {"k4", 3}, {"k6", 5}, {"pstar", 4}, {"c5", 3}};
  for (const auto& [name, want] : fixed) {
    const Graph g = BuiltinFixture(name);
    r.Hit();
    const int got = ExactChromaticIndex(g);
    if (got != want) {
      r.Fail(GraphCx(g, name, "chromatic index " + std::to_string(got) +
                                  ", expected " + std::to_string(want)));
    }
  }
  std::mt19937_64 rng(seed);
  for (int i = 0; i < bipartite_trials; ++i) {
    const Graph g = RandomBipartite(rng, 1 + Draw(rng, 6), 1 + Draw(rng, 6),
                                    20 + Draw(rng, 70));
    r.Hit();
    r.Count("bipartite");
    if (ExactChromaticIndex(g) != MaxDegree(g)) {
      r.Fail(GraphCx(g, "", "bipartite graph with chromatic index above Δ"));
    }
  }
  for (int i = 0; i < vizing_trials; ++i) {
    const Graph g = RandomGraph(rng, 2 + Draw(rng, 23), 5 + Draw(rng, 90));
    r.Hit();
    r.Count("vizing");
    const PartialEdgeColoring c = VizingPlusOneColoring(g);
    if (!c.IsFull() || !c.IsProper() || c.k() > MaxDegree(g) + 1) {
      r.Fail(ColoringCx(c, "", "Δ+1 coloring does not validate"));
    }
  }
  return r;
}

VerificationReport CheckPstarCertificate() {
  VerificationReport r("pstar_certificate");
  const Graph g = BuiltinFixture("pstar");
  const auto clause = [&](bool ok, const char* what) {
    r.Hit();
    if (!ok) r.Fail(GraphCx(g, "", what));
  };
  clause(g.order() == 9 && g.size() == 12, "order 9 and 12 edges");
  clause(IsConnected(g), "connected");
  clause(Classify(g) == EdgeClass::kClass2, "Class 2");
  for (const Edge& e : g.Edges()) {
    r.Hit();
    r.Count("critical_edges");
    if (!IsCriticalEdge(g, e)) r.Fail(GraphCx(g, ToString(e), "edge not critical"));
  }
  clause(!IsOverfull(g), "not overfull");
  clause(MaxDegree(g) == 3 && !MeetsThreeQuarterBound(3, g.order()),
         "Δ = 3 below the three-quarter bound");
  return r;
}

VerificationReport VerifySplitTheorem(const Class1Member& member) {
  VerificationReport r("theorem1");
  const Graph& g = member.graph;
  if (!IsRegular(g) || !member.certificate.IsFull() ||
      !member.certificate.IsProper() || member.certificate.k() != MaxDegree(g)) {
    throw PreconditionError(member.name + " is not certified regular Class 1");
  }
  const int delta = MaxDegree(g);
  if (!MeetsThreeQuarterBound(delta, g.order() + 1)) {
    r.Miss();
    r.notes.insert(member.name + ": below the degree bound");
    return r;
  }
  for (const SplitSpec& spec : SplitSpecsUpToIsomorphism(g)) {
    const Graph h = SplitVertex(g, spec);
    r.Hit();
    if (!IsDeltaCritical(h)) {
      r.Fail(GraphCx(h, member.name + " split v=" + std::to_string(spec.v),
                     "split graph is not Δ-critical"));
    }
  }
  r.Count("splits:" + member.name, r.instances);
  return r;
}

std::vector<Graph> CriticalCorpus(int n_max, unsigned threads) {
  std::vector<Graph> all;
  ForEachGraphUpTo(n_max, [&](const Graph& g) {
    if (g.order() >= 2 && IsConnected(g)) all.push_back(g);
  });
  std::vector<char> keep(all.size(), 0);
  ParallelFor(all.size(), threads,
              [&](std::size_t i) { keep[i] = IsDeltaCritical(all[i]) ? 1 : 0; });
  std::vector<Graph> out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (keep[i]) out.push_back(all[i]);
  }
  return out;
}

std::vector<Graph> ExtendedCriticalCorpus() {
  std::vector<Graph> out;
  for (const Graph& base : {CompleteGraph(8), Circulant(8, {1, 2, 3})}) {
    for (const SplitSpec& spec : SplitSpecsUpToIsomorphism(base)) {
      Graph h = SplitVertex(base, spec);
      if (IsDeltaCritical(h)) out.push_back(std::move(h));
    }
  }
  return out;
}

PairSweepReports VerifyPairTheorem(const std::vector<Graph>& critical,
                                   unsigned threads) {
  std::vector<std::vector<VerificationReport>> parts(critical.size());
  ParallelFor(critical.size(), threads, [&](std::size_t i) {
    const Graph& g = critical[i];
    VerificationReport over("theorem2");
    VerificationReport lemma("fulldpair");
    VerificationReport cor("fulldpair_corollary");
    const auto pairs = FullDeficiencyPairs(g);
    const int delta = MaxDegree(g);
    if (pairs.empty()) {
      over.Miss();
      lemma.Miss();
      cor.Miss();
      parts[i] = {over, lemma, cor};
      return;
    }
    for (const Edge& p : pairs) {
      PairReports pr = CheckFullDeficiencyPair(g, p.u, p.v);
      lemma.Merge(pr.lemma);
      cor.Merge(pr.corollary);
    }
    if (!MeetsThreeQuarterBound(delta, g.order())) {
      over.Miss();
      parts[i] = {over, lemma, cor};
      return;
    }
    over.Hit();
    over.notes.insert("instance " + ToGraph6(g));
    if (!IsOverfull(g)) over.Fail(GraphCx(g, "", "not overfull"));
    for (const Edge& p : pairs) {
      const PartialEdgeColoring c = DeltaColoringOfMinusE(g, p, 0);
      const Identification id = IdentifyPair(g, p.u, p.v);
      over.Count("identified_pairs");
      const std::string where = "ab=" + ToString(p);
      if (!id.graph.IsRegular() || id.graph.MaxDegree() != delta) {
        over.Fail(GraphCx(g, where, "identified multigraph is not Δ-regular"));
      }
      if ((c.Missing(p.u) & c.Missing(p.v)).bits() != 0) {
        over.Fail(ColoringCx(c, where, "pair shares a missing color"));
      }
      if (!MergedColoringIsProper(g, c, id)) {
        over.Fail(ColoringCx(c, where, "merged coloring is not proper"));
      }
    }
    parts[i] = {over, lemma, cor};
  });
  auto merged = MergeAll(parts, {VerificationReport("theorem2"),
                                 VerificationReport("fulldpair"),
                                 VerificationReport("fulldpair_corollary")});
  return {merged[0], merged[1], merged[2]};
}

namespace {

enum SweepIndex {
  kVal,
  kParity,
  kFanBasic,
  kFanPairs,
  kKierstead4,
  kK5Degrees,
  kK5Companion,
  kShortKite,
  kKite,
  kFork,
  kNormalize,
  kSweepCount
};

std::vector<VerificationReport> EmptySweep() {
  return {VerificationReport("val"),
          VerificationReport("parity"),
          VerificationReport("multifan_elementary_linkage"),
          VerificationReport("multifan_induced_pairs"),
          VerificationReport("kierstead4"),
          VerificationReport("k5_degrees"),
          VerificationReport("k5_companion"),
          VerificationReport("shortkite"),
          VerificationReport("kite"),
          VerificationReport("fork"),
          VerificationReport("normalize_k5")};
}

ColorSet GammaOf(const PartialEdgeColoring& c, const KiersteadPath& k) {
  return c.Missing(k.v[4]) & (c.Missing(k.v[0]) | c.Missing(k.v[1]));
}

// One normalization run on a critical host: must end Normalized.
void MineNormalization(const PartialEdgeColoring& c, const KiersteadPath& k,
                       VerificationReport& r) {
  r.Hit();
  const std::string where = k.ToString();
  try {
    const NormalizationOutcome o = NormalizeK5(c, k);
    r.Count("swaps_total", o.swaps);
    if (o.used_fallback) r.Count("fallback");
    if (o.kind != NormalizationOutcome::Kind::kNormalized) {
      r.Fail(ColoringCx(c, where, "full coloring found on a critical edge"));
      return;
    }
    if (!IsNormalizedK5(o.coloring, k)) {
      r.Fail(ColoringCx(c, where, "outcome not normalized"));
    }
    if (o.swaps > kNormalizeSwapBound) {
      r.Fail(ColoringCx(c, where, "swap bound exceeded"));
    }
    if (ApplyScript(c, o.trace).coloring != o.coloring) {
      r.Fail(ColoringCx(c, where, "trace does not reproduce the outcome"));
    }
    const Graph& g = c.graph();
    const int delta = MaxDegree(g);
    if (g.Degree(k.v[1]) != delta || g.Degree(k.v[2]) != delta) {
      r.Fail(ColoringCx(c, where, "d(b) or d(u) below Δ on a normalized path"));
    }
  } catch (const NormalizationError& e) {
    r.Fail(ColoringCx(c, where, std::string("diagnostic error: ") + e.what()));
  } catch (const ScriptError& e) {
    r.Fail(ColoringCx(c, where, std::string("trace replay: ") + e.what()));
  }
}

// Small hosts get every coloring of G−e up to renaming instead of samples.
constexpr int kExhaustiveColoringOrder = 6;

std::vector<VerificationReport> SweepOne(const Graph& g, int seeds) {
  std::vector<VerificationReport> out = EmptySweep();
  for (const Edge& e : g.Edges()) {
    out[kVal].Merge(CheckVal(g, e));
    const auto sweep = [&](const PartialEdgeColoring& c) {
      out[kParity].Merge(CheckParity(DropUncolored(c)));
      for (const auto& [r, s1] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
        const FanReports fr = CheckFanLemmas(c, GrowMultifan(c, r, s1));
        out[kFanBasic].Merge(fr.basic);
        out[kFanPairs].Merge(fr.pairs);
      }
      for (const KiersteadPath& k : FindKiersteadPaths(c, 3)) {
        out[kKierstead4].Merge(CheckKierstead4(c, k));
      }
      for (const KiersteadPath& k : FindKiersteadPaths(c, 4)) {
        const K5Reports kr = CheckK5Claims(c, k);
        out[kK5Degrees].Merge(kr.degrees);
        out[kK5Companion].Merge(kr.companion);
        if (GammaOf(c, k).Size() >= 3) {
          MineNormalization(c, k, out[kNormalize]);
        } else {
          out[kNormalize].Miss();
        }
      }
      for (const auto& w : FindStructureWitnesses(c, WitnessKind::kShortKite)) {
        out[kShortKite].Merge(CheckShortKite(c, w));
      }
      for (const auto& w : FindStructureWitnesses(c, WitnessKind::kKite)) {
        out[kKite].Merge(CheckKite(c, w));
      }
      out[kFork].Merge(CheckForkAbsence(c));
    };
    if (g.order() <= kExhaustiveColoringOrder) {
      EnumerateEdgeColorings(g, MaxDegree(g), {e}, [&](const PartialEdgeColoring& c) {
        sweep(c);
        return true;
      });
    } else {
      for (int seed = 0; seed < seeds; ++seed) {
        sweep(DeltaColoringOfMinusE(g, e, static_cast<std::uint64_t>(seed)));
      }
    }
  }
  return out;
}

}  // namespace

std::vector<VerificationReport> RunLemmaSweeps(
    const std::vector<Graph>& critical, int seeds, unsigned threads) {
  std::vector<std::vector<VerificationReport>> parts(critical.size());
  ParallelFor(critical.size(), threads,
              [&](std::size_t i) { parts[i] = SweepOne(critical[i], seeds); });
  std::vector<VerificationReport> out = MergeAll(parts, EmptySweep());
  for (auto& r : out) {
    if (r.NeverInstantiated()) {
      r.notes.insert("could not be instantiated on this corpus");
    }
  }
  return out;
}

VerificationReport NormalizeOnClass1Hosts(int n_max, int seeds,
                                          unsigned threads) {
  std::vector<Graph> hosts;
  ForEachGraphUpTo(n_max, [&](const Graph& g) {
    if (g.order() >= 5 && IsConnected(g) && MaxDegree(g) >= 3) hosts.push_back(g);
  });
  std::vector<std::vector<VerificationReport>> parts(hosts.size());
  ParallelFor(hosts.size(), threads, [&](std::size_t i) {
    VerificationReport r("normalize_k5_class1");
    const Graph& g = hosts[i];
    if (Classify(g) != EdgeClass::kClass1) {
      parts[i] = {r};
      return;
    }
    for (const Edge& e : g.Edges()) {
      for (int seed = 0; seed < seeds; ++seed) {
        const PartialEdgeColoring c =
            DeltaColoringOfMinusE(g, e, static_cast<std::uint64_t>(seed));
        for (const KiersteadPath& k : FindKiersteadPaths(c, 4)) {
          if (GammaOf(c, k).Size() < 3) continue;
          r.Hit();
          const std::string where = k.ToString();
          try {
            const NormalizationOutcome o = NormalizeK5(c, k);
            if (o.used_fallback) r.Count("fallback");
            if (o.kind == NormalizationOutcome::Kind::kNormalized) {
              r.Count("normalized");
              if (!IsNormalizedK5(o.coloring, k) || o.swaps > kNormalizeSwapBound ||
                  ApplyScript(c, o.trace).coloring != o.coloring) {
                r.Fail(ColoringCx(c, where, "normalized outcome does not validate"));
              }
            } else {
              r.Count("full_coloring");
              if (!o.coloring.IsFull() || !o.coloring.IsProper() ||
                  o.coloring.k() != MaxDegree(g)) {
                r.Fail(ColoringCx(c, where, "full coloring does not validate"));
              }
            }
          } catch (const std::exception& ex) {
            r.Fail(ColoringCx(c, where, std::string("diagnostic error: ") + ex.what()));
          }
        }
      }
    }
    parts[i] = {r};
  });
  VerificationReport out =
      MergeAll(parts, {VerificationReport("normalize_k5_class1")})[0];

  // Planted fixture: a Class 1 host where ab is not critical.
  const Graph g = FromGraph6("DB{");
  const PartialEdgeColoring c = ParseColoring(
      std::make_shared<const Graph>(g), "k=4 uncolored=1\n0 4 1\n1 3 0\n1 4 2\n2 3 1\n2 4 3\n3 4 4\n");
  out.Hit();
  const NormalizationOutcome o = NormalizeK5(c, {{1, 3, 2, 4, 0}});
  if (o.kind != NormalizationOutcome::Kind::kProperColoring ||
      !o.coloring.IsFull() || !o.coloring.IsProper()) {
    out.Fail(ColoringCx(c, "planted 1-3-2-4-0", "planted fixture not colored"));
  } else {
    out.Count("planted_full_coloring");
  }
  return out;
}

std::vector<VerificationReport> PlantedNegatives() {
  std::vector<VerificationReport> out;
  // The path on four vertices: the edge at a leaf has no Δ-neighbours.
  {
    VerificationReport r = CheckVal(PathGraph(4), Edge::Of(0, 1));
    r.check = "planted_val";
    out.push_back(r);
  }
  // A 2-colored four-cycle minus one edge: both ends miss color 2.
  {
    const Graph g = CycleGraph(4);
    PartialEdgeColoring c(g, 2);
    c.Assign(Edge::Of(1, 2), 1);
    c.Assign(Edge::Of(2, 3), 2);
    c.Assign(Edge::Of(0, 3), 1);
    FanReports fr = CheckFanLemmas(c, GrowMultifan(c, 0, 1));
    fr.basic.check = "planted_multifan";
    out.push_back(fr.basic);
  }
  // In P4 the middle edge is a full-deficiency pair with low-degree neighbours.
  {
    PairReports pr = CheckFullDeficiencyPair(PathGraph(4), 1, 2);
    pr.lemma.check = "planted_fulldpair";
    out.push_back(pr.lemma);
  }
  return out;
}

SuiteResult RunSuite(const HarnessConfig& config) {
  const auto& names = SuiteNames();
  if (std::find(names.begin(), names.end(), config.suite) == names.end()) {
    throw std::invalid_argument("unknown suite '" + config.suite + "'");
  }
  if (config.n_max < 1 || config.n_max > kMaxEnumerationOrder) {
    throw std::invalid_argument("n-max must be in [1, 8]");
  }
  if (config.seeds < 1) throw std::invalid_argument("seeds must be positive");

  SuiteResult res;
  const auto timed = [&](const std::function<std::vector<VerificationReport>()>& f) {
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<VerificationReport> reports = f();
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
    for (std::size_t i = 0; i < reports.size(); ++i) {
      // The whole batch's runtime is charged to its first report.
      res.checks.push_back({std::move(reports[i]), i == 0 ? secs : 0.0});
    }
  };
  const bool all = config.suite == "default";
  const unsigned threads = config.threads;

  if (all) {
    timed([&] { return std::vector{CheckEnumerationCounts(config.n_max)}; });
    timed([] { return std::vector{CheckClassifierSanity()}; });
    timed([] { return std::vector{CheckPstarCertificate()}; });
  }
  if (all || config.suite == "theorem1") {
    timed([&] {
      VerificationReport r("theorem1");
      std::vector<Class1Member> members{CompleteEvenMember(4), CompleteEvenMember(6)};
      if (config.extended_corpus) {
        members.push_back(CompleteEvenMember(8));
        members.push_back(CirculantMember(8, {1, 2, 3}));
        members.push_back(BipartiteCompleteMember(3));
        members.push_back(HypercubeMember(3));
      }
      std::vector<VerificationReport> parts(members.size());
      ParallelFor(members.size(), threads,
                  [&](std::size_t i) { parts[i] = VerifySplitTheorem(members[i]); });
      for (const auto& p : parts) r.Merge(p);
      return std::vector{r};
    });
  }

  std::vector<Graph> critical;
  const bool need_corpus = all || config.suite == "theorem2" || config.suite == "lemmas";
  if (need_corpus) {
    critical = CriticalCorpus(config.n_max, threads);
    if (config.extended_corpus) {
      for (Graph& h : ExtendedCriticalCorpus()) critical.push_back(std::move(h));
    }
  }
  if (all || config.suite == "theorem2") {
    timed([&] {
      std::vector<Graph> corpus = critical;
      corpus.push_back(BuiltinFixture("pstar"));
      PairSweepReports p = VerifyPairTheorem(corpus, threads);
      return std::vector{p.overfull, p.lemma, p.corollary};
    });
  }
  if (all || config.suite == "lemmas") {
    timed([&] { return RunLemmaSweeps(critical, config.seeds, threads); });
    timed([&] {
      return std::vector{
          NormalizeOnClass1Hosts(std::min(config.n_max, 7), 2, threads)};
    });
  }
  if (config.planted_negatives) timed([] { return PlantedNegatives(); });
  return res;
}

void WriteReports(const SuiteResult& result, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  for (const auto& c : result.checks) {
    std::ofstream f(dir / (c.report.check + ".json"), std::ios::binary);
    if (!f) throw std::runtime_error("cannot write to " + dir.string());
    f << c.report.ToJson().dump(2) << "\n";
  }
}

}  // namespace ecrit
