// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Reference values come from tests/oracles.cpp, not from
// the library's own search code.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <functional>
#include <set>
#include <iostream>
#include <sstream>
#include <string>

#include "ecrit/canonical.hpp"
#include "ecrit/checks.hpp"
#include "ecrit/classifier.hpp"
#include "ecrit/enumerate.hpp"
#include "ecrit/families.hpp"
#include "ecrit/fixtures.hpp"
#include "ecrit/graph6.hpp"
#include "ecrit/harness.hpp"
#include "oracles.hpp"

using namespace ecrit;
namespace fs = std::filesystem;

namespace {

struct Verdict {
  bool pass = true;
  std::ostringstream detail;
  void Require(bool ok, const std::string& why) {
    if (!ok) {
      pass = false;
      detail << " [" << why << "]";
    }
  }
};

int failures = 0;

void Criterion(int id, const std::string& title, const std::function<void(Verdict&)>& body) {
  const auto start = std::chrono::steady_clock::now();
  Verdict v;
  try {
    body(v);
  } catch (const std::exception& e) {
    v.pass = false;
    v.detail << " [exception: " << e.what() << "]";
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!v.pass) ++failures;
  std::cout << "criterion " << id << ": " << (v.pass ? "PASS" : "FAIL") << "  " << title
            << " -" << v.detail.str() << " (" << std::fixed << std::setprecision(1)
            << secs << "s)" << std::endl;
}

std::string Describe(const VerificationReport& r) {
  std::ostringstream s;
  s << r.check << " instances=" << r.instances << " vacuous=" << r.vacuous
    << " failures=" << r.failures << (r.NeverInstantiated() ? " VACUOUS" : "");
  return s.str();
}

bool HitsIsomorphic(const VerificationReport& r, const Graph& target) {
  for (const std::string& note : r.notes) {
    if (note.rfind("instance ", 0) != 0) continue;
    if (Isomorphic(FromGraph6(note.substr(9)), target)) return true;
  }
  return false;
}

std::string Slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

int main() {
  const unsigned threads = 0;
  std::vector<Graph> critical;
  std::vector<VerificationReport> sweeps;

  Criterion(1, "graph enumeration counts n=3..8", [](Verdict& v) {
    for (int n = 3; n <= 8; ++n) {
      const auto got = EnumerateGraphs(n).size();
      const auto want = oracle::BurnsideGraphCount(n);
      v.detail << " n=" << n << ":" << got;
      v.Require(got == want, "n=" + std::to_string(n) + " expected " + std::to_string(want));
    }
    // Labeled brute force with isomorphism classes, where 2^(n choose 2)
    // labelings times n! relabelings is still affordable.
    for (int n = 3; n <= 6; ++n) {
      std::set<std::uint64_t> got;
      for (const Graph& g : EnumerateGraphs(n)) got.insert(oracle::MinCode(g));
      v.Require(got == oracle::LabeledClasses(n), "labeled n=" + std::to_string(n));
    }
    v.detail << " labeled brute force n<=6 agrees";
  });

  Criterion(2, "chromatic index classifier", [](Verdict& v) {
    const std::pair<const char*, int> fixed[] = {{"k4", 3}, {"k6", 5}, {"pstar", 4}, {"c5", 3}};
    for (const auto& [name, want] : fixed) {
      const int got = ExactChromaticIndex(BuiltinFixture(name));
      v.detail << " " << name << "=" << got;
      v.Require(got == want, std::string(name) + " expected " + std::to_string(want));
    }
    const VerificationReport r = CheckClassifierSanity(200, 500, 1);
    v.detail << "; " << Describe(r);
    v.Require(r.Passed() && r.instances >= 700, "random sanity");
  });

  Criterion(3, "Petersen minus a vertex certificate", [](Verdict& v) {
    const Graph p = BuiltinFixture("pstar");
    v.Require(p.order() == 9 && p.size() == 12, "shape");
    v.Require(IsConnected(p), "connected");
    v.Require(oracle::BruteChromaticIndex(p) == 4, "brute force index");
    int critical_edges = 0;
    for (const Edge& e : p.Edges()) critical_edges += IsCriticalEdge(p, e);
    v.Require(critical_edges == 12, "critical edges");
    v.Require(!IsOverfull(p), "overfull");
    v.Require(MaxDegree(p) == 3 && !MeetsThreeQuarterBound(3, 9), "degree bound");
    v.detail << " n=9 |E|=12 critical=" << critical_edges << " Δ=3 < 6;";
    const VerificationReport r = CheckPstarCertificate();
    v.detail << " " << Describe(r);
    v.Require(r.Passed() && r.instances > 0, "certificate report");
  });

  Criterion(4, "splits of K4 and K6 are critical", [](Verdict& v) {
    for (int n : {4, 6}) {
      const Class1Member m = CompleteEvenMember(n);
      const VerificationReport r = VerifySplitTheorem(m);
      v.detail << " " << m.name << ": " << Describe(r);
      v.Require(r.Passed() && r.instances > 0, m.name);
      for (const SplitSpec& s : SplitSpecsUpToIsomorphism(m.graph)) {
        v.Require(IsDeltaCritical(SplitVertex(m.graph, s)), m.name + " direct");
      }
    }
  });

  Criterion(5, "overfull and identification over critical graphs n<=8",
            [&](Verdict& v) {
              critical = CriticalCorpus(8, threads);
              const PairSweepReports r = VerifyPairTheorem(critical, threads);
              v.detail << " corpus=" << critical.size() << "; " << Describe(r.overfull)
                       << "; " << Describe(r.lemma) << "; " << Describe(r.corollary);
              v.Require(r.overfull.Passed() && r.lemma.Passed() && r.corollary.Passed(),
                        "failures");
              v.Require(HitsIsomorphic(r.overfull, BuiltinFixture("triangle")),
                        "triangle not hit");
              v.Require(HitsIsomorphic(r.overfull, BuiltinFixture("splitk4")),
                        "split K4 not hit");
            });

  Criterion(6, "structural lemma sweeps (all colorings n<=6, 8 seeds above)", [&](Verdict& v) {
    if (critical.empty()) critical = CriticalCorpus(8, threads);
    std::vector<Graph> corpus = critical;
    for (const Graph& g : ExtendedCriticalCorpus()) corpus.push_back(g);
    sweeps = RunLemmaSweeps(corpus, 8, threads);
    for (const VerificationReport& r : sweeps) {
      v.detail << " " << r.check << "=" << r.instances
               << (r.NeverInstantiated() ? "(vacuous)" : "");
      v.Require(r.Passed(), r.check);
    }
  });

  Criterion(7, "five-vertex path normalization", [&](Verdict& v) {
    bool mined = false;
    for (const VerificationReport& r : sweeps) {
      if (r.check != "normalize_k5") continue;
      mined = true;
      v.detail << " critical: " << Describe(r) << ";";
      v.Require(r.Passed(), "critical corpus");
    }
    v.Require(mined, "normalize_k5 report missing");
    const VerificationReport c1 = NormalizeOnClass1Hosts(8, 4, threads);
    v.detail << " " << Describe(c1);
    for (const auto& [k, n] : c1.stats) v.detail << " " << k << "=" << n;
    v.Require(c1.Passed() && c1.instances > 0, "class 1 hosts");
    v.Require(c1.stats.count("planted_full_coloring") == 1, "planted fixture");
  });

  Criterion(8, "verify reports are byte-identical across runs", [](Verdict& v) {
    const fs::path base = fs::temp_directory_path() / "ecrit_acceptance";
    fs::remove_all(base);
    for (const char* run : {"a", "b"}) {
      const std::string cmd = std::string(ECRIT_CLI_PATH) +
                              " verify --suite default --seeds 8 --out " +
                              (base / run).string() + " > /dev/null";
      v.Require(std::system(cmd.c_str()) == 0, std::string("run ") + run + " exit status");
    }
    int files = 0;
    for (const auto& e : fs::directory_iterator(base / "a")) {
      ++files;
      const fs::path other = base / "b" / e.path().filename();
      v.Require(fs::exists(other) && Slurp(e.path()) == Slurp(other),
                e.path().filename().string() + " differs");
    }
    for (const auto& e : fs::directory_iterator(base / "b")) {
      v.Require(fs::exists(base / "a" / e.path().filename()), "extra file");
    }
    v.detail << " files=" << files;
    v.Require(files > 0, "no reports written");
    fs::remove_all(base);
  });

  std::cout << (failures == 0 ? "all criteria passed" : "some criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
