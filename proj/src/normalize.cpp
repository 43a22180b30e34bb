#include "ecrit/normalize.hpp"

#include <functional>
#include <optional>

#include "ecrit/errors.hpp"
#include "ecrit/exact_solver.hpp"
#include "ecrit/graph6.hpp"
#include "ecrit/kempe.hpp"

namespace ecrit {

bool IsNormalizedK5(const PartialEdgeColoring& c, const KiersteadPath& k) {
  if (k.v.size() != 5) return false;
  const Vertex a = k.v[0], b = k.v[1], u = k.v[2], s = k.v[3], t = k.v[4];
  if (c.ColorOf(a, b) != 0) return false;
  const Color al = c.ColorOf(b, u), be = c.ColorOf(u, s), ga = c.ColorOf(s, t);
  return al != 0 && be != 0 && ga != 0 &&
         (c.Missing(a) & c.Missing(t)).Contains(al) &&
         (c.Missing(b) & c.Missing(t)).Contains(be) &&
         c.Missing(a).Contains(ga);
}

namespace {

// A planned step whose premise does not hold in the current state.
struct Deviation {
  std::string why;
};

class Normalizer {
 public:
  Normalizer(const PartialEdgeColoring& c, const KiersteadPath& k)
      : w_(c), a_(k.v[0]), b_(k.v[1]), u_(k.v[2]), s_(k.v[3]), t_(k.v[4]),
        path_(k) {}

  NormalizationOutcome Run();

 private:
  ColorSet A() const { return w_.Missing(a_); }
  ColorSet B() const { return w_.Missing(b_); }
  ColorSet T() const { return w_.Missing(t_); }
  ColorSet Gamma() const { return T() & (A() | B()); }
  bool UOnChainOfA(Color x, Color y) const {
    return ChainThrough(w_, a_, x, y).Contains(u_);
  }

  // (x,y)-swap at v; v must be an end of its (x,y)-component.
  void Swap(Vertex v, Color x, Color y);
  void Note(std::string s) { out_.notes.push_back(std::move(s)); }

  std::optional<PartialEdgeColoring> Guard();
  bool Pass();  // one dispatch; true when the loop should stop
  bool Fallback();
  NormalizationOutcome Finish();

  PartialEdgeColoring w_;
  Vertex a_, b_, u_, s_, t_;
  KiersteadPath path_;
  NormalizationOutcome out_;
};

void Normalizer::Swap(Vertex v, Color x, Color y) {
  if (x == y) return;
  const ColorSet m = w_.Missing(v);
  if (m.Contains(x) && m.Contains(y)) return;  // trivial component
  if (!m.Contains(x) && !m.Contains(y)) {
    throw Deviation{"vertex " + std::to_string(v) + " is interior to its (" +
                    std::to_string(x) + "," + std::to_string(y) + ")-chain"};
  }
  if (out_.swaps >= kNormalizeSwapBound) throw Deviation{"swap bound reached"};
  SwapAt(w_, v, x, y);
  out_.trace.steps.push_back(ScriptStep::SwapAt(v, x, y));
  ++out_.swaps;
}

// In a Class 2 host with ab critical, {a,b} is elementary and a, b are
// (i,j)-linked for i ∈ φ̄(a), j ∈ φ̄(b). When that fails, ab can be colored.
std::optional<PartialEdgeColoring> Normalizer::Guard() {
  const ColorSet common = A() & B();
  if (!common.Empty()) {
    PartialEdgeColoring full = w_;
    full.Assign(Edge::Of(a_, b_), common.Min());
    out_.trace.steps.push_back(ScriptStep::Assign(a_, b_, common.Min()));
    Note("a and b share a missing color");
    return full;
  }
  for (Color i : A().ToVector()) {
    for (Color j : B().ToVector()) {
      if (AreLinked(w_, a_, b_, i, j)) continue;
      PartialEdgeColoring full = w_;
      SwapAt(full, a_, i, j);
      full.Assign(Edge::Of(a_, b_), j);
      out_.trace.steps.push_back(ScriptStep::SwapAt(a_, i, j));
      out_.trace.steps.push_back(ScriptStep::Assign(a_, b_, j));
      ++out_.swaps;
      Note("a and b not linked for colors " + std::to_string(i) + "," +
           std::to_string(j));
      return full;
    }
  }
  return std::nullopt;
}

bool Normalizer::Pass() {
  if (IsNormalizedK5(w_, path_)) return true;
  const ColorSet gamma = Gamma();
  const ColorSet ga = gamma & A();
  const ColorSet gb = gamma & B();
  const Color bu = w_.ColorOf(b_, u_);

  // Make Γ meet both φ̄(a) and φ̄(b).
  if (gb.Empty()) {
    const ColorSet pick = ga - ColorSet::Of(bu);
    if (pick.Empty()) throw Deviation{"Γ ∩ φ̄(a) exhausted"};
    Note("move a Γ color to b");
    Swap(b_, pick.Min(), B().Min());
    return false;
  }
  if (ga.Empty()) {
    const ColorSet pick = gb - ColorSet::Of(w_.ColorOf(u_, s_));
    if (pick.Empty()) throw Deviation{"Γ ∩ φ̄(b) exhausted"};
    Note("move a Γ color to a");
    Swap(a_, pick.Min(), A().Min());
    return false;
  }

  // φ(bu) ∈ Γ ∩ φ̄(a).
  if (!A().Contains(bu)) throw Deviation{"φ(bu) not missing at a"};
  if (!ga.Contains(bu)) {
    Note("rename " + std::to_string(ga.Min()) + "<->" + std::to_string(bu));
    Swap(t_, ga.Min(), bu);
    return false;
  }
  const Color alpha = bu;
  const Color eps = w_.ColorOf(u_, s_);
  const Color beta = gb.Contains(eps) ? eps : gb.Min();
  const Color gam = w_.ColorOf(s_, t_);

  if (B().Contains(eps)) {
    if (eps != beta) {
      Note("rename " + std::to_string(beta) + "<->" + std::to_string(eps));
      Swap(t_, beta, eps);
      return false;
    }
    // φ(us) ∈ φ̄(b) ∩ φ̄(t) but φ(st) ∉ φ̄(a): excluded for critical ab.
    throw Deviation{"φ(st) outside φ̄(a) with φ(us) normalized"};
  }
  if (!A().Contains(eps)) throw Deviation{"φ(us) outside φ̄(a) ∪ φ̄(b)"};
  const Color delta = eps;

  if (B().Contains(gam)) {
    Note("case γ ∈ φ̄(b)");
    if (UOnChainOfA(beta, delta)) {
      Swap(t_, beta, delta);
      Swap(a_, delta, gam);
    } else {
      Swap(a_, beta, delta);
      Swap(a_, beta, gam);
    }
    return false;
  }
  if (w_.Missing(u_).Contains(gam)) {
    Note("case γ ∈ φ̄(u)");
    Swap(t_, beta, gam);
    if (!T().Contains(delta)) Swap(t_, gam, delta);
    Swap(a_, beta, delta);
    return false;
  }
  if (!A().Contains(gam)) throw Deviation{"φ(st) outside φ̄(a) ∪ φ̄(b) ∪ φ̄(u)"};

  Note("case γ ∈ φ̄(a)");
  if (T().Contains(delta)) {
    Swap(t_, beta, gam);
    Swap(a_, beta, delta);
    return false;
  }
  const ColorSet rest = gamma - ColorSet::Of(alpha) - ColorSet::Of(beta);
  if (rest.Empty()) throw Deviation{"|Γ| < 3"};
  const ColorSet rest_b = rest & B();
  if (!rest_b.Empty()) {
    const Color tau = rest_b.Min();
    if (UOnChainOfA(tau, delta)) {
      Swap(t_, tau, delta);
    } else {
      Swap(a_, tau, delta);
    }
    return false;
  }
  const Color tau = rest.Min();
  if (!UOnChainOfA(beta, delta)) {
    Swap(a_, beta, delta);
    Swap(t_, alpha, delta);
    Swap(a_, gam, delta);
    Swap(t_, beta, gam);
    Swap(t_, gam, alpha);
    Swap(t_, tau, gam);
    Swap(a_, beta, gam);
    Swap(a_, beta, delta);
  } else {
    Swap(t_, beta, delta);
    Swap(t_, tau, beta);
    Swap(a_, beta, gam);
    Swap(a_, gam, delta);
  }
  return false;
}

// Iterative deepening over endpoint swaps at a, b, t within the budget left.
bool Normalizer::Fallback() {
  const std::vector<Vertex> pivots{a_, b_, t_};
  const int k = w_.k();
  std::vector<ScriptStep> path;
  std::function<bool(int)> dfs = [&](int depth) -> bool {
    if (IsNormalizedK5(w_, path_)) return true;
    if (depth == 0) return false;
    for (Vertex v : pivots) {
      for (Color x : w_.Missing(v).ToVector()) {
        for (Color y = 1; y <= k; ++y) {
          if (w_.Missing(v).Contains(y)) continue;
          const PartialEdgeColoring saved = w_;
          SwapAt(w_, v, x, y);
          path.push_back(ScriptStep::SwapAt(v, x, y));
          if (dfs(depth - 1)) return true;
          path.pop_back();
          w_ = saved;
        }
      }
    }
    return false;
  };
  const int budget = kNormalizeSwapBound - out_.swaps;
  for (int d = 1; d <= std::min(4, budget); ++d) {
    if (dfs(d)) {
      for (const auto& st : path) out_.trace.steps.push_back(st);
      out_.swaps += static_cast<int>(path.size());
      return true;
    }
  }
  return false;
}

NormalizationOutcome Normalizer::Finish() {
  out_.kind = NormalizationOutcome::Kind::kNormalized;
  out_.alpha = w_.ColorOf(b_, u_);
  out_.beta = w_.ColorOf(u_, s_);
  out_.gamma = w_.ColorOf(s_, t_);
  out_.coloring = w_;
  return std::move(out_);
}

NormalizationOutcome Normalizer::Run() {
  out_.coloring = w_;
  std::string deviation;
  try {
    for (int pass = 0; pass < kNormalizeSwapBound; ++pass) {
      if (auto full = Guard()) {
        out_.kind = NormalizationOutcome::Kind::kProperColoring;
        out_.coloring = std::move(*full);
        return std::move(out_);
      }
      if (Pass()) return Finish();
    }
    deviation = "dispatch did not converge";
  } catch (const Deviation& d) {
    deviation = d.why;
  }
  Note("deviation: " + deviation);
  if (auto full = Guard()) {
    out_.kind = NormalizationOutcome::Kind::kProperColoring;
    out_.coloring = std::move(*full);
    return std::move(out_);
  }
  if (Fallback()) {
    out_.used_fallback = true;
    Note("fallback search");
    return Finish();
  }
  // Every branch left is one where ab is not critical; confirm by search.
  const Graph& g = w_.graph();
  if (auto full = SolveEdgeColoring(g, w_.k())) {
    Note("host has a full coloring");
    out_.kind = NormalizationOutcome::Kind::kProperColoring;
    out_.coloring = std::move(*full);
    return std::move(out_);
  }
  throw NormalizationError("normalization stuck: " + deviation, out_.trace);
}

}  // namespace

NormalizationOutcome NormalizeK5(const PartialEdgeColoring& c,
                                 const KiersteadPath& k) {
  if (k.v.size() != 5) throw PreconditionError("path must have 5 vertices");
  if (c.k() != MaxDegree(c.graph())) {
    throw PreconditionError("coloring must use Δ colors");
  }
  const auto un = c.Uncolored();
  if (un.size() != 1 || un[0] != Edge::Of(k.v[0], k.v[1])) {
    throw PreconditionError("ab must be the only uncolored edge");
  }
  if (!c.IsProper()) throw PreconditionError("coloring is not proper");
  if (!IsKiersteadPath(c, k.v)) {
    throw PreconditionError("not a Kierstead path");
  }
  const ColorSet gamma =
      c.Missing(k.v[4]) & (c.Missing(k.v[0]) | c.Missing(k.v[1]));
  if (gamma.Size() < 3) {
    throw PreconditionError("|φ̄(t) ∩ (φ̄(a) ∪ φ̄(b))| < 3");
  }
  return Normalizer(c, k).Run();
}

VerificationReport ReplayProofScript(const PartialEdgeColoring& c,
                                     const SwapScript& s,
                                     ReplayExpectation expect) {
  VerificationReport r("replay");
  r.Hit();
  try {
    const ScriptResult res = ApplyScript(c, s);
    r.Count("steps", s.steps.size());
    if (!res.every_step_proper) r.notes.insert("improper intermediate state");
    if (expect == ReplayExpectation::kProperFull && !res.coloring.IsFull()) {
      r.Fail({ToGraph6(c.graph()), SerializeColoring(res.coloring), "",
              "final coloring has uncolored edges"});
    }
  } catch (const ScriptError& e) {
    r.Fail({ToGraph6(c.graph()), SerializeColoring(c),
            "step " + std::to_string(e.step()), e.what()});
  }
  return r;
}

}  // namespace ecrit
