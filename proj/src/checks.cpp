#include "ecrit/checks.hpp"

#include "ecrit/errors.hpp"
#include "ecrit/graph6.hpp"
#include "ecrit/kempe.hpp"

namespace ecrit {
namespace {

Counterexample Cx(const PartialEdgeColoring& c, std::string witness,
                  std::string clause) {
  return {ToGraph6(c.graph()), SerializeColoring(c), std::move(witness),
          std::move(clause)};
}

Counterexample Cx(const Graph& g, std::string witness, std::string clause) {
  return {ToGraph6(g), "", std::move(witness), std::move(clause)};
}

std::string Pair(const char* name, Vertex a, Vertex b) {
  return std::string(name) + "=(" + std::to_string(a) + "," +
         std::to_string(b) + ")";
}

}  // namespace

bool MeetsThreeQuarterBound(int delta, int n) { return 4 * delta >= 3 * (n - 1); }

VerificationReport CheckVal(const Graph& g, Edge e) {
  VerificationReport r("val");
  r.Hit();
  const int delta = MaxDegree(g);
  for (const auto& [x, y] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
    int big = 0;
    for (VertexMask m = g.Neighbors(x) & ~Bit(y); m; m &= m - 1) {
      big += g.Degree(std::countr_zero(m)) == delta ? 1 : 0;
    }
    if (big < delta - g.Degree(y) + 1) {
      r.Fail(Cx(g, Pair("xy", x, y),
                "x has " + std::to_string(big) + " max-degree neighbours, needs " +
                    std::to_string(delta - g.Degree(y) + 1)));
    }
  }
  return r;
}

PartialEdgeColoring DropUncolored(const PartialEdgeColoring& c) {
  Graph h = c.graph();
  for (const Edge& e : c.Uncolored()) h.RemoveEdge(e.u, e.v);
  PartialEdgeColoring out(h, c.k());
  for (const auto& [e, col] : c.Assignment()) out.SetRaw(e, col);
  return out;
}

VerificationReport CheckParity(const PartialEdgeColoring& c) {
  if (!c.IsFull()) {
    throw PreconditionError("parity check needs a full coloring");
  }
  VerificationReport r("parity");
  r.Hit();
  const std::vector<int> counts = DeficiencyCounts(c);
  for (Color a = 1; a <= c.k(); ++a) {
    if ((counts[a] - c.order()) % 2 != 0) {
      r.Fail(Cx(c, "color=" + std::to_string(a),
                std::to_string(counts[a]) + " vertices miss the color, n=" +
                    std::to_string(c.order())));
    }
  }
  return r;
}

FanReports CheckFanLemmas(const PartialEdgeColoring& c, const Multifan& f) {
  FanReports out{VerificationReport("multifan_elementary_linkage"),
                 VerificationReport("multifan_induced_pairs")};
  out.basic.Hit();
  if (!c.IsElementary(f.VertexSet())) {
    out.basic.Fail(Cx(c, f.ToString(), "fan vertex set not elementary"));
    out.pairs.Miss();
    return out;
  }
  for (Color alpha : c.Missing(f.r).ToVector()) {
    for (Vertex s : f.leaves) {
      for (Color beta : c.Missing(s).ToVector()) {
        out.basic.Count("center_leaf_pairs");
        if (!AreLinked(c, f.r, s, alpha, beta)) {
          out.basic.Fail(Cx(c, f.ToString() + " s=" + std::to_string(s),
                            "center and leaf not (" + std::to_string(alpha) +
                                "," + std::to_string(beta) + ")-linked"));
        }
      }
    }
  }

  const AlphaSequences seq(c, f);
  bool any = false;
  const int p = static_cast<int>(f.leaves.size());
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < p; ++j) {
      if (i == j) continue;
      const Vertex si = f.leaves[i];
      const Vertex sj = f.leaves[j];
      for (Color delta : c.Missing(si).ToVector()) {
        for (Color lambda : c.Missing(sj).ToVector()) {
          const std::string where = f.ToString() + " " + Pair("si,sj", si, sj) +
                                    " " + Pair("colors", delta, lambda);
          if (seq.AnchorOf(delta) != seq.AnchorOf(lambda)) {
            any = true;
            out.pairs.Hit();
            out.pairs.Count("different_anchor");
            if (!AreLinked(c, si, sj, delta, lambda)) {
              out.pairs.Fail(Cx(c, where, "differently induced leaves unlinked"));
            }
          } else if (seq.Precedes(delta, lambda) &&
                     !AreLinked(c, si, sj, delta, lambda)) {
            any = true;
            out.pairs.Hit();
            out.pairs.Count("same_anchor_unlinked");
            if (!ChainFrom(c, sj, lambda, delta).Contains(f.r)) {
              out.pairs.Fail(Cx(c, where, "center not on the chain from s_j"));
            }
          }
        }
      }
    }
  }
  if (!any) out.pairs.Miss();
  return out;
}

VerificationReport CheckKierstead4(const PartialEdgeColoring& c,
                                   const KiersteadPath& k) {
  VerificationReport r("kierstead4");
  if (k.v.size() != 4) throw PreconditionError("expected a 4-vertex path");
  r.Hit();
  const Graph& g = c.graph();
  const int delta = MaxDegree(g);
  const auto& v = k.v;
  const int overlap =
      (c.Missing(v[3]) & (c.Missing(v[0]) | c.Missing(v[1]))).Size();
  r.Count("overlap_" + std::to_string(overlap));
  if (overlap > 1) {
    r.Fail(Cx(c, "path " + k.ToString(),
              "last vertex shares " + std::to_string(overlap) +
                  " missing colors with the uncolored edge"));
  }
  if (std::min(g.Degree(v[2]), g.Degree(v[3])) < delta) {
    r.Count("low_degree_elementary");
    if (!c.IsElementary(k.VertexSet())) {
      r.Fail(Cx(c, "path " + k.ToString(),
                "low-degree path vertex set not elementary"));
    }
  }
  return r;
}

K5Reports CheckK5Claims(const PartialEdgeColoring& c, const KiersteadPath& k) {
  if (k.v.size() != 5) throw PreconditionError("expected a 5-vertex path");
  K5Reports out{VerificationReport("k5_degrees"),
                VerificationReport("k5_companion")};
  const Graph& g = c.graph();
  const int delta = MaxDegree(g);
  const Vertex a = k.v[0], b = k.v[1], u = k.v[2], t = k.v[4];
  const ColorSet mab = c.Missing(a) | c.Missing(b);
  const int gamma = (c.Missing(t) & mab).Size();
  if (gamma < 3) {
    out.degrees.Miss();
  } else {
    out.degrees.Hit();
    if (g.Degree(b) != delta || g.Degree(u) != delta) {
      out.degrees.Fail(Cx(c, "path " + k.ToString(),
                          "b or u below maximum degree"));
    }
  }
  bool any = false;
  if (gamma >= 4) {
    const ColorSet mabu = mab | c.Missing(u);
    for (VertexMask m = g.Neighbors(u) & ~k.VertexSet(); m; m &= m - 1) {
      const Vertex x = std::countr_zero(m);
      if (!mabu.Contains(c.ColorOf(u, x))) continue;
      if (!c.Missing(x).SubsetOf(mab)) continue;
      any = true;
      out.companion.Hit();
      if (g.Degree(x) != delta) {
        out.companion.Fail(Cx(c, "path " + k.ToString() + " x=" +
                                     std::to_string(x),
                              "companion vertex below maximum degree"));
      }
    }
  }
  if (!any) out.companion.Miss();
  return out;
}

VerificationReport CheckShortKite(const PartialEdgeColoring& c,
                                  const StructureWitness& w) {
  VerificationReport r("shortkite");
  const Vertex a = w.At("a"), b = w.At("b"), x = w.At("x"), y = w.At("y");
  const ColorSet mab = c.Missing(a) | c.Missing(b);
  if (!(c.Missing(x) | c.Missing(y)).SubsetOf(mab)) {
    r.Miss();
    return r;
  }
  r.Hit();
  const Graph& g = c.graph();
  if (std::max(g.Degree(x), g.Degree(y)) != MaxDegree(g)) {
    r.Fail(Cx(c, w.ToString(), "both x and y below maximum degree"));
  }
  return r;
}

VerificationReport CheckKite(const PartialEdgeColoring& c,
                             const StructureWitness& w) {
  VerificationReport r("kite");
  const Vertex a = w.At("a"), b = w.At("b");
  const Vertex s1 = w.At("s1"), s2 = w.At("s2");
  const Vertex t1 = w.At("t1"), t2 = w.At("t2");
  if (c.ColorOf(s1, t1) != c.ColorOf(s2, t2)) {
    r.Miss();
    return r;
  }
  r.Hit();
  const int overlap = (c.Missing(t1) & c.Missing(t2) &
                       (c.Missing(a) | c.Missing(b)))
                          .Size();
  r.Count("overlap_" + std::to_string(overlap));
  if (overlap > 4) {
    r.Fail(Cx(c, w.ToString(),
              "tips share " + std::to_string(overlap) + " colors with ab"));
  }
  return r;
}

VerificationReport CheckForkAbsence(const PartialEdgeColoring& c) {
  VerificationReport r("fork");
  const Graph& g = c.graph();
  const int delta = MaxDegree(g);
  const std::vector<Edge> un = c.Uncolored();
  if (un.size() != 1) {
    throw PreconditionError("fork check needs exactly one uncolored edge");
  }
  r.Count("forks_found", FindStructureWitnesses(c, WitnessKind::kFork).size());
  bool any = false;
  for (const auto& [a, b] : {std::pair{un[0].u, un[0].v},
                             std::pair{un[0].v, un[0].u}}) {
    for (VertexMask mu = g.Neighbors(b) & ~Bit(a); mu; mu &= mu - 1) {
      const Vertex u = std::countr_zero(mu);
      const VertexMask used = Bit(a) | Bit(b) | Bit(u);
      for (VertexMask m1 = g.Neighbors(u) & ~used; m1; m1 &= m1 - 1) {
        const Vertex s1 = std::countr_zero(m1);
        for (VertexMask m2 = g.Neighbors(u) & ~used & ~(Bit(s1 + 1) - 1); m2;
             m2 &= m2 - 1) {
          const Vertex s2 = std::countr_zero(m2);
          const VertexMask used2 = used | Bit(s1) | Bit(s2);
          for (VertexMask n1 = g.Neighbors(s1) & ~used2; n1; n1 &= n1 - 1) {
            const Vertex t1 = std::countr_zero(n1);
            for (VertexMask n2 = g.Neighbors(s2) & ~used2 & ~Bit(t1); n2;
                 n2 &= n2 - 1) {
              const Vertex t2 = std::countr_zero(n2);
              if (delta < g.Degree(a) + g.Degree(t1) + g.Degree(t2) + 1) {
                continue;
              }
              any = true;
              r.Hit();
              const StructureWitness w{WitnessKind::kFork,
                                       {a, b, u, s1, s2, t1, t2}};
              if (IsStructureWitness(c, w)) {
                r.Fail(Cx(c, w.ToString(), "fork present under degree bound"));
              }
            }
          }
        }
      }
    }
  }
  if (!any) r.Miss();
  return r;
}

PairReports CheckFullDeficiencyPair(const Graph& g, Vertex a, Vertex b) {
  PairReports out{VerificationReport("fulldpair"),
                  VerificationReport("fulldpair_corollary")};
  const int n = g.order();
  const int delta = MaxDegree(g);
  const bool both_low = g.Degree(a) < delta && g.Degree(b) < delta;
  const VertexMask ab = Bit(a) | Bit(b);
  const VertexMask nab = g.Neighbors(a) | g.Neighbors(b);
  const int nab_size = std::popcount(nab);
  const std::string where = Pair("ab", a, b);
  out.lemma.Hit();
  int low = 0;
  int deficient_by_one = 0;
  for (Vertex x = 0; x < n; ++x) {
    if ((ab >> x) & 1U) continue;
    const int d = g.Degree(x);
    const std::string at = where + " x=" + std::to_string(x);
    if (d < delta) ++low;
    if (d == delta - 1) ++deficient_by_one;
    if (((nab >> x) & 1U) && d != delta) {
      out.lemma.Fail(Cx(g, at, "neighbour of the pair below maximum degree"));
    }
    if (DistanceToSet(g, x, ab) == 2) {
      out.lemma.Count("distance_two");
      if (d < delta - 1 || (both_low && d != delta)) {
        out.lemma.Fail(Cx(g, at, "distance-two vertex degree too small"));
      }
    }
    if (d >= n - nab_size) {
      out.lemma.Count("high_degree");
      if (d < delta - 1 || (both_low && d != delta)) {
        out.lemma.Fail(Cx(g, at, "high-degree vertex below bound"));
      }
    }
  }
  if (low == 1) {
    out.lemma.Fail(Cx(g, where, "exactly one deficient vertex outside the pair"));
  }
  if (MeetsThreeQuarterBound(delta, n)) {
    out.corollary.Hit();
    if (deficient_by_one > 1) {
      out.corollary.Fail(Cx(g, where,
                            std::to_string(deficient_by_one) +
                                " vertices of degree max-1 outside the pair"));
    }
  } else {
    out.corollary.Miss();
  }
  return out;
}

}  // namespace ecrit
