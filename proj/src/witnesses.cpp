#include "ecrit/witnesses.hpp"

#include <algorithm>
#include <stdexcept>

#include "ecrit/errors.hpp"
#include "ecrit/kierstead.hpp"

namespace ecrit {

const char* KindName(WitnessKind k) {
  switch (k) {
    case WitnessKind::kShortKite:
      return "shortkite";
    case WitnessKind::kKite:
      return "kite";
    case WitnessKind::kFork:
      return "fork";
  }
  return "?";
}

WitnessKind ParseKindName(const std::string& s) {
  if (s == "shortkite") return WitnessKind::kShortKite;
  if (s == "kite") return WitnessKind::kKite;
  if (s == "fork") return WitnessKind::kFork;
  throw std::out_of_range("unknown structure kind '" + s + "'");
}

const std::vector<std::string>& StructureWitness::Roles(WitnessKind k) {
  static const std::vector<std::string> shortkite{"a", "b", "c",
                                                  "u", "x", "y"};
  static const std::vector<std::string> kite{"a",  "b",  "c",  "u",
                                             "s1", "s2", "t1", "t2"};
  static const std::vector<std::string> fork{"a",  "b",  "u", "s1",
                                             "s2", "t1", "t2"};
  switch (k) {
    case WitnessKind::kShortKite:
      return shortkite;
    case WitnessKind::kKite:
      return kite;
    case WitnessKind::kFork:
      return fork;
  }
  return shortkite;
}

Vertex StructureWitness::At(const std::string& role) const {
  const auto& roles = Roles(kind);
  const auto it = std::find(roles.begin(), roles.end(), role);
  if (it == roles.end()) throw std::out_of_range("no role '" + role + "'");
  return v[it - roles.begin()];
}

std::string StructureWitness::ToString() const {
  std::string s = KindName(kind);
  const auto& roles = Roles(kind);
  for (std::size_t i = 0; i < v.size(); ++i) {
    s += " " + roles[i] + "=" + std::to_string(v[i]);
  }
  return s;
}

namespace {

bool ForkColors(const PartialEdgeColoring& c, Vertex a, Vertex b, Vertex u,
                Vertex s1, Vertex s2, Vertex t1, Vertex t2) {
  const ColorSet ab = c.Missing(a) | c.Missing(b);
  return c.Missing(a).Contains(c.ColorOf(b, u)) &&
         ab.Contains(c.ColorOf(u, s1)) && ab.Contains(c.ColorOf(u, s2)) &&
         (ab & c.Missing(t2)).Contains(c.ColorOf(s1, t1)) &&
         (ab & c.Missing(t1)).Contains(c.ColorOf(s2, t2));
}

void ShortKites(const PartialEdgeColoring& c, Vertex a, Vertex b,
                std::vector<StructureWitness>& out) {
  const Graph& g = c.graph();
  const ColorSet mab = c.Missing(a) | c.Missing(b);
  for (VertexMask mu = g.Neighbors(b) & ~Bit(a); mu; mu &= mu - 1) {
    const Vertex u = std::countr_zero(mu);
    if (!mab.Contains(c.ColorOf(b, u))) continue;
    const ColorSet mabu = mab | c.Missing(u);
    for (VertexMask mc = g.Neighbors(a) & g.Neighbors(u) & ~Bit(b); mc;
         mc &= mc - 1) {
      const Vertex cc = std::countr_zero(mc);
      if (!mab.Contains(c.ColorOf(a, cc))) continue;
      const ColorSet mabc = mab | c.Missing(cc);
      if (!mabc.Contains(c.ColorOf(cc, u))) continue;
      const ColorSet mabcu = mabc | c.Missing(u);
      const VertexMask used = Bit(a) | Bit(b) | Bit(cc) | Bit(u);
      for (VertexMask mx = g.Neighbors(u) & ~used; mx; mx &= mx - 1) {
        const Vertex x = std::countr_zero(mx);
        if (!mabu.Contains(c.ColorOf(u, x))) continue;
        for (VertexMask my = g.Neighbors(u) & ~used & ~Bit(x); my;
             my &= my - 1) {
          const Vertex y = std::countr_zero(my);
          if (!mabcu.Contains(c.ColorOf(u, y))) continue;
          out.push_back({WitnessKind::kShortKite, {a, b, cc, u, x, y}});
        }
      }
    }
  }
}

void Kites(const PartialEdgeColoring& c, Vertex a, Vertex b,
           std::vector<StructureWitness>& out) {
  const Graph& g = c.graph();
  const ColorSet mab = c.Missing(a) | c.Missing(b);
  for (VertexMask mu = g.Neighbors(b) & ~Bit(a); mu; mu &= mu - 1) {
    const Vertex u = std::countr_zero(mu);
    if (!mab.Contains(c.ColorOf(b, u))) continue;
    const ColorSet mabu = mab | c.Missing(u);
    for (VertexMask mc = g.Neighbors(a) & g.Neighbors(u) & ~Bit(b); mc;
         mc &= mc - 1) {
      const Vertex cc = std::countr_zero(mc);
      if (!mab.Contains(c.ColorOf(a, cc))) continue;
      const ColorSet mabc = mab | c.Missing(cc);
      if (!mabc.Contains(c.ColorOf(cc, u))) continue;
      const ColorSet mabcu = mabc | c.Missing(u);
      const VertexMask used = Bit(a) | Bit(b) | Bit(cc) | Bit(u);
      for (VertexMask m1 = g.Neighbors(u) & ~used; m1; m1 &= m1 - 1) {
        const Vertex s1 = std::countr_zero(m1);
        if (!mabu.Contains(c.ColorOf(u, s1))) continue;
        const ColorSet k1 = mabu | c.Missing(s1);
        for (VertexMask m2 = g.Neighbors(u) & ~used & ~Bit(s1); m2;
             m2 &= m2 - 1) {
          const Vertex s2 = std::countr_zero(m2);
          if (!mabcu.Contains(c.ColorOf(u, s2))) continue;
          const ColorSet k2 = mabcu | c.Missing(s2);
          const VertexMask used2 = used | Bit(s1) | Bit(s2);
          for (VertexMask n1 = g.Neighbors(s1) & ~used2; n1; n1 &= n1 - 1) {
            const Vertex t1 = std::countr_zero(n1);
            const Color col = c.ColorOf(s1, t1);
            if (!k1.Contains(col) || !k2.Contains(col)) continue;
            for (VertexMask n2 = g.Neighbors(s2) & ~used2 & ~Bit(t1); n2;
                 n2 &= n2 - 1) {
              const Vertex t2 = std::countr_zero(n2);
              if (c.ColorOf(s2, t2) != col) continue;
              out.push_back(
                  {WitnessKind::kKite, {a, b, cc, u, s1, s2, t1, t2}});
            }
          }
        }
      }
    }
  }
}

void Forks(const PartialEdgeColoring& c, Vertex a, Vertex b,
           std::vector<StructureWitness>& out) {
  const Graph& g = c.graph();
  const ColorSet mab = c.Missing(a) | c.Missing(b);
  for (VertexMask mu = g.Neighbors(b) & ~Bit(a); mu; mu &= mu - 1) {
    const Vertex u = std::countr_zero(mu);
    if (!c.Missing(a).Contains(c.ColorOf(b, u))) continue;
    const VertexMask used = Bit(a) | Bit(b) | Bit(u);
    for (VertexMask m1 = g.Neighbors(u) & ~used; m1; m1 &= m1 - 1) {
      const Vertex s1 = std::countr_zero(m1);
      if (!mab.Contains(c.ColorOf(u, s1))) continue;
      for (VertexMask m2 = g.Neighbors(u) & ~used & ~Bit(s1); m2;
           m2 &= m2 - 1) {
        const Vertex s2 = std::countr_zero(m2);
        if (s2 < s1 || !mab.Contains(c.ColorOf(u, s2))) continue;
        const VertexMask used2 = used | Bit(s1) | Bit(s2);
        for (VertexMask n1 = g.Neighbors(s1) & ~used2; n1; n1 &= n1 - 1) {
          const Vertex t1 = std::countr_zero(n1);
          for (VertexMask n2 = g.Neighbors(s2) & ~used2 & ~Bit(t1); n2;
               n2 &= n2 - 1) {
            const Vertex t2 = std::countr_zero(n2);
            if (ForkColors(c, a, b, u, s1, s2, t1, t2)) {
              out.push_back({WitnessKind::kFork, {a, b, u, s1, s2, t1, t2}});
            }
          }
        }
      }
    }
  }
}

bool Distinct(const std::vector<Vertex>& v, int n) {
  VertexMask seen = 0;
  for (Vertex x : v) {
    if (x < 0 || x >= n || ((seen >> x) & 1U)) return false;
    seen |= Bit(x);
  }
  return true;
}

}  // namespace

std::vector<StructureWitness> FindStructureWitnesses(
    const PartialEdgeColoring& c, WitnessKind kind) {
  const std::vector<Edge> un = c.Uncolored();
  if (un.size() != 1) {
    throw PreconditionError("structure search needs exactly one uncolored edge");
  }
  std::vector<StructureWitness> out;
  for (const auto& [a, b] : {std::pair{un[0].u, un[0].v},
                             std::pair{un[0].v, un[0].u}}) {
    switch (kind) {
      case WitnessKind::kShortKite:
        ShortKites(c, a, b, out);
        break;
      case WitnessKind::kKite:
        Kites(c, a, b, out);
        break;
      case WitnessKind::kFork:
        Forks(c, a, b, out);
        break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool IsStructureWitness(const PartialEdgeColoring& c,
                        const StructureWitness& w) {
  const Graph& g = c.graph();
  if (w.v.size() != StructureWitness::Roles(w.kind).size()) return false;
  if (!Distinct(w.v, c.order())) return false;
  const auto has = [&](Vertex p, Vertex q) { return g.HasEdge(p, q); };
  const Vertex a = w.v[0];
  const Vertex b = w.v[1];
  if (!has(a, b) || c.ColorOf(a, b) != 0) return false;
  switch (w.kind) {
    case WitnessKind::kShortKite: {
      const auto [cc, u, x, y] = std::tuple{w.v[2], w.v[3], w.v[4], w.v[5]};
      return has(a, cc) && has(b, u) && has(cc, u) && has(u, x) &&
             has(u, y) && IsKiersteadPath(c, {a, b, u, x}) &&
             IsKiersteadPath(c, {b, a, cc, u, y});
    }
    case WitnessKind::kKite: {
      const Vertex cc = w.v[2], u = w.v[3], s1 = w.v[4], s2 = w.v[5],
                   t1 = w.v[6], t2 = w.v[7];
      return has(a, cc) && has(b, u) && has(cc, u) && has(u, s1) &&
             has(u, s2) && has(s1, t1) && has(s2, t2) &&
             IsKiersteadPath(c, {a, b, u, s1, t1}) &&
             IsKiersteadPath(c, {b, a, cc, u, s2, t2}) &&
             c.ColorOf(s1, t1) == c.ColorOf(s2, t2);
    }
    case WitnessKind::kFork: {
      const Vertex u = w.v[2], s1 = w.v[3], s2 = w.v[4], t1 = w.v[5],
                   t2 = w.v[6];
      return has(b, u) && has(u, s1) && has(u, s2) && has(s1, t1) &&
             has(s2, t2) && ForkColors(c, a, b, u, s1, s2, t1, t2);
    }
  }
  return false;
}

}  // namespace ecrit
