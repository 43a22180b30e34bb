#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace oracle {

using ecrit::Color;
using ecrit::ColorSet;
using ecrit::Graph;
using ecrit::PartialEdgeColoring;
using ecrit::StructureWitness;
using ecrit::WitnessKind;

namespace {

void Partitions(int n, int max_part, std::vector<int>& cur,
                const std::function<void(const std::vector<int>&)>& f) {
  if (n == 0) {
    f(cur);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    Partitions(n - p, p, cur, f);
    cur.pop_back();
  }
}

std::uint64_t Factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

}  // namespace

std::uint64_t BurnsideGraphCount(int n) {
  // Σ over cycle types λ of |class(λ)| · 2^{pair orbits}, divided by n!.
  unsigned __int128 total = 0;
  std::vector<int> cur;
  Partitions(n, n, cur, [&](const std::vector<int>& parts) {
    std::uint64_t z = 1;
    std::vector<int> mult(n + 1, 0);
    for (int p : parts) {
      z *= static_cast<std::uint64_t>(p);
      ++mult[p];
    }
    for (int m : mult) z *= Factorial(m);
    int orbits = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      orbits += parts[i] / 2;
      for (std::size_t j = i + 1; j < parts.size(); ++j) {
        orbits += std::gcd(parts[i], parts[j]);
      }
    }
    total += static_cast<unsigned __int128>(Factorial(n) / z) << orbits;
  });
  return static_cast<std::uint64_t>(total / Factorial(n));
}

std::uint64_t Code(const Graph& g, const std::vector<int>& perm) {
  const int n = g.order();
  std::uint64_t code = 0;
  int bit = 0;
  // Position of the pair (perm[u], perm[v]) in a fixed order.
  std::vector<int> index(n * n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      index[i * n + j] = index[j * n + i] = bit++;
    }
  }
  for (const ecrit::Edge& e : g.Edges()) {
    code |= std::uint64_t{1} << index[perm[e.u] * n + perm[e.v]];
  }
  return code;
}

std::uint64_t MinCode(const Graph& g) {
  std::vector<int> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    best = std::min(best, Code(g, perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::set<std::uint64_t> LabeledClasses(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  std::set<std::uint64_t> classes;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    Graph g(n);
    for (std::size_t b = 0; b < pairs.size(); ++b) {
      if ((mask >> b) & 1U) g.AddEdge(pairs[b].first, pairs[b].second);
    }
    classes.insert(MinCode(g));
  }
  return classes;
}

bool IsKPath(const PartialEdgeColoring& c, const std::vector<int>& v) {
  const Graph& g = c.graph();
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (v[i] == v[j]) return false;
    }
  }
  if (v.size() < 2 || !g.HasEdge(v[0], v[1]) || c.ColorOf(v[0], v[1]) != 0) {
    return false;
  }
  for (std::size_t i = 2; i < v.size(); ++i) {
    if (!g.HasEdge(v[i - 1], v[i])) return false;
    const Color col = c.ColorOf(v[i - 1], v[i]);
    if (col == 0) return false;
    bool ok = false;
    for (std::size_t j = 0; j < i; ++j) ok = ok || c.Missing(v[j]).Contains(col);
    if (!ok) return false;
  }
  return true;
}

namespace {

bool Adj(const Graph& g, int a, int b) { return g.HasEdge(a, b); }

bool Accept(const PartialEdgeColoring& c, WitnessKind kind,
            const std::vector<int>& w) {
  const Graph& g = c.graph();
  const int a = w[0], b = w[1];
  if (!Adj(g, a, b) || c.ColorOf(a, b) != 0) return false;
  switch (kind) {
    case WitnessKind::kShortKite: {
      const int cc = w[2], u = w[3], x = w[4], y = w[5];
      return Adj(g, a, cc) && Adj(g, cc, u) && IsKPath(c, {a, b, u, x}) &&
             IsKPath(c, {b, a, cc, u, y});
    }
    case WitnessKind::kKite: {
      const int cc = w[2], u = w[3], s1 = w[4], s2 = w[5], t1 = w[6], t2 = w[7];
      return Adj(g, a, cc) && Adj(g, cc, u) && IsKPath(c, {a, b, u, s1, t1}) &&
             IsKPath(c, {b, a, cc, u, s2, t2}) &&
             c.ColorOf(s1, t1) == c.ColorOf(s2, t2);
    }
    case WitnessKind::kFork: {
      const int u = w[2], s1 = w[3], s2 = w[4], t1 = w[5], t2 = w[6];
      if (s2 < s1) return false;
      if (!Adj(g, b, u) || !Adj(g, u, s1) || !Adj(g, u, s2) ||
          !Adj(g, s1, t1) || !Adj(g, s2, t2)) {
        return false;
      }
      const ColorSet ma = c.Missing(a);
      const ColorSet mab = ma | c.Missing(b);
      return ma.Contains(c.ColorOf(b, u)) && mab.Contains(c.ColorOf(u, s1)) &&
             mab.Contains(c.ColorOf(u, s2)) &&
             mab.Contains(c.ColorOf(s1, t1)) &&
             c.Missing(t2).Contains(c.ColorOf(s1, t1)) &&
             mab.Contains(c.ColorOf(s2, t2)) &&
             c.Missing(t1).Contains(c.ColorOf(s2, t2));
    }
  }
  return false;
}

}  // namespace

std::vector<StructureWitness> BruteWitnesses(const PartialEdgeColoring& c,
                                             WitnessKind kind) {
  const int n = c.order();
  const int len = static_cast<int>(StructureWitness::Roles(kind).size());
  std::vector<StructureWitness> out;
  std::vector<int> w;
  std::vector<bool> used(n, false);
  std::function<void()> rec = [&] {
    if (static_cast<int>(w.size()) == len) {
      if (Accept(c, kind, w)) out.push_back({kind, w});
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      used[v] = true;
      w.push_back(v);
      rec();
      w.pop_back();
      used[v] = false;
    }
  };
  rec();
  std::sort(out.begin(), out.end());
  return out;
}

int BruteChromaticIndex(const Graph& g) {
  const auto edges = g.Edges();
  for (int k = ecrit::MaxDegree(g);; ++k) {
    std::vector<int> col(edges.size(), 0);
    std::function<bool(std::size_t)> rec = [&](std::size_t i) {
      if (i == edges.size()) return true;
      for (int c = 1; c <= k; ++c) {
        bool ok = true;
        for (std::size_t j = 0; j < i && ok; ++j) {
          const bool share = edges[j].Touches(edges[i].u) || edges[j].Touches(edges[i].v);
          ok = !(share && col[j] == c);
        }
        if (!ok) continue;
        col[i] = c;
        if (rec(i + 1)) return true;
      }
      col[i] = 0;
      return false;
    };
    if (rec(0)) return k;
  }
}

}  // namespace oracle
