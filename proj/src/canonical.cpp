#include "ecrit/canonical.hpp"

#include <algorithm>
#include <numeric>

#include "ecrit/graph6.hpp"

namespace ecrit {
namespace {

using Partition = std::vector<std::vector<Vertex>>;

// Split cells by neighbour counts into other cells until equitable.
void Refine(const Graph& g, Partition& p) {
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t s = 0; s < p.size() && !changed; ++s) {
      VertexMask splitter = 0;
      for (Vertex v : p[s]) splitter |= Bit(v);
      for (std::size_t j = 0; j < p.size(); ++j) {
        if (p[j].size() < 2) continue;
        std::vector<std::pair<int, Vertex>> keyed;
        keyed.reserve(p[j].size());
        for (Vertex v : p[j]) {
          keyed.emplace_back(std::popcount(g.Neighbors(v) & splitter), v);
        }
        std::sort(keyed.begin(), keyed.end());
        if (keyed.front().first == keyed.back().first) continue;
        Partition parts;
        for (std::size_t i = 0; i < keyed.size(); ++i) {
          if (i == 0 || keyed[i].first != keyed[i - 1].first) parts.emplace_back();
          parts.back().push_back(keyed[i].second);
        }
        p.erase(p.begin() + j);
        p.insert(p.begin() + j, parts.begin(), parts.end());
        changed = true;
        break;
      }
    }
  }
}

std::vector<VertexMask> Rows(const Graph& g, const std::vector<int>& label) {
  const int n = g.order();
  std::vector<VertexMask> rows(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    VertexMask r = 0;
    for (VertexMask m = g.Neighbors(v); m; m &= m - 1) {
      // Higher bit for smaller canonical label, so lexicographic order on
      // rows compares the upper-left of the matrix first.
      r |= Bit(n - 1 - label[std::countr_zero(m)]);
    }
    rows[label[v]] = r;
  }
  return rows;
}

struct Searcher {
  const Graph& g;
  std::vector<VertexMask> best_rows;
  std::vector<std::vector<int>> best_labels;

  void Leaf(const Partition& p) {
    std::vector<int> label(g.order());
    for (std::size_t i = 0; i < p.size(); ++i) label[p[i][0]] = static_cast<int>(i);
    std::vector<VertexMask> rows = Rows(g, label);
    if (best_labels.empty() || rows > best_rows) {
      best_rows = std::move(rows);
      best_labels.clear();
      best_labels.push_back(std::move(label));
    } else if (rows == best_rows) {
      best_labels.push_back(std::move(label));
    }
  }

  void Explore(Partition p) {
    Refine(g, p);
    std::size_t target = p.size();
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i].size() > 1 &&
          (target == p.size() || p[i].size() < p[target].size())) {
        target = i;
      }
    }
    if (target == p.size()) {
      Leaf(p);
      return;
    }
    for (Vertex v : p[target]) {
      Partition child = p;
      std::vector<Vertex> rest;
      for (Vertex w : p[target]) {
        if (w != v) rest.push_back(w);
      }
      child[target] = {v};
      child.insert(child.begin() + target + 1, rest);
      Explore(std::move(child));
    }
  }
};

}  // namespace

CanonicalLabeling Canonicalize(const Graph& g) {
  const int n = g.order();
  CanonicalLabeling out;
  out.orbit.resize(n);
  std::iota(out.orbit.begin(), out.orbit.end(), 0);
  if (n == 0) {
    out.graph = Graph(0);
    return out;
  }
  Searcher s{g, {}, {}};
  Partition all(1);
  for (Vertex v = 0; v < n; ++v) all[0].push_back(v);
  s.Explore(std::move(all));

  out.label = s.best_labels.front();
  out.graph = Graph(n);
  for (const Edge& e : g.Edges()) out.graph.AddEdge(out.label[e.u], out.label[e.v]);

  // Each optimal leaf differs from the first by an automorphism.
  std::vector<int> inv0(n);
  for (Vertex v = 0; v < n; ++v) inv0[out.label[v]] = v;
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& lab : s.best_labels) {
    for (Vertex v = 0; v < n; ++v) {
      if (lab[v] == n - 1) out.last_orbit |= Bit(v);
      const int a = find(v);
      const int b = find(inv0[lab[v]]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  for (Vertex v = 0; v < n; ++v) out.orbit[v] = find(v);
  return out;
}

std::string CanonicalKey(const Graph& g) {
  return ToGraph6(Canonicalize(g).graph);
}

bool Isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  if (a.DegreeSequence() != b.DegreeSequence()) return false;
  return Canonicalize(a).graph == Canonicalize(b).graph;
}

}  // namespace ecrit
