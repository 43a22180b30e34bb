#include "ecrit/exact_solver.hpp"

#include <algorithm>
#include <random>

#include "ecrit/errors.hpp"

namespace ecrit {

std::vector<int> SeededPermutation(int n, std::uint64_t seed) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  std::mt19937_64 rng(seed);
  for (int i = n - 1; i > 0; --i) {
    const int j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
    std::swap(p[i], p[j]);
  }
  return p;
}

namespace {

class Search {
 public:
  Search(const Graph& g, int k, const std::vector<Edge>& skip,
         const SolverOptions& opts)
      : g_(g), k_(k), opts_(opts), used_(g.order(), 0), left_(g.order(), 0) {
    if (k < 0 || k > kMaxColors) {
      throw PreconditionError("color count must lie in [0, 63]");
    }
    for (const Edge& e : g.Edges()) {
      if (std::find(skip.begin(), skip.end(), e) != skip.end()) continue;
      edges_.push_back(e);
      ++left_[e.u];
      ++left_[e.v];
    }
    for (const Edge& e : skip) {
      if (!g.HasEdge(e.u, e.v)) {
        throw PreconditionError(ToString(e) + " is not an edge of the graph");
      }
    }
    color_.assign(edges_.size(), 0);
    if (opts.seed != 0) {
      priority_ = SeededPermutation(static_cast<int>(edges_.size()), opts.seed);
      const std::vector<int> p = SeededPermutation(k, opts.seed ^ 0x9e37U);
      for (int c : p) color_order_.push_back(c + 1);
    } else {
      priority_.resize(edges_.size());
      for (std::size_t i = 0; i < edges_.size(); ++i) {
        priority_[i] = static_cast<int>(i);
      }
      for (int c = 1; c <= k; ++c) color_order_.push_back(c);
    }
    use_count_.assign(k + 1, 0);
  }

  // Returns true when the visitor asked to stop.
  bool Run(const std::function<bool(const std::vector<Color>&)>& visit) {
    visit_ = &visit;
    return Dfs(0);
  }

  const std::vector<Edge>& edges() const { return edges_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  std::uint64_t Avail(std::size_t i) const {
    const Edge& e = edges_[i];
    return ColorSet::Range(k_).bits() & ~(used_[e.u] | used_[e.v]);
  }

  bool Dfs(int depth) {
    if (++nodes_ > opts_.node_budget) {
      throw BudgetExceeded(nodes_, deepest_,
                           static_cast<int>(edges_.size()));
    }
    deepest_ = std::max(deepest_, depth);
    if (depth == static_cast<int>(edges_.size())) return (*visit_)(color_);

    // Pick the uncolored edge with fewest available colors; collect the
    // per-vertex union of available colors for a Hall-type cut.
    const int n = g_.order();
    std::vector<std::uint64_t> reach(n, 0);
    int best = -1;
    int best_count = 1 << 30;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      if (color_[i]) continue;
      const std::uint64_t av = Avail(i);
      const int cnt = std::popcount(av);
      if (cnt == 0) return false;
      reach[edges_[i].u] |= av;
      reach[edges_[i].v] |= av;
      if (cnt < best_count ||
          (cnt == best_count && priority_[i] < priority_[best])) {
        best = static_cast<int>(i);
        best_count = cnt;
      }
    }
    for (Vertex v = 0; v < n; ++v) {
      if (left_[v] > std::popcount(reach[v])) return false;
    }
    // Each color class is a matching on the vertices still lacking it.
    const int remaining = static_cast<int>(edges_.size()) - depth;
    int capacity = 0;
    for (Color c = 1; c <= k_; ++c) {
      int free_here = 0;
      for (Vertex v = 0; v < n; ++v) {
        if (left_[v] > 0 && !((used_[v] >> c) & 1U)) ++free_here;
      }
      capacity += free_here / 2;
    }
    if (capacity < remaining) return false;

    const std::uint64_t av = Avail(best);
    bool offered_new = false;
    for (Color c : color_order_) {
      if (!((av >> c) & 1U)) continue;
      if (use_count_[c] == 0) {
        // First-use symmetry breaking: only the smallest unused color.
        if (offered_new || c != SmallestUnused()) continue;
        offered_new = true;
      }
      Place(best, c);
      const bool stop = Dfs(depth + 1);
      Unplace(best, c);
      if (stop) return true;
    }
    return false;
  }

  Color SmallestUnused() const {
    for (Color c = 1; c <= k_; ++c) {
      if (use_count_[c] == 0) return c;
    }
    return 0;
  }

  void Place(int i, Color c) {
    const Edge& e = edges_[i];
    color_[i] = c;
    used_[e.u] |= std::uint64_t{1} << c;
    used_[e.v] |= std::uint64_t{1} << c;
    --left_[e.u];
    --left_[e.v];
    ++use_count_[c];
  }

  void Unplace(int i, Color c) {
    const Edge& e = edges_[i];
    color_[i] = 0;
    used_[e.u] &= ~(std::uint64_t{1} << c);
    used_[e.v] &= ~(std::uint64_t{1} << c);
    ++left_[e.u];
    ++left_[e.v];
    --use_count_[c];
  }

  const Graph& g_;
  int k_;
  SolverOptions opts_;
  std::vector<Edge> edges_;
  std::vector<Color> color_;
  std::vector<std::uint64_t> used_;
  std::vector<int> left_;
  std::vector<int> priority_;
  std::vector<Color> color_order_;
  std::vector<int> use_count_;
  std::uint64_t nodes_ = 0;
  int deepest_ = 0;
  const std::function<bool(const std::vector<Color>&)>* visit_ = nullptr;
};

PartialEdgeColoring Materialize(const std::shared_ptr<const Graph>& g, int k,
                                const std::vector<Edge>& edges,
                                const std::vector<Color>& colors,
                                const std::vector<Color>& rename) {
  PartialEdgeColoring out(g, k);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    out.SetRaw(edges[i], rename.empty() ? colors[i] : rename[colors[i]]);
  }
  return out;
}

}  // namespace

std::optional<PartialEdgeColoring> SolveEdgeColoring(
    const Graph& g, int k, const std::vector<Edge>& skip,
    const SolverOptions& opts, SolveStats* stats) {
  Search s(g, k, skip, opts);
  std::vector<Color> found;
  const std::function<bool(const std::vector<Color>&)> take =
      [&](const std::vector<Color>& colors) {
        found = colors;
        return true;
      };
  bool ok = false;
  try {
    ok = s.Run(take);
  } catch (...) {
    if (stats) stats->nodes = s.nodes();
    throw;
  }
  if (stats) stats->nodes = s.nodes();
  if (!ok) return std::nullopt;
  std::vector<Color> rename;
  if (opts.seed != 0) {
    const std::vector<int> p = SeededPermutation(k, opts.seed ^ 0x51edU);
    rename.assign(k + 1, 0);
    for (int c = 1; c <= k; ++c) rename[c] = p[c - 1] + 1;
  }
  return Materialize(std::make_shared<const Graph>(g), k, s.edges(), found,
                     rename);
}

std::uint64_t EnumerateEdgeColorings(
    const Graph& g, int k, const std::vector<Edge>& skip,
    const std::function<bool(const PartialEdgeColoring&)>& visit,
    const SolverOptions& opts) {
  SolverOptions plain = opts;
  plain.seed = 0;
  Search s(g, k, skip, plain);
  const auto shared = std::make_shared<const Graph>(g);
  std::uint64_t count = 0;
  const std::function<bool(const std::vector<Color>&)> each =
      [&](const std::vector<Color>& colors) {
        ++count;
        return !visit(Materialize(shared, k, s.edges(), colors, {}));
      };
  s.Run(each);
  return count;
}

}  // namespace ecrit
