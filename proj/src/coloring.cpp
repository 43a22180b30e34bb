#include "ecrit/coloring.hpp"

#include <cstdio>
#include <sstream>

#include "ecrit/errors.hpp"

namespace ecrit {

std::vector<Color> ColorSet::ToVector() const {
  std::vector<Color> out;
  for (std::uint64_t b = bits_; b; b &= b - 1) {
    out.push_back(std::countr_zero(b));
  }
  return out;
}

std::string ColorSet::ToString() const {
  std::string s = "{";
  bool first = true;
  for (Color c : ToVector()) {
    if (!first) s += ",";
    s += std::to_string(c);
    first = false;
  }
  return s + "}";
}

PartialEdgeColoring::PartialEdgeColoring(std::shared_ptr<const Graph> g,
                                         int k)
    : graph_(std::move(g)), k_(k), n_(graph_->order()) {
  if (k < 0 || k > kMaxColors) {
    throw PreconditionError("color count must lie in [0, 63]");
  }
  colors_.assign(static_cast<std::size_t>(n_) * n_, 0);
  present_.assign(n_, 0);
}

PartialEdgeColoring::PartialEdgeColoring(const Graph& g, int k)
    : PartialEdgeColoring(std::make_shared<const Graph>(g), k) {}

ColorSet PartialEdgeColoring::MissingUnion(VertexMask vs) const {
  ColorSet out;
  for (; vs; vs &= vs - 1) out = out | Missing(std::countr_zero(vs));
  return out;
}

Vertex PartialEdgeColoring::NeighborVia(Vertex v, Color c) const {
  if (c <= 0 || !Present(v).Contains(c)) return -1;
  for (VertexMask m = graph_->Neighbors(v); m; m &= m - 1) {
    const Vertex w = std::countr_zero(m);
    if (ColorOf(v, w) == c) return w;
  }
  return -1;
}

std::vector<Edge> PartialEdgeColoring::Uncolored() const {
  std::vector<Edge> out;
  for (const Edge& e : graph_->Edges()) {
    if (ColorOf(e) == 0) out.push_back(e);
  }
  return out;
}

int PartialEdgeColoring::UncoloredCount() const {
  int count = 0;
  for (Vertex u = 0; u < n_; ++u) {
    const VertexMask above = u == 63 ? 0 : ~(Bit(u + 1) - 1);
    for (VertexMask m = graph_->Neighbors(u) & above; m; m &= m - 1) {
      count += ColorOf(u, std::countr_zero(m)) == 0 ? 1 : 0;
    }
  }
  return count;
}

void PartialEdgeColoring::CheckEdge(Edge e) const {
  if (e.u < 0 || e.v >= n_ || !graph_->HasEdge(e.u, e.v)) {
    throw PreconditionError(ToString(e) + " is not an edge of the graph");
  }
}

void PartialEdgeColoring::Assign(Edge e, Color c) {
  CheckEdge(e);
  if (ColorOf(e) != 0) {
    throw StateError("edge " + ToString(e) + " is already colored");
  }
  if (c < 1 || c > k_) throw StateError("color out of range");
  if (!Missing(e.u).Contains(c) || !Missing(e.v).Contains(c)) {
    throw StateError("color " + std::to_string(c) + " is present at an end of " +
                     ToString(e));
  }
  SetRaw(e, c);
}

void PartialEdgeColoring::Uncolor(Edge e) {
  CheckEdge(e);
  if (ColorOf(e) == 0) {
    throw StateError("edge " + ToString(e) + " is already uncolored");
  }
  SetRaw(e, 0);
}

void PartialEdgeColoring::Recolor(Edge e, Color c) {
  CheckEdge(e);
  const Color old = ColorOf(e);
  if (old == c) return;
  if (c < 1 || c > k_) throw StateError("color out of range");
  if (!Missing(e.u).Contains(c) || !Missing(e.v).Contains(c)) {
    throw StateError("color " + std::to_string(c) + " is present at an end of " +
                     ToString(e));
  }
  SetRaw(e, c);
}

void PartialEdgeColoring::SetRaw(Edge e, Color c) {
  colors_[e.u * n_ + e.v] = static_cast<std::uint8_t>(c);
  colors_[e.v * n_ + e.u] = static_cast<std::uint8_t>(c);
  RebuildPresent(e.u);
  RebuildPresent(e.v);
}

void PartialEdgeColoring::RebuildPresent(Vertex v) {
  std::uint64_t p = 0;
  for (VertexMask m = graph_->Neighbors(v); m; m &= m - 1) {
    const Color c = ColorOf(v, std::countr_zero(m));
    if (c) p |= std::uint64_t{1} << c;
  }
  present_[v] = p;
}

bool PartialEdgeColoring::IsProper() const {
  for (Vertex v = 0; v < n_; ++v) {
    std::uint64_t seen = 0;
    for (VertexMask m = graph_->Neighbors(v); m; m &= m - 1) {
      const Color c = ColorOf(v, std::countr_zero(m));
      if (!c) continue;
      if ((seen >> c) & 1U) return false;
      seen |= std::uint64_t{1} << c;
    }
  }
  return true;
}

std::string PartialEdgeColoring::Diagnose() const {
  if (!graph_) return "no graph";
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v = 0; v < n_; ++v) {
      const Color c = ColorOf(u, v);
      if (c != ColorOf(v, u)) return "asymmetric color matrix";
      if (c && !graph_->HasEdge(u, v)) return "non-edge carries a color";
      if (c < 0 || c > k_) return "color out of range";
    }
  }
  for (Vertex v = 0; v < n_; ++v) {
    std::uint64_t seen = 0;
    for (VertexMask m = graph_->Neighbors(v); m; m &= m - 1) {
      const Vertex w = std::countr_zero(m);
      const Color c = ColorOf(v, w);
      if (!c) continue;
      if ((seen >> c) & 1U) {
        return "color " + std::to_string(c) + " repeated at vertex " +
               std::to_string(v);
      }
      seen |= std::uint64_t{1} << c;
    }
    if (seen != present_[v]) {
      return "stale present set at vertex " + std::to_string(v);
    }
  }
  return {};
}

bool PartialEdgeColoring::Validate() const { return Diagnose().empty(); }

bool PartialEdgeColoring::IsElementary(VertexMask vs) const {
  std::uint64_t seen = 0;
  for (; vs; vs &= vs - 1) {
    const std::uint64_t miss = Missing(std::countr_zero(vs)).bits();
    if (seen & miss) return false;
    seen |= miss;
  }
  return true;
}

std::vector<std::pair<Edge, Color>> PartialEdgeColoring::Assignment() const {
  std::vector<std::pair<Edge, Color>> out;
  for (const Edge& e : graph_->Edges()) {
    if (ColorOf(e)) out.emplace_back(e, ColorOf(e));
  }
  return out;
}

std::string SerializeColoring(const PartialEdgeColoring& c) {
  std::ostringstream out;
  out << "k=" << c.k() << " uncolored=" << c.UncoloredCount() << "\n";
  for (const Edge& e : c.graph().Edges()) {
    out << e.u << ' ' << e.v << ' ' << c.ColorOf(e) << "\n";
  }
  return out.str();
}

PartialEdgeColoring ParseColoring(std::shared_ptr<const Graph> g,
                                  const std::string& text) {
  std::istringstream in(text);
  std::string header;
  if (!std::getline(in, header)) throw ParseError("missing header", 0);
  int k = -1;
  int uncolored = -1;
  if (std::sscanf(header.c_str(), "k=%d uncolored=%d", &k, &uncolored) != 2) {
    throw ParseError("malformed header '" + header + "'", 0);
  }
  if (k < 0 || k > kMaxColors) throw ParseError("color count out of range", 2);
  PartialEdgeColoring c(std::move(g), k);
  std::size_t offset = header.size() + 1;
  std::string line;
  while (std::getline(in, line)) {
    const std::size_t here = offset;
    offset += line.size() + 1;
    if (line.empty()) continue;
    std::istringstream ls(line);
    int u = -1;
    int v = -1;
    int col = -1;
    std::string rest;
    if (!(ls >> u >> v >> col) || (ls >> rest)) {
      throw ParseError("malformed edge line '" + line + "'", here);
    }
    if (u < 0 || v < 0 || u >= c.order() || v >= c.order() ||
        !c.graph().HasEdge(u, v)) {
      throw ParseError("not an edge: " + line, here);
    }
    if (col < 0 || col > k) throw ParseError("color out of range", here);
    c.SetRaw(Edge::Of(u, v), col);
  }
  if (c.UncoloredCount() != uncolored) {
    throw ParseError("header uncolored count does not match body", 0);
  }
  return c;
}

std::vector<int> DeficiencyCounts(const PartialEdgeColoring& c) {
  std::vector<int> counts(c.k() + 1, 0);
  for (Vertex v = 0; v < c.order(); ++v) {
    for (Color a : c.Missing(v).ToVector()) ++counts[a];
  }
  return counts;
}

}  // namespace ecrit
