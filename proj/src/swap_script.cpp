#include "ecrit/swap_script.hpp"

#include <algorithm>
#include <cctype>

#include "ecrit/errors.hpp"
#include "ecrit/kempe.hpp"

namespace ecrit {
namespace {

std::string Trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> SplitBar(std::string_view row) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= row.size(); ++i) {
    if (i == row.size() || row[i] == '|') {
      out.push_back(Trim(row.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

// Minimal cursor over one cell; offsets are relative to the cell.
struct Cursor {
  std::string_view s;
  std::size_t pos = 0;

  bool Eat(char c) {
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void Expect(char c) {
    if (!Eat(c)) {
      throw ParseError(std::string("expected '") + c + "' in '" +
                           std::string(s) + "'",
                       pos);
    }
  }
  int Int() {
    const std::size_t start = pos;
    int v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + (s[pos] - '0');
      ++pos;
    }
    if (pos == start) {
      throw ParseError("expected a number in '" + std::string(s) + "'", pos);
    }
    return v;
  }
  void End() {
    if (pos != s.size()) {
      throw ParseError("trailing text in '" + std::string(s) + "'", pos);
    }
  }
};

void ParseTarget(const std::string& cell, ScriptStep& st) {
  Cursor cur{cell};
  if (cur.Eat('P')) {
    if (cur.Eat('[')) {
      st.target = ScriptStep::Target::kSubchain;
      st.x = cur.Int();
      cur.Expect(',');
      st.y = cur.Int();
      cur.Expect(']');
    } else {
      st.target = ScriptStep::Target::kChain;
      st.x = cur.Int();
    }
    cur.Expect('(');
    st.chain_a = cur.Int();
    cur.Expect(',');
    st.chain_b = cur.Int();
    if (cur.Eat(';')) {
      if (st.target != ScriptStep::Target::kChain) {
        throw ParseError("first-edge color only applies to P_x", cur.pos);
      }
      st.first = cur.Int();
    }
    cur.Expect(')');
    cur.End();
    return;
  }
  st.target = ScriptStep::Target::kEdges;
  st.walk.push_back(cur.Int());
  while (cur.Eat('-')) st.walk.push_back(cur.Int());
  cur.End();
  if (st.walk.size() < 2) throw ParseError("edge target needs two vertices", 0);
}

void ParseAction(const std::string& cell, ScriptStep& st) {
  Cursor cur{cell};
  if (cur.Eat('~')) {
    st.action = ScriptStep::Action::kUncolor;
    cur.End();
    return;
  }
  st.c1 = cur.Int();
  if (cur.Eat('/')) {
    st.action = ScriptStep::Action::kSwap;
    st.c2 = cur.Int();
  } else if (cur.Eat('-')) {
    cur.Expect('>');
    st.action = ScriptStep::Action::kRecolor;
    st.c2 = cur.Int();
  } else {
    st.action = ScriptStep::Action::kAssign;
  }
  cur.End();
}

std::vector<Edge> WalkEdges(const PartialEdgeColoring& c,
                            const std::vector<Vertex>& walk,
                            std::size_t index) {
  std::vector<Edge> out;
  for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
    const Vertex u = walk[i];
    const Vertex v = walk[i + 1];
    if (u < 0 || v < 0 || u >= c.order() || v >= c.order() ||
        !c.graph().HasEdge(u, v)) {
      throw ScriptError(index, std::to_string(u) + "-" + std::to_string(v) +
                                   " is not an edge");
    }
    out.push_back(Edge::Of(u, v));
  }
  return out;
}

bool SamePair(Color a, Color b, Color c, Color d) {
  return (a == c && b == d) || (a == d && b == c);
}

}  // namespace

std::string ScriptStep::TargetText() const {
  switch (target) {
    case Target::kSubchain:
      return "P[" + std::to_string(x) + "," + std::to_string(y) + "](" +
             std::to_string(chain_a) + "," + std::to_string(chain_b) + ")";
    case Target::kChain:
      return "P" + std::to_string(x) + "(" + std::to_string(chain_a) + "," +
             std::to_string(chain_b) +
             (first ? ";" + std::to_string(*first) : "") + ")";
    case Target::kEdges: {
      std::string s;
      for (std::size_t i = 0; i < walk.size(); ++i) {
        if (i) s += "-";
        s += std::to_string(walk[i]);
      }
      return s;
    }
  }
  return {};
}

std::string ScriptStep::ActionText() const {
  switch (action) {
    case Action::kSwap:
      return std::to_string(c1) + "/" + std::to_string(c2);
    case Action::kRecolor:
      return std::to_string(c1) + "->" + std::to_string(c2);
    case Action::kAssign:
      return std::to_string(c1);
    case Action::kUncolor:
      return "~";
  }
  return {};
}

ScriptStep ScriptStep::SwapSub(Vertex x, Vertex y, Color a, Color b) {
  ScriptStep s;
  s.target = Target::kSubchain;
  s.x = x;
  s.y = y;
  s.chain_a = a;
  s.chain_b = b;
  s.action = Action::kSwap;
  s.c1 = a;
  s.c2 = b;
  return s;
}

ScriptStep ScriptStep::SwapAt(Vertex x, Color a, Color b,
                              std::optional<Color> first) {
  ScriptStep s;
  s.target = Target::kChain;
  s.x = x;
  s.chain_a = a;
  s.chain_b = b;
  s.first = first;
  s.action = Action::kSwap;
  s.c1 = a;
  s.c2 = b;
  return s;
}

ScriptStep ScriptStep::SwapEdges(std::vector<Vertex> walk, Color a, Color b) {
  ScriptStep s;
  s.walk = std::move(walk);
  s.action = Action::kSwap;
  s.c1 = a;
  s.c2 = b;
  return s;
}

ScriptStep ScriptStep::Recolor(Vertex u, Vertex v, Color from, Color to) {
  ScriptStep s;
  s.walk = {u, v};
  s.action = Action::kRecolor;
  s.c1 = from;
  s.c2 = to;
  return s;
}

ScriptStep ScriptStep::Assign(Vertex u, Vertex v, Color c) {
  ScriptStep s;
  s.walk = {u, v};
  s.action = Action::kAssign;
  s.c1 = c;
  return s;
}

ScriptStep ScriptStep::Uncolor(Vertex u, Vertex v) {
  ScriptStep s;
  s.walk = {u, v};
  s.action = Action::kUncolor;
  return s;
}

std::string SwapScript::Render() const {
  std::string top;
  std::string bottom;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    std::string t = steps[i].TargetText();
    std::string a = steps[i].ActionText();
    const std::size_t w = std::max(t.size(), a.size());
    t.resize(w, ' ');
    a.resize(w, ' ');
    if (i) {
      top += " | ";
      bottom += " | ";
    }
    top += t;
    bottom += a;
  }
  while (!top.empty() && top.back() == ' ') top.pop_back();
  while (!bottom.empty() && bottom.back() == ' ') bottom.pop_back();
  return top + "\n" + bottom;
}

SwapScript SwapScript::Parse(std::string_view text) {
  SwapScript out;
  const std::size_t nl = text.find('\n');
  if (nl == std::string_view::npos) {
    if (Trim(text).empty()) return out;
    throw ParseError("swap script needs two rows", text.size());
  }
  std::string_view second = text.substr(nl + 1);
  while (!second.empty() && (second.back() == '\n' || second.back() == '\r')) {
    second.remove_suffix(1);
  }
  const auto targets = SplitBar(text.substr(0, nl));
  const auto actions = SplitBar(second);
  if (targets.size() == 1 && targets[0].empty() && actions.size() == 1 &&
      actions[0].empty()) {
    return out;
  }
  if (targets.size() != actions.size()) {
    throw ParseError("rows have different lengths", nl);
  }
  for (std::size_t i = 0; i < targets.size(); ++i) {
    ScriptStep st;
    ParseTarget(targets[i], st);
    ParseAction(actions[i], st);
    out.steps.push_back(std::move(st));
  }
  return out;
}

StepRecord ApplyStep(PartialEdgeColoring& c, const ScriptStep& st,
                     std::size_t index) {
  using T = ScriptStep::Target;
  using A = ScriptStep::Action;
  StepRecord rec{st.TargetText(), st.ActionText(), true, {}};
  const auto check_color = [&](Color col) {
    if (col < 1 || col > c.k()) {
      throw ScriptError(index, "color " + std::to_string(col) +
                                   " outside [1," + std::to_string(c.k()) +
                                   "]");
    }
  };

  if (st.target != T::kEdges) {
    if (st.action != A::kSwap) {
      throw ScriptError(index, "chain targets only accept a swap action");
    }
    if (!SamePair(st.chain_a, st.chain_b, st.c1, st.c2)) {
      throw ScriptError(index, "swap colors differ from the chain colors");
    }
    check_color(st.chain_a);
    check_color(st.chain_b);
    try {
      if (st.chain_a == st.chain_b) return rec;
      const std::vector<Edge> edges =
          st.target == T::kSubchain
              ? Subchain(c, st.x, st.y, st.chain_a, st.chain_b).edges
              : ChainFrom(c, st.x, st.chain_a, st.chain_b, st.first).edges;
      rec.changed = edges;
      if (st.target == T::kSubchain) {
        SwapSubchain(c, st.x, st.y, st.chain_a, st.chain_b);
      } else {
        SwapAt(c, st.x, st.chain_a, st.chain_b, st.first);
      }
    } catch (const PreconditionError& e) {
      throw ScriptError(index, e.what());
    } catch (const StateError& e) {
      throw ScriptError(index, e.what());
    }
    rec.proper_after = c.IsProper();
    return rec;
  }

  const std::vector<Edge> edges = WalkEdges(c, st.walk, index);
  std::vector<Color> next;
  for (const Edge& e : edges) {
    const Color cur = c.ColorOf(e);
    switch (st.action) {
      case A::kSwap:
        check_color(st.c1);
        check_color(st.c2);
        if (cur != st.c1 && cur != st.c2) {
          throw ScriptError(index, ToString(e) + " carries " +
                                       std::to_string(cur) + ", not " +
                                       st.ActionText());
        }
        next.push_back(cur == st.c1 ? st.c2 : st.c1);
        break;
      case A::kRecolor:
        check_color(st.c2);
        if (cur != st.c1) {
          throw ScriptError(index, ToString(e) + " carries " +
                                       std::to_string(cur) + ", expected " +
                                       std::to_string(st.c1));
        }
        next.push_back(st.c2);
        break;
      case A::kAssign:
        check_color(st.c1);
        if (cur != 0) {
          throw ScriptError(index, ToString(e) + " is already colored");
        }
        next.push_back(st.c1);
        break;
      case A::kUncolor:
        if (cur == 0) {
          throw ScriptError(index, ToString(e) + " is already uncolored");
        }
        next.push_back(0);
        break;
    }
  }
  for (std::size_t i = 0; i < edges.size(); ++i) c.SetRaw(edges[i], next[i]);
  rec.changed = edges;
  rec.proper_after = c.IsProper();
  return rec;
}

ScriptResult ApplyScript(const PartialEdgeColoring& c, const SwapScript& s) {
  ScriptResult out{c, {}, true};
  for (std::size_t i = 0; i < s.steps.size(); ++i) {
    out.trace.push_back(ApplyStep(out.coloring, s.steps[i], i));
    out.every_step_proper = out.every_step_proper && out.trace.back().proper_after;
  }
  if (!out.coloring.Validate()) {
    throw ScriptError(s.steps.empty() ? 0 : s.steps.size() - 1,
                      "final coloring invalid: " + out.coloring.Diagnose());
  }
  return out;
}

}  // namespace ecrit
