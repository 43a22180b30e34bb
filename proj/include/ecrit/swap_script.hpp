#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ecrit/coloring.hpp"

namespace ecrit {

// One column of a two-row operation matrix.
//
// Targets (first row):
//   P[x,y](a,b)     subchain between x and y
//   Px(a,b)         chain from x; Px(a,b;f) fixes the first edge color f
//   u-v, u-v-w      an edge or a walk of consecutive edges
// Actions (second row):
//   a/b             exchange a and b on the target
//   c->d            recolor (every target edge must carry c)
//   c               assign c to uncolored target edges
//   ~               uncolor the target edges
struct ScriptStep {
  enum class Target { kSubchain, kChain, kEdges };
  enum class Action { kSwap, kRecolor, kAssign, kUncolor };

  Target target = Target::kEdges;
  Vertex x = 0;
  Vertex y = 0;
  Color chain_a = 0;
  Color chain_b = 0;
  std::optional<Color> first;
  std::vector<Vertex> walk;  // kEdges only

  Action action = Action::kSwap;
  Color c1 = 0;  // swap: a, recolor: from, assign: color
  Color c2 = 0;  // swap: b, recolor: to

  std::string TargetText() const;
  std::string ActionText() const;

  static ScriptStep SwapSub(Vertex x, Vertex y, Color a, Color b);
  static ScriptStep SwapAt(Vertex x, Color a, Color b,
                           std::optional<Color> first = std::nullopt);
  static ScriptStep SwapEdges(std::vector<Vertex> walk, Color a, Color b);
  static ScriptStep Recolor(Vertex u, Vertex v, Color from, Color to);
  static ScriptStep Assign(Vertex u, Vertex v, Color c);
  static ScriptStep Uncolor(Vertex u, Vertex v);
};

struct SwapScript {
  std::vector<ScriptStep> steps;

  bool empty() const { return steps.empty(); }
  // Two aligned rows separated by " | ", joined by a newline.
  std::string Render() const;
  static SwapScript Parse(std::string_view text);
};

class ScriptError : public std::runtime_error {
 public:
  ScriptError(std::size_t step, const std::string& reason)
      : std::runtime_error("step " + std::to_string(step) + ": " + reason),
        step_(step) {}
  std::size_t step() const { return step_; }

 private:
  std::size_t step_;
};

struct StepRecord {
  std::string target;
  std::string action;
  bool proper_after = true;
  std::vector<Edge> changed;
};

struct ScriptResult {
  PartialEdgeColoring coloring;
  std::vector<StepRecord> trace;
  bool every_step_proper = true;
};

// Apply one step in place. Throws ScriptError(index) when inapplicable.
StepRecord ApplyStep(PartialEdgeColoring& c, const ScriptStep& step,
                     std::size_t index);

// Transactional replay: the input is untouched; intermediate states may be
// improper but the final one must validate.
ScriptResult ApplyScript(const PartialEdgeColoring& c, const SwapScript& s);

}  // namespace ecrit
