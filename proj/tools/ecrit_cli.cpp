#include <algorithm>
#include <filesystem>
#include <functional>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ecrit/classifier.hpp"
#include "ecrit/enumerate.hpp"
#include "ecrit/errors.hpp"
#include "ecrit/exact_solver.hpp"
#include "ecrit/fixtures.hpp"
#include "ecrit/graph6.hpp"
#include "ecrit/harness.hpp"
#include "ecrit/kierstead.hpp"
#include "ecrit/multifan.hpp"
#include "ecrit/witnesses.hpp"
#include "json.hpp"

using nlohmann::json;
using namespace ecrit;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Input {
  std::string source;  // as given, for messages
  std::string text;    // graph6 line
};

std::string Trim(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) {
    s.pop_back();
  }
  return s;
}

void ReadLines(std::istream& in, const std::string& name,
               std::vector<Input>& out) {
  std::string line;
  for (int no = 1; std::getline(in, line); ++no) {
    line = Trim(line);
    if (line.empty()) continue;
    out.push_back({name + ":" + std::to_string(no), line});
  }
}

// Arguments may be fixture names, files with one graph6 per line, or graph6.
std::vector<Input> CollectInputs(const std::vector<std::string>& args) {
  std::vector<Input> out;
  if (args.empty()) {
    ReadLines(std::cin, "stdin", out);
    return out;
  }
  const auto& fixtures = BuiltinFixtureNames();
  for (const std::string& a : args) {
    if (std::find(fixtures.begin(), fixtures.end(), a) != fixtures.end()) {
      out.push_back({a, ToGraph6(BuiltinFixture(a))});
    } else if (std::filesystem::is_regular_file(a)) {
      std::ifstream f(a);
      ReadLines(f, a, out);
    } else {
      out.push_back({a, a});
    }
  }
  return out;
}

Edge ParseEdge(const std::string& s, const Graph& g) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw UsageError("edge must be u,v");
  int u = 0;
  int v = 0;
  try {
    u = std::stoi(s.substr(0, comma));
    v = std::stoi(s.substr(comma + 1));
  } catch (const std::exception&) {
    throw UsageError("edge must be u,v");
  }
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || !g.HasEdge(u, v)) {
    throw UsageError("no edge " + s);
  }
  return Edge::Of(u, v);
}

std::string ClassText(EdgeClass c) {
  return c == EdgeClass::kClass1 ? "Class 1" : "Class 2";
}

// Per-graph handler: prints one verdict and returns the exit status.
using Handler = std::function<int(const Graph&, const Input&, bool json_mode)>;

int RunPerGraph(const std::vector<std::string>& args, bool json_mode,
                const Handler& h) {
  int status = 0;
  for (const Input& in : CollectInputs(args)) {
    Graph g;
    try {
      g = FromGraph6(in.text);
    } catch (const ParseError& e) {
      std::cerr << in.source << ": invalid graph6: " << e.what() << "\n";
      status = std::max(status, kExitUsage);
      continue;
    }
    try {
      status = std::max(status, h(g, in, json_mode));
    } catch (const UsageError& e) {
      std::cerr << in.source << ": " << e.what() << "\n";
      status = std::max(status, kExitUsage);
    } catch (const std::exception& e) {
      std::cerr << in.source << ": " << e.what() << "\n";
      status = std::max(status, kExitFailure);
    }
  }
  return status;
}

void Emit(bool json_mode, const json& j, const std::string& text) {
  if (json_mode) {
    std::cout << j.dump() << "\n";
  } else {
    std::cout << text << "\n";
  }
}

int ClassifyCmd(const Graph& g, const Input&, bool json_mode) {
  const int delta = MaxDegree(g);
  const int chi = ExactChromaticIndex(g);
  const EdgeClass cls = chi == delta ? EdgeClass::kClass1 : EdgeClass::kClass2;
  Emit(json_mode,
       {{"graph6", ToGraph6(g)},
        {"class", cls == EdgeClass::kClass1 ? 1 : 2},
        {"chromatic_index", chi},
        {"max_degree", delta}},
       ClassText(cls) + " (χ'=" + std::to_string(chi) +
           ", Δ=" + std::to_string(delta) + ")");
  return 0;
}

PartialEdgeColoring ExactColoring(const Graph& g) {
  const int delta = MaxDegree(g);
  if (auto c = SolveEdgeColoring(g, delta)) return *c;
  return VizingPlusOneColoring(g);
}

int Critical(const Graph& g, const std::string& edge, bool json_mode) {
  if (Classify(g) == EdgeClass::kClass1) {
    Emit(json_mode, {{"graph6", ToGraph6(g)}, {"class", 1}, {"critical", json::array()}},
         "Class 1: no critical edges");
    return 0;
  }
  if (!edge.empty()) {
    const Edge e = ParseEdge(edge, g);
    const bool crit = IsCriticalEdge(g, e);
    Emit(json_mode, {{"graph6", ToGraph6(g)}, {"edge", {e.u, e.v}}, {"critical", crit}},
         "edge " + ToString(e) + ": " + (crit ? "critical" : "not critical"));
    return 0;
  }
  json list = json::array();
  std::string text;
  bool all = true;
  for (const Edge& e : g.Edges()) {
    const bool crit = IsCriticalEdge(g, e);
    all = all && crit;
    if (crit) {
      list.push_back({e.u, e.v});
      text += ToString(e) + " ";
    }
  }
  const bool delta_critical = all && IsConnected(g);
  Emit(json_mode,
       {{"graph6", ToGraph6(g)}, {"class", 2}, {"critical", list},
        {"delta_critical", delta_critical}},
       "critical: " + (text.empty() ? std::string("none ") : text) +
           "\nΔ-critical: " + (delta_critical ? "true" : "false"));
  return 0;
}

int Overfull(const Graph& g, bool json_mode) {
  const int delta = MaxDegree(g);
  const int cap = delta * (g.order() / 2);
  const bool over = IsOverfull(g);
  Emit(json_mode,
       {{"graph6", ToGraph6(g)}, {"overfull", over}, {"edges", g.size()},
        {"bound", cap}},
       std::string("overfull: ") + (over ? "true" : "false") + " (|E|=" +
           std::to_string(g.size()) + (over ? " > " : " ≤ ") +
           std::to_string(cap) + ")");
  return 0;
}

int Pairs(const Graph& g, bool json_mode) {
  json list = json::array();
  std::string text;
  for (const Edge& e : FullDeficiencyPairs(g)) {
    list.push_back({e.u, e.v});
    text += (text.empty() ? "" : " ") + std::string("(") + std::to_string(e.u) +
            "," + std::to_string(e.v) + ")";
  }
  Emit(json_mode, {{"graph6", ToGraph6(g)}, {"pairs", list}},
       text.empty() ? "none" : text);
  return 0;
}

std::vector<int> ParseIntList(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw UsageError("bad vertex list '" + s + "'");
    }
  }
  return out;
}

int Split(const Graph& g, int vertex, const std::string& part, bool json_mode) {
  if (vertex < 0 || vertex >= g.order()) throw UsageError("no vertex " + std::to_string(vertex));
  VertexMask mask = 0;
  for (int x : ParseIntList(part)) {
    if (x < 0 || x >= g.order() || !g.HasEdge(vertex, x)) {
      throw UsageError(std::to_string(x) + " is not a neighbour of " +
                       std::to_string(vertex));
    }
    mask |= Bit(x);
  }
  if (mask == 0 || mask == g.Neighbors(vertex)) {
    throw UsageError("part must be a proper nonempty subset of the neighbourhood");
  }
  const Graph h = SplitVertex(g, {vertex, mask});
  Emit(json_mode, {{"graph6", ToGraph6(h)}, {"new_vertex", g.order()}}, ToGraph6(h));
  return 0;
}

int Structures(const Graph& g, const std::string& kind, const std::string& edge,
               std::uint64_t seed, bool json_mode) {
  const Edge e = ParseEdge(edge, g);
  if (!EdgeHasDeltaColoringOfMinusE(g, e)) {
    throw std::runtime_error("G - " + ToString(e) + " has no Δ-coloring");
  }
  const PartialEdgeColoring c = DeltaColoringOfMinusE(g, e, seed);
  std::vector<std::string> found;
  if (kind == "multifan") {
    for (const auto& [r, s1] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
      found.push_back(GrowMultifan(c, r, s1).ToString());
    }
  } else if (kind == "kierstead") {
    for (int p = 3; p <= 4; ++p) {
      for (const auto& k : FindKiersteadPaths(c, p)) found.push_back(k.ToString());
    }
  } else {
    for (const auto& w : FindStructureWitnesses(c, ParseKindName(kind))) {
      found.push_back(w.ToString());
    }
  }
  std::string text = SerializeColoring(c);
  for (const auto& f : found) text += f + "\n";
  text += std::to_string(found.size()) + " found";
  Emit(json_mode,
       {{"graph6", ToGraph6(g)}, {"kind", kind}, {"coloring", SerializeColoring(c)},
        {"structures", found}},
       text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Edge-coloring toolkit for Δ-critical graphs"};
  app.require_subcommand(1);
  bool json_mode = false;
  app.add_flag("--json", json_mode, "Machine-readable output");

  std::vector<std::string> graphs;
  const auto with_graphs = [&](CLI::App* sub) {
    sub->add_option("graphs", graphs,
                    "graph6 strings, files, or fixture names (default: stdin)");
    return sub;
  };

  auto* classify = with_graphs(app.add_subcommand("classify", "Class 1 or Class 2"));
  auto* color = with_graphs(app.add_subcommand("color", "Print an edge coloring"));
  bool exact = false;
  bool vizing = false;
  std::string color_out;
  auto* exact_flag = color->add_flag("--exact", exact, "Optimal coloring (default)");
  color->add_flag("--vizing", vizing, "Δ+1 coloring")->excludes(exact_flag);
  color->add_option("--out", color_out, "Write the coloring to a file");

  auto* critical = with_graphs(app.add_subcommand("critical", "Critical edges"));
  std::string crit_edge;
  bool crit_all = false;
  auto* edge_opt = critical->add_option("--edge", crit_edge, "Edge u,v");
  critical->add_flag("--all", crit_all, "Every edge (default)")->excludes(edge_opt);

  auto* overfull = with_graphs(app.add_subcommand("overfull", "Overfull test"));
  auto* pairs = with_graphs(app.add_subcommand("pairs", "Full-deficiency pairs"));

  auto* split = with_graphs(app.add_subcommand("split", "Split a vertex"));
  int split_vertex = 0;
  std::string split_part;
  split->add_option("--vertex", split_vertex, "Vertex to split")->required();
  split->add_option("--part", split_part, "Neighbours kept by the vertex")->required();

  auto* structures = with_graphs(app.add_subcommand("structures", "Structures at an edge"));
  std::string kind;
  std::string st_edge;
  std::uint64_t seed = 0;
  structures->add_option("--kind", kind, "Structure kind")
      ->required()
      ->check(CLI::IsMember({"multifan", "kierstead", "shortkite", "kite", "fork"}));
  structures->add_option("--edge", st_edge, "Uncolored edge u,v")->required();
  structures->add_option("--seed", seed, "Coloring seed");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  HarnessConfig config;
  std::string out_dir = "ecrit-report";
  verify->add_option("--suite", config.suite, "Suite")
      ->check(CLI::IsMember(SuiteNames()));
  verify->add_option("--n-max", config.n_max, "Largest enumerated order")
      ->check(CLI::Range(1, kMaxEnumerationOrder));
  verify->add_option("--seeds", config.seeds, "Colorings per critical edge")
      ->check(CLI::PositiveNumber);
  verify->add_option("--out", out_dir, "Report directory");
  verify->add_option("--threads", config.threads, "Worker threads (0: all cores)");
  verify->add_flag("--planted", config.planted_negatives, "Add planted negative fixtures");
  bool no_extended = false;
  verify->add_flag("--no-extended", no_extended, "Skip the 9-vertex family splits");

  auto* enumerate = app.add_subcommand("enumerate", "List graphs up to isomorphism");
  int enum_n = 0;
  enumerate->add_option("--n", enum_n, "Order")
      ->required()
      ->check(CLI::Range(1, kMaxEnumerationOrder));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*classify) return RunPerGraph(graphs, json_mode, ClassifyCmd);
    if (*color) {
      std::ofstream file;
      if (!color_out.empty()) {
        file.open(color_out);
        if (!file) throw UsageError("cannot write " + color_out);
      }
      return RunPerGraph(graphs, json_mode, [&](const Graph& g, const Input&, bool jm) {
        const PartialEdgeColoring c = vizing ? VizingPlusOneColoring(g) : ExactColoring(g);
        if (file.is_open()) file << SerializeColoring(c);
        Emit(jm, {{"graph6", ToGraph6(g)}, {"k", c.k()}, {"coloring", SerializeColoring(c)}},
             Trim(SerializeColoring(c)));
        return 0;
      });
    }
    if (*critical) {
      return RunPerGraph(graphs, json_mode, [&](const Graph& g, const Input&, bool jm) {
        return Critical(g, crit_edge, jm);
      });
    }
    if (*overfull) {
      return RunPerGraph(graphs, json_mode, [](const Graph& g, const Input&, bool jm) {
        return Overfull(g, jm);
      });
    }
    if (*pairs) {
      return RunPerGraph(graphs, json_mode, [](const Graph& g, const Input&, bool jm) {
        return Pairs(g, jm);
      });
    }
    if (*split) {
      return RunPerGraph(graphs, json_mode, [&](const Graph& g, const Input&, bool jm) {
        return Split(g, split_vertex, split_part, jm);
      });
    }
    if (*structures) {
      return RunPerGraph(graphs, json_mode, [&](const Graph& g, const Input&, bool jm) {
        return Structures(g, kind, st_edge, seed, jm);
      });
    }
    if (*verify) {
      config.extended_corpus = !no_extended;
      const SuiteResult res = RunSuite(config);
      WriteReports(res, out_dir);
      if (json_mode) {
        json all = json::array();
        for (const auto& c : res.checks) all.push_back(c.report.ToJson());
        std::cout << all.dump(2) << "\n";
      } else {
        std::cout << res.Summary();
      }
      return res.Failed() ? kExitFailure : 0;
    }
    if (*enumerate) {
      const auto list = EnumerateGraphs(enum_n);
      if (json_mode) {
        json all = json::array();
        for (const auto& g : list) all.push_back(ToGraph6(g));
        std::cout << all.dump() << "\n";
      } else {
        for (const auto& g : list) std::cout << ToGraph6(g) << "\n";
      }
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
