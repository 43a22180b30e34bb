#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ecrit/graph.hpp"

namespace ecrit {

Graph CompleteGraph(int n);
Graph CycleGraph(int n);
Graph PathGraph(int n);
Graph StarGraph(int leaves);  // hub is vertex 0
Graph PetersenGraph();
Graph DisjointUnion(const Graph& a, const Graph& b);

// Named fixtures with fixed vertex numbering:
//   triangle, c4, c5      cycles 0-1-...-(n-1)-0
//   k4, k5, k6, k7        complete graphs
//   petersen              outer cycle 0..4, spokes i~i+5, inner i+5~(i+2)%5+5
//   pstar                 petersen minus vertex 0, vertex v renumbered v-1;
//                         vertices 0, 3, 4 have degree 2
//   splitk4               k4 with vertex 3 split, part_one = {0}: vertex 3
//                         keeps {0, 4}, new vertex 4 takes {1, 2, 3}
// Throws std::out_of_range for unknown names.
Graph BuiltinFixture(std::string_view name);
std::vector<std::string> BuiltinFixtureNames();

}  // namespace ecrit
