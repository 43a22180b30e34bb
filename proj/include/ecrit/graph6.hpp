#pragma once

#include <string>
#include <string_view>

#include "ecrit/graph.hpp"

namespace ecrit {

// McKay's graph6 format. Accepts an optional ">>graph6<<" prefix and a
// trailing newline / carriage return. Throws ParseError with the byte offset
// of the first offending character.
Graph FromGraph6(std::string_view text);

// Canonical-length encoding of the upper triangle, no trailing newline.
std::string ToGraph6(const Graph& g);

}  // namespace ecrit
