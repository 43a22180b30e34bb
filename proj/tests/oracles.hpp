#pragma once

// Slow reference implementations used only by the tests. None of them call
// the library's search code; they only read graphs and colorings.

#include <cstdint>
#include <set>
#include <vector>

#include "ecrit/coloring.hpp"
#include "ecrit/witnesses.hpp"

namespace oracle {

// Unlabeled graphs on n vertices by Burnside's lemma over S_n acting on
// vertex pairs.
std::uint64_t BurnsideGraphCount(int n);

// Upper-triangle bit string of g under the relabeling v -> perm[v].
std::uint64_t Code(const ecrit::Graph& g, const std::vector<int>& perm);

// Minimum code over all n! relabelings.
std::uint64_t MinCode(const ecrit::Graph& g);

// Isomorphism classes of labeled graphs on n vertices, as MinCode values.
std::set<std::uint64_t> LabeledClasses(int n);

// Kierstead path test written straight from the definition.
bool IsKPath(const ecrit::PartialEdgeColoring& c, const std::vector<int>& v);

// All witnesses of a kind by trying every injective vertex tuple.
std::vector<ecrit::StructureWitness> BruteWitnesses(
    const ecrit::PartialEdgeColoring& c, ecrit::WitnessKind kind);

// Exhaustive chromatic index for tiny graphs (≤ 10 edges).
int BruteChromaticIndex(const ecrit::Graph& g);

}  // namespace oracle
