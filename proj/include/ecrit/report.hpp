#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>

#include "json.hpp"

namespace ecrit {

struct Counterexample {
  std::string graph6;
  std::string coloring;  // SerializeColoring text, may be empty
  std::string witness;   // structure description, e.g. "a=0 b=1 u=3"
  std::string clause;    // which conclusion failed

  auto Key() const { return std::tie(graph6, witness, clause, coloring); }
};

// Outcome of one check over one or many instances. Merging is associative
// and commutative, so sweeps can combine partial reports in any order.
struct VerificationReport {
  std::string check;
  std::uint64_t instances = 0;  // hypothesis met
  std::uint64_t vacuous = 0;    // hypothesis not met
  std::uint64_t failures = 0;
  std::optional<Counterexample> counterexample;  // smallest by Key()
  std::map<std::string, std::uint64_t> stats;    // summed on merge
  std::set<std::string> notes;

  explicit VerificationReport(std::string name = {}) : check(std::move(name)) {}

  bool Passed() const { return failures == 0; }
  // Nothing met the hypothesis.
  bool NeverInstantiated() const { return instances == 0; }

  void Hit() { ++instances; }
  void Miss() { ++vacuous; }
  void Fail(Counterexample cx);
  void Count(const std::string& key, std::uint64_t by = 1) { stats[key] += by; }

  void Merge(const VerificationReport& other);

  nlohmann::json ToJson() const;
  static VerificationReport FromJson(const nlohmann::json& j);
  // One summary line: "name  PASS  instances=.. vacuous=.. failures=..".
  std::string SummaryLine() const;
};

}  // namespace ecrit
