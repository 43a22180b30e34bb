#include "ecrit/report.hpp"

namespace ecrit {

void VerificationReport::Fail(Counterexample cx) {
  ++failures;
  if (!counterexample || cx.Key() < counterexample->Key()) {
    counterexample = std::move(cx);
  }
}

void VerificationReport::Merge(const VerificationReport& other) {
  if (check.empty()) check = other.check;
  instances += other.instances;
  vacuous += other.vacuous;
  failures += other.failures;
  if (other.counterexample &&
      (!counterexample || other.counterexample->Key() < counterexample->Key())) {
    counterexample = other.counterexample;
  }
  for (const auto& [k, v] : other.stats) stats[k] += v;
  notes.insert(other.notes.begin(), other.notes.end());
}

nlohmann::json VerificationReport::ToJson() const {
  nlohmann::json j;
  j["check"] = check;
  j["verdict"] = Passed() ? (NeverInstantiated() ? "vacuous" : "pass") : "fail";
  j["instances"] = instances;
  j["vacuous"] = vacuous;
  j["failures"] = failures;
  if (counterexample) {
    j["counterexample"] = {{"graph6", counterexample->graph6},
                           {"coloring", counterexample->coloring},
                           {"witness", counterexample->witness},
                           {"clause", counterexample->clause}};
  } else {
    j["counterexample"] = nullptr;
  }
  j["stats"] = nlohmann::json::object();
  for (const auto& [k, v] : stats) j["stats"][k] = v;
  j["notes"] = nlohmann::json::array();
  for (const auto& n : notes) j["notes"].push_back(n);
  return j;
}

VerificationReport VerificationReport::FromJson(const nlohmann::json& j) {
  VerificationReport r(j.at("check").get<std::string>());
  r.instances = j.at("instances").get<std::uint64_t>();
  r.vacuous = j.at("vacuous").get<std::uint64_t>();
  r.failures = j.at("failures").get<std::uint64_t>();
  if (!j.at("counterexample").is_null()) {
    const auto& c = j.at("counterexample");
    r.counterexample = Counterexample{
        c.at("graph6").get<std::string>(), c.at("coloring").get<std::string>(),
        c.at("witness").get<std::string>(), c.at("clause").get<std::string>()};
  }
  for (const auto& [k, v] : j.at("stats").items()) {
    r.stats[k] = v.get<std::uint64_t>();
  }
  for (const auto& n : j.at("notes")) r.notes.insert(n.get<std::string>());
  return r;
}

std::string VerificationReport::SummaryLine() const {
  std::string verdict =
      !Passed() ? "FAIL" : (NeverInstantiated() ? "VACUOUS" : "PASS");
  std::string line = check;
  if (line.size() < 28) line.resize(28, ' ');
  line += " " + verdict;
  while (line.size() < 37) line += ' ';
  line += "instances=" + std::to_string(instances) +
          " vacuous=" + std::to_string(vacuous) +
          " failures=" + std::to_string(failures);
  return line;
}

}  // namespace ecrit
