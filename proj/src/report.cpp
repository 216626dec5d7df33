#include "ordline/report.hpp"

namespace ordline {

nlohmann::ordered_json make_report(const std::string& command,
                                   const std::string& instance,
                                   const std::string& property,
                                   std::uint64_t cases,
                                   const std::vector<std::string>& failures,
                                   const std::string& verdict,
                                   std::uint64_t elapsed_ms) {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["instance"] = instance;
  j["property"] = property;
  j["cases"] = cases;
  j["failures"] = failures;
  j["verdict"] = verdict;
  j["elapsed_ms"] = elapsed_ms;
  return j;
}

std::string render_report(const nlohmann::ordered_json& report) {
  return report.dump(2) + "\n";
}

std::vector<std::string> validate_report(const std::string& text) {
  std::vector<std::string> problems;
  nlohmann::ordered_json j;
  try {
    j = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    problems.push_back(std::string("not valid JSON: ") + e.what());
    return problems;
  }
  if (!j.is_object()) {
    problems.push_back("top level is not an object");
    return problems;
  }

  static const char* expected[] = {"command", "instance", "property", "cases",
                                   "failures", "verdict", "elapsed_ms"};
  std::size_t pos = 0;
  for (auto it = j.begin(); it != j.end(); ++it, ++pos) {
    if (pos >= std::size(expected)) {
      problems.push_back("unexpected extra key '" + it.key() + "'");
      continue;
    }
    if (it.key() != expected[pos])
      problems.push_back("key " + std::to_string(pos) + " is '" + it.key() +
                         "', expected '" + expected[pos] + "'");
  }
  for (std::size_t k = pos; k < std::size(expected); ++k)
    problems.push_back(std::string("missing key '") + expected[k] + "'");
  if (!problems.empty()) return problems;

  for (const char* key : {"command", "instance", "property", "verdict"})
    if (!j[key].is_string())
      problems.push_back(std::string("'") + key + "' is not a string");
  for (const char* key : {"cases", "elapsed_ms"})
    if (!j[key].is_number_unsigned())
      problems.push_back(std::string("'") + key +
                         "' is not an unsigned integer");
  if (!j["failures"].is_array()) {
    problems.push_back("'failures' is not an array");
  } else {
    for (const auto& f : j["failures"])
      if (!f.is_string()) {
        problems.push_back("'failures' holds a non-string entry");
        break;
      }
  }
  if (j["verdict"].is_string()) {
    std::string v = j["verdict"].get<std::string>();
    if (v != "pass" && v != "fail" && v != "error")
      problems.push_back("verdict '" + v + "' is not pass | fail | error");
  }
  return problems;
}

}  // namespace ordline
