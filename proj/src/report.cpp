#include "ainfty/report.hpp"

#include <sstream>

namespace ainfty {

json Check::to_json() const {
  json j;
  j["name"] = name;
  j["pass"] = pass;
  j["checked"] = checked;
  j["failures"] = failures;
  j["examples"] = examples;
  if (!data.empty()) j["data"] = data;
  return j;
}

json Report::to_json() const {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  j["params"] = params;
  j["pass"] = pass();
  j["seconds"] = seconds;
  j["checks"] = json::array();
  for (auto& c : checks) j["checks"].push_back(c.to_json());
  return j;
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << command << ": " << (pass() ? "PASS" : "FAIL") << " (" << seconds << "s)\n";
  for (auto& c : checks) {
    os << "  [" << (c.pass ? "ok" : "FAIL") << "] " << c.name << "  checked=" << c.checked
       << " failures=" << c.failures << "\n";
    for (auto& e : c.examples) os << "      " << e << "\n";
  }
  return os.str();
}

}  // namespace ainfty
