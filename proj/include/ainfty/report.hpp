#pragma once

#include <chrono>
#include <string>
#include <vector>

#include "json.hpp"

namespace ainfty {

using json = nlohmann::json;

constexpr int kSchemaVersion = 1;

struct Check {
  std::string name;
  bool pass = true;
  long long checked = 0;
  long long failures = 0;
  std::vector<std::string> examples;  // first few failures
  json data = json::object();

  void fail(const std::string& what) {
    pass = false;
    ++failures;
    if (examples.size() < 8) examples.push_back(what);
  }
  json to_json() const;
};

struct Report {
  std::string command;
  std::vector<Check> checks;
  double seconds = 0;
  json params = json::object();

  bool pass() const {
    for (auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  json to_json() const;
  std::string to_text() const;
};

class Stopwatch {
  std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();

 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
  }
};

}  // namespace ainfty
