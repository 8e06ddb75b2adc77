#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "ainfty/verify.hpp"

using namespace ainfty;

namespace {

int run(const std::string& args) {
  int rc = std::system((std::string(CLI_PATH) + " " + args + " > /dev/null 2>&1").c_str());
  return WEXITSTATUS(rc);
}

json slurp(const std::string& path) {
  std::ifstream f(path);
  return json::parse(f);
}

}  // namespace

TEST_CASE("report serialization") {
  Report r;
  r.command = "x";
  Check a{"a"};
  a.checked = 3;
  Check b{"b"};
  b.fail("bad");
  r.checks = {a};
  CHECK(r.pass());
  r.checks.push_back(b);
  CHECK(!r.pass());
  json j = r.to_json();
  CHECK(j["schema_version"] == 1);
  CHECK(j["pass"] == false);
  CHECK(j["checks"][1]["failures"] == 1);
  CHECK(j["checks"][1]["examples"][0] == "bad");
  CHECK(r.to_text().find("[FAIL] b") != std::string::npos);
}

TEST_CASE("identical configs give identical reports") {
  Caps c;
  c.samples = 400;
  c.seed = 9;
  json x = verify_algebra_a(c).to_json(), y = verify_algebra_a(c).to_json();
  x.erase("seconds");
  y.erase("seconds");
  CHECK(x.dump() == y.dump());
  c.seed = 10;
  json z = verify_algebra_a(c).to_json();
  z.erase("seconds");
  CHECK(z.dump() != x.dump());
}

TEST_CASE("cli exit codes") {
  CHECK(run("verify algebra-a --n 3 --samples 500") == 0);
  CHECK(run("verify algebra-a --n 3 --samples 500 --corrupt-chord 1") != 0);
  CHECK(run("verify bimodule-dd --n 3") == 0);
  CHECK(run("verify algebra-a --n 2") != 0);
  CHECK(run("enumerate algebra-a --n 3 --j 1") == 0);
}

TEST_CASE("cli json reports") {
  std::string p = "test_report_out.json";
  REQUIRE(run("enumerate algebra-a --n 3 --j 1 --format json --out " + p) == 0);
  json j = slurp(p);
  CHECK(j["schema_version"] == 1);
  CHECK(j["checks"][0]["data"]["count"] == 6);
  REQUIRE(run("enumerate homology-b --n 3 --max-len 2 --format json --out " + p) == 0);
  CHECK(slurp(p)["checks"][0]["data"]["total"] == 6);
  REQUIRE(run("enumerate diagonal --n 3 --arity 4 --format json --out " + p) == 0);
  CHECK(slurp(p)["checks"][0]["data"]["corollas"][0]["terms"].size() == 6);
  std::remove(p.c_str());
}
