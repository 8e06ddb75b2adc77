#include <cstdio>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "ainfty/bimodules.hpp"
#include "ainfty/verify.hpp"

using namespace ainfty;

namespace {

struct RunConfig {
  Caps caps;
  std::string format = "text";
  std::string out;
  int j = 1;
  int arity = -1;
  bool maxInputsSet = false, maxWeightSet = false, maxLenSet = false;
};

Report enumerate_algebra_a(const RunConfig& rc) {
  Stopwatch sw;
  Report r;
  r.command = "enumerate algebra-a";
  r.params = {{"n", rc.caps.N}, {"j", rc.j}};
  AlgebraA A(rc.caps.N);
  Check c{"accepted unweighted basic sequences"};
  auto ops = a_census(A, rc.j, &c.checked);
  json list = json::array();
  for (auto& op : ops) list.push_back({{"inputs", A.str(op.seq, true)}, {"output", A.str(op.out)}});
  c.data["operations"] = list;
  c.data["count"] = ops.size();
  if (int(ops.size()) != 2 * rc.caps.N && rc.j == 1) c.fail("expected the 2N rotations");
  r.checks = {c};
  r.seconds = sw.seconds();
  return r;
}

Report enumerate_diagonal(const RunConfig& rc) {
  Stopwatch sw;
  Report r;
  r.command = "enumerate diagonal";
  int N = rc.caps.N;
  DiagonalParams p;
  p.N = N;
  p.maxInputs = rc.arity >= 0 ? std::max(rc.arity, 2) : rc.caps.maxInputs;
  p.maxWeight = rc.maxWeightSet ? rc.caps.maxWeight : (rc.arity >= 0 ? 0 : 1);
  p.maxDegree = p.maxInputs + 2 * p.maxWeight;
  r.params = {{"n", N}, {"max_inputs", p.maxInputs}, {"max_weight", p.maxWeight}};
  if (rc.arity >= 0) r.params["arity"] = rc.arity;
  Diagonal d(p);
  Check c{"Gamma tables"};
  for (auto& e : d.errors()) c.fail(e);
  json tab = json::array();
  for (auto& [k, v] : d.table()) {
    if (rc.arity >= 0 && k.n != rc.arity) continue;
    ++c.checked;
    json terms = json::array();
    for (auto& pr : v) terms.push_back(pair_str(pr, N));
    tab.push_back({{"n", k.n}, {"w", weight_str(k.w, N)}, {"terms", terms}});
  }
  c.data["corollas"] = tab;
  r.checks = {c};
  r.seconds = sw.seconds();
  return r;
}

Report enumerate_homology_b(const RunConfig& rc) {
  Stopwatch sw;
  Report r;
  int L = rc.maxLenSet ? rc.caps.maxLen : 2;
  r.command = "enumerate homology-b";
  r.params = {{"n", rc.caps.N}, {"max_len", L}};
  AlgebraB B(rc.caps.N);
  r.checks = {b_homology_check(B, L)};
  r.seconds = sw.seconds();
  return r;
}

void emit(const Report& r, const RunConfig& rc) {
  std::string s = rc.format == "json" ? r.to_json().dump(2) + "\n" : r.to_text();
  if (rc.format == "text" && r.checks.size() == 1 && !r.checks[0].data.empty())
    s += r.checks[0].data.dump(2) + "\n";
  if (rc.out.empty()) {
    std::cout << s;
  } else {
    std::ofstream f(rc.out);
    f << s;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weighted A-infinity algebras on star diagrams: construction and verification"};
  app.require_subcommand(1);
  RunConfig rc;
  std::string target;

  auto common = [&](CLI::App* sc) {
    sc->add_option("--n", rc.caps.N, "number of spokes N")->check(CLI::Range(3, 12));
    sc->add_option("--max-inputs", rc.caps.maxInputs, "input cap")->check(CLI::PositiveNumber)->each([&](const std::string&) { rc.maxInputsSet = true; });
    sc->add_option("--max-weight", rc.caps.maxWeight, "weight cap |w|")->check(CLI::NonNegativeNumber)->each([&](const std::string&) { rc.maxWeightSet = true; });
    sc->add_option("--max-len", rc.caps.maxLen, "word length cap")->check(CLI::PositiveNumber)->each([&](const std::string&) { rc.maxLenSet = true; });
    sc->add_option("--samples", rc.caps.samples, "random samples")->check(CLI::NonNegativeNumber);
    sc->add_option("--seed", rc.caps.seed, "seed");
    sc->add_option("--format", rc.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    sc->add_option("--out", rc.out, "report path (default stdout)");
  };

  auto* verify = app.add_subcommand("verify", "run a verification sweep");
  verify->add_option("target", target)->required()->check(
      CLI::IsMember({"algebra-a", "algebra-b", "bimodule-y", "bimodule-dd", "diagonal", "duality"}));
  verify->add_option("--corrupt-chord", rc.caps.corruptChord, "mutation test: zero the chord products from this idempotent")
      ->group("");
  common(verify);

  auto* enumerate = app.add_subcommand("enumerate", "list operations or tables within caps");
  enumerate->add_option("target", target)->required()->check(CLI::IsMember({"algebra-a", "diagonal", "homology-b"}));
  enumerate->add_option("--j", rc.j, "algebra-a: n = j(2N-2)+2")->check(CLI::Range(1, 3));
  enumerate->add_option("--arity", rc.arity, "diagonal: only Gamma^{n,w} with this n")->check(CLI::NonNegativeNumber);
  common(enumerate);

  CLI11_PARSE(app, argc, argv);

  Report r;
  if (verify->parsed()) {
    if (target == "algebra-a") r = verify_algebra_a(rc.caps);
    else if (target == "algebra-b") r = verify_algebra_b(rc.caps);
    else if (target == "bimodule-y") r = verify_bimodule_y(rc.caps);
    else if (target == "bimodule-dd") r = verify_bimodule_dd(rc.caps);
    else if (target == "diagonal") {
      Caps c = rc.caps;
      if (!rc.maxInputsSet) c.maxInputs = 6;
      if (!rc.maxWeightSet) c.maxWeight = 1;
      r = verify_diagonal(c);
    } else r = verify_duality(rc.caps);
  } else {
    if (target == "algebra-a") r = enumerate_algebra_a(rc);
    else if (target == "diagonal") r = enumerate_diagonal(rc);
    else r = enumerate_homology_b(rc);
  }
  emit(r, rc);
  return r.pass() ? 0 : 1;
}
