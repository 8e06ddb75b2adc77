#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <map>
#include <set>

#include "ainfty/diagonal.hpp"
#include "ainfty/tensor.hpp"
#include "ainfty/verify.hpp"

using namespace ainfty;

namespace {

Diagonal& small() {
  static Diagonal d([] {
    DiagonalParams p;
    p.N = 3;
    p.maxInputs = 5;
    p.maxWeight = 1;
    p.maxDegree = 7;
    return p;
  }());
  return d;
}

std::vector<TreeId> binary(int n) {
  std::vector<TreeId> r;
  for (TreeId t : trees_with(n, {}))
    if (tree_dim(t) == 0) r.push_back(t);
  return r;
}

// ((A B) C) -> (A (B C)) anywhere
void rotations(TreeId t, std::vector<TreeId>& out) {
  if (t <= 0) return;
  const TreeNode& nd = tree_node(t);
  TreeId a = nd.kids[0], b = nd.kids[1];
  if (a > 0) {
    const TreeNode& l = tree_node(a);
    out.push_back(tree_make({}, {l.kids[0], tree_make({}, {l.kids[1], b})}));
  }
  std::vector<TreeId> sub;
  rotations(a, sub);
  for (TreeId x : sub) out.push_back(tree_make({}, {x, b}));
  sub.clear();
  rotations(b, sub);
  for (TreeId x : sub) out.push_back(tree_make({}, {a, x}));
}

// Tamari order as reachability under right rotation
struct Tamari {
  std::map<TreeId, std::set<TreeId>> up;
  explicit Tamari(int n) {
    for (TreeId t : binary(n)) {
      std::set<TreeId>& s = up[t];
      std::vector<TreeId> todo{t};
      while (!todo.empty()) {
        TreeId x = todo.back();
        todo.pop_back();
        if (!s.insert(x).second) continue;
        std::vector<TreeId> nx;
        rotations(x, nx);
        todo.insert(todo.end(), nx.begin(), nx.end());
      }
    }
  }
  bool leq(TreeId a, TreeId b) const { return up.at(a).count(b) > 0; }
};

// binary trees refining a face
std::vector<TreeId> refinements(TreeId t) {
  if (t == kShoot) return {kShoot};
  const TreeNode& nd = tree_node(t);
  std::vector<std::vector<TreeId>> kidRefs;
  for (TreeId k : nd.kids) kidRefs.push_back(refinements(k));
  std::vector<TreeId> out;
  for (TreeId shape : binary(int(nd.kids.size()))) {
    std::vector<TreeId> pick(nd.kids.size());
    std::function<void(size_t)> rec = [&](size_t i) {
      if (i == pick.size()) {
        out.push_back(tree_subst(shape, pick));
        return;
      }
      for (TreeId x : kidRefs[i]) {
        pick[i] = x;
        rec(i + 1);
      }
    };
    rec(0);
  }
  return out;
}

}  // namespace

TEST_CASE("unweighted Gamma is the Tamari magical formula") {
  const Diagonal& d = small();
  const int want[] = {0, 0, 1, 2, 6, 22};
  for (int n = 2; n <= 5; ++n) {
    Tamari tam(n);
    auto extreme = [&](TreeId f, bool top) {
      auto rs = refinements(f);
      for (TreeId x : rs) {
        bool ok = true;
        for (TreeId y : rs) ok = ok && (top ? tam.leq(y, x) : tam.leq(x, y));
        if (ok) return x;
      }
      FAIL("face without extreme refinement");
      return kZero;
    };
    PairChain oracle;
    auto faces = trees_with(n, {});
    for (TreeId f : faces)
      for (TreeId g : faces)
        if (tree_dim(f) + tree_dim(g) == n - 2 && tam.leq(extreme(f, true), extreme(g, false)))
          oracle.push_back({f, g});
    std::sort(oracle.begin(), oracle.end());
    PairChain got = d.corolla_value(n, {});
    CHECK(got.size() == size_t(want[n]));
    CHECK(got == oracle);
  }
}

TEST_CASE("seeds and the usual Gamma^{3,0}") {
  const Diagonal& d = small();
  CHECK(d.corolla_value(2, {}) == diagonal_seed(2, {}, 3));
  for (int i = 0; i <= 4; ++i) CHECK(d.corolla_value(0, Weight::unit(i)) == diagonal_seed(0, Weight::unit(i), 3));
  CHECK(tree_str(d.corolla_value(0, Weight::unit(0))[0].s, 3) == tree_str(kStump, 3));
}

TEST_CASE("axioms on the small build") {
  auto checks = diagonal_checks(small(), 5, 1);
  for (auto& c : checks) {
    INFO(c.name);
    CHECK(c.pass);
    CHECK(c.checked > 0);
  }
}

TEST_CASE("mutations are caught") {
  DiagonalParams p;
  p.N = 3;
  p.maxInputs = 4;
  p.maxWeight = 1;
  p.maxDegree = 6;
  auto failing = [](const Diagonal& d, const std::string& name) {
    for (auto& c : diagonal_checks(d, 4, 1))
      if (c.name == name) return !c.pass;
    return false;
  };
  {
    Diagonal d(p);
    PairChain g = d.corolla_value(3, {});
    g.pop_back();
    d.set_value(3, {}, g);
    CHECK(failing(d, "chain map"));
  }
  {
    Diagonal d(p);
    d.set_value(0, Weight::unit(0), {{kStump, kStump}});
    CHECK(failing(d, "WD4 no stump/stump or shoot/shoot"));
  }
  {
    Diagonal d(p);
    TreeId c3 = corolla(3, {});
    d.set_value(3, {}, {{c3, tree_parse("((| |) |)")}, {c3, tree_parse("(| (| |))")}});
    CHECK(failing(d, "Gamma^{3,0} is the usual choice"));
  }
}

TEST_CASE("construction is deterministic") {
  DiagonalParams p;
  p.N = 3;
  p.maxInputs = 4;
  p.maxWeight = 1;
  p.maxDegree = 6;
  Diagonal a(p), b(p);
  REQUIRE(a.table().size() == b.table().size());
  for (auto& [k, v] : a.table()) {
    auto& w = b.table().at(k);
    REQUIRE(v.size() == w.size());
    for (size_t i = 0; i < v.size(); ++i) CHECK(pair_str(v[i], 3) == pair_str(w[i], 3));
  }
}

TEST_CASE("tensor products of simple inputs") {
  const Diagonal& d = small();
  AlgebraA A(3);
  AlgebraB B(3);
  // mu_2 is the componentwise product
  auto m2 = tensor_mu(d, A, B, {}, {{A.U(1), {VMono{}, B.idem(1)}}, {A.U(1), {VMono{}, B.rho(1)}}});
  REQUIRE(m2.size() == 1);
  CHECK(m2[0].a == A.U(1, 2));
  CHECK(m2[0].b == B.rho(1));
  // mu_1 is the differential on the B factor: d rho_1 = V_1
  auto m1 = tensor_mu(d, A, B, {}, {{A.idem(1), {VMono{}, B.rho(1)}}});
  REQUIRE(m1.size() == 1);
  ATerm v1 = A.idem(1);
  v1.v = VMono::unit(1);
  CHECK(m1[0].a == v1);
  CHECK(m1[0].b == B.idem(1));
}

TEST_CASE("golden Gamma^{n,0}, n <= 4") {
  std::ifstream f(std::string(GOLDEN_DIR) + "/gamma_n0.txt");
  REQUIRE(f.good());
  std::vector<std::string> want, got;
  for (std::string s; std::getline(f, s);) want.push_back(s);
  for (int n = 2; n <= 4; ++n)
    for (auto& t : small().corolla_value(n, {})) got.push_back(std::to_string(n) + "\t" + pair_str(t, 3));
  CHECK(got == want);
}
