#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ainfty/trees.hpp"

using namespace ainfty;

static Weight W(std::initializer_list<int> cs) {
  Weight w;
  for (int c : cs) w.e[c]++;
  return w;
}

static TreeChain chain_of(std::vector<TreeId> v) {
  cancel_pairs(v);
  return v;
}

TEST_CASE("dimensions") {
  for (int n = 2; n <= 6; ++n) CHECK(tree_dim(corolla(n, {})) == n - 2);
  CHECK(tree_dim(kStump) == 0);
  CHECK(tree_dim(kShoot) == 0);
  CHECK(tree_dim(corolla(0, W({1}))) == 0);
  CHECK(tree_dim(corolla(1, W({0}))) == 1);
}

TEST_CASE("boundary of small corollas") {
  CHECK(tree_boundary(corolla(2, {})).empty());
  TreeId L = tree_parse("((| |) |)");
  TreeId R = tree_parse("(| (| |))");
  CHECK(tree_boundary(corolla(3, {})) == chain_of({L, R}));
  // the weighted 1-corolla splits off a popsicle on either side
  TreeId a = tree_parse("(()^e1 |)");
  TreeId b = tree_parse("(| ()^e1)");
  CHECK(tree_boundary(corolla(1, W({1}))) == chain_of({a, b}));
}

TEST_CASE("unweighted counts are the little Schroeder numbers") {
  int expect[] = {0, 0, 1, 3, 11, 45, 197, 903};
  for (int n = 2; n <= 7; ++n) CHECK(trees_with(n, {}).size() == size_t(expect[n]));
}

TEST_CASE("d^2 = 0 and dim drops by one") {
  long checked = 0;
  for (int n = 0; n <= 5; ++n)
    for (const Weight& w : weights_upto(0, 4, 2)) {
      if (n + 2 * w.total() > 9) continue;
      for (TreeId t : trees_with(n, w)) {
        TreeChain dd;
        for (TreeId x : tree_boundary(t)) {
          CHECK(tree_dim(x) == tree_dim(t) - 1);
          CHECK(tree_weight(x) == w);
          CHECK(tree_inputs(x) == n);
          for (TreeId y : tree_boundary(x)) dd.push_back(y);
        }
        cancel_pairs(dd);
        CHECK(dd.empty());
        ++checked;
      }
    }
  CHECK(checked > 1000);
  MESSAGE("trees checked: " << checked);
}

TEST_CASE("gluing") {
  for (int n = 1; n <= 4; ++n) {
    TreeId t = corolla(n, {});
    for (int i = 1; i <= n; ++i) CHECK(tree_glue(t, i, kShoot) == t);
  }
  CHECK(tree_glue(corolla(2, {}), 1, kStump) == kShoot);
  CHECK(tree_glue(corolla(4, {}), 2, kStump) == kZero);
  CHECK(tree_glue(corolla(2, W({1})), 1, kStump) == kZero);
  CHECK(tree_glue(corolla(2, {}), 1, corolla(2, {})) == tree_parse("((| |) |)"));
  CHECK(tree_stack(2, 3, 3, corolla(2, {}), corolla(2, {})) == tree_parse("(| (| |))"));
  TreeId s = corolla(1, W({2}));
  TreeId t = corolla(2, W({1}));
  CHECK(tree_weight(tree_glue(t, 2, s)) == W({1, 2}));
}

TEST_CASE("gluing is associative on small trees") {
  std::vector<TreeId> pool{kShoot, kStump};
  for (int n = 0; n <= 3; ++n)
    for (const Weight& w : weights_upto(0, 1, 1))
      for (TreeId t : trees_with(n, w)) pool.push_back(t);
  long checked = 0;
  for (TreeId a : pool)
    for (TreeId b : pool)
      for (TreeId c : pool) {
        int na = tree_inputs(a), nb = tree_inputs(b), nc = tree_inputs(c);
        if (na + nb + nc > 6) continue;
        for (int i = 1; i <= na; ++i)
          for (int j = 1; j <= nb; ++j) {
            // (a o_i b) o_{i+j-1} c == a o_i (b o_j c)
            TreeId ab = tree_glue(a, i, b);
            TreeId lhs = ab == kZero ? kZero : tree_glue(ab, i + j - 1, c);
            TreeId bc = tree_glue(b, j, c);
            TreeId rhs = bc == kZero ? kZero : tree_glue(a, i, bc);
            CHECK(lhs == rhs);
            ++checked;
          }
      }
  CHECK(checked > 100);
}

TEST_CASE("gluing a stump commutes with the boundary") {
  for (int n = 1; n <= 5; ++n)
    for (const Weight& w : weights_upto(0, 2, 1))
      for (TreeId t : trees_with(n, w))
        for (int i = 1; i <= n; ++i) {
          TreeChain lhs, rhs;
          TreeId g = tree_glue(t, i, kStump);
          if (g > kShoot) lhs = tree_boundary(g);
          for (TreeId x : tree_boundary(t)) {
            TreeId y = tree_glue(x, i, kStump);
            if (y != kZero) rhs.push_back(y);
          }
          cancel_pairs(rhs);
          CHECK(lhs == rhs);
        }
}

TEST_CASE("profiles and right-moving pairs") {
  TreeId L = tree_parse("((| |) |)");
  TreeId R = tree_parse("(| (| |))");
  TreeId C = corolla(3, {});
  CHECK(tree_profile(corolla(5, {}), {1, 3}) == corolla(2, {}));
  CHECK(tree_profile(L, {1, 2, 3}) == L);
  TreeId wt = tree_parse("((| ()^e1 |)^e2 |)");
  CHECK(tree_profile(wt, {1, 2, 3}) == L);
  CHECK(shape3(L) == 1);
  CHECK(shape3(R) == 2);
  RightMoving rm;
  CHECK(rm(L, C));
  CHECK(rm(C, R));
  CHECK(rm(L, R));
  CHECK_FALSE(rm(C, C));
  CHECK_FALSE(rm(R, L));
  CHECK_FALSE(rm(C, L));
  // weight blindness
  CHECK(rm(wt, C) == rm(L, C));
  CHECK(rm(C, wt) == rm(C, L));
}

TEST_CASE("text round trip") {
  for (const Weight& w : weights_upto(0, 2, 1))
    for (TreeId t : trees_with(3, w)) CHECK(tree_parse(tree_str(t, 3)) == t);
  CHECK(tree_compare(corolla(2, {}), corolla(3, {})) < 0);
}
