#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ainfty/algebra_a.hpp"
#include "ainfty/verify.hpp"

using namespace ainfty;

static Weight W(std::initializer_list<int> cs) {
  Weight w;
  for (int c : cs) w.e[c]++;
  return w;
}

TEST_CASE("basic corolla and weighted examples") {
  AlgebraA A(3);
  VMono v0;
  v0.e[0] = 1;
  auto basic = A.mu(Weight{}, {A.U(1), A.s(1, 1), A.U(2), A.s(2, 1), A.U(3), A.s(3, 1)});
  REQUIRE(basic.size() == 1);
  CHECK(basic[0].v == v0);
  CHECK(basic[0].kind == ATerm::Idem);
  auto petal = A.mu(W({2}), {A.U(1), A.s(1, 2), A.U(3), A.s(3, 1)});
  CHECK(petal.size() == 1);
  auto two = A.mu(W({2, 3}), {A.s(1, 3), A.U(1)});
  CHECK(two.size() == 1);
  auto ex = A.mu(W({1, 2}), {A.U(3), A.s(3, 3)});
  CHECK(ex.size() == 1);
}

TEST_CASE("census of the 2N rotations") {
  for (int N : {3, 4}) {
    AlgebraA A(N);
    auto ops = a_census(A, 1);
    CHECK(ops.size() == size_t(2 * N));
    CHECK(a_census_check(A).pass);
  }
}

TEST_CASE("relation sweep and a corrupted product") {
  Caps c;
  c.samples = 1500;
  CHECK(verify_algebra_a(c).pass());
  c.N = 4;
  CHECK(verify_algebra_a(c).pass());
  c.N = 3;
  c.corruptChord = 2;
  CHECK(!verify_algebra_a(c).pass());
}
