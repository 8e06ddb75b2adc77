#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>

#include "ainfty/bimodules.hpp"
#include "ainfty/verify.hpp"

using namespace ainfty;

namespace {

BTerm bt(const BWord& w) { return {VMono{}, w}; }

// brute-force piece of B: every V monomial times every word, filtered by grading
std::map<int, std::vector<BTerm>> brute_piece(const AlgebraB& B, const Alex& a, int from, int to) {
  int N = B.N(), tot = 0;
  for (int x : a) tot += x;
  std::map<int, std::vector<BTerm>> out;
  std::vector<int> e(N + 2, 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == N + 2) {
      VMono v;
      for (int k = 0; k <= N + 1; ++k) v.e[k] = uint8_t(e[k]);
      for (auto& w : B.all_words(tot)) {
        BTerm t{v, w};
        if (B.initial(w) == from && B.final(w) == to && B.alex(t) == a) out[B.maslov(t)].push_back(t);
      }
      return;
    }
    for (e[i] = 0; e[i] <= tot; ++e[i]) rec(i + 1);
    e[i] = 0;
  };
  rec(0);
  return out;
}

int dense_rank(std::vector<std::vector<char>> m) {
  int r = 0;
  size_t cols = m.empty() ? 0 : m[0].size();
  for (size_t c = 0; c < cols && r < int(m.size()); ++c) {
    int p = -1;
    for (int i = r; i < int(m.size()); ++i)
      if (m[i][c]) p = i;
    if (p < 0) continue;
    std::swap(m[r], m[p]);
    for (int i = 0; i < int(m.size()); ++i)
      if (i != r && m[i][c])
        for (size_t k = 0; k < cols; ++k) m[i][k] ^= m[r][k];
    ++r;
  }
  return r;
}

int brute_h(const AlgebraB& B, const BTerm& t) {
  auto piece = brute_piece(B, B.alex(t), B.initial(t.w), B.final(t.w));
  auto rank_d = [&](int m) {  // d : C_m -> C_{m-1}
    auto& src = piece[m];
    auto& dst = piece[m - 1];
    std::vector<std::vector<char>> rows;
    for (auto& x : src) {
      std::vector<char> row(dst.size(), 0);
      for (auto& y : B.diff(x)) row[std::find(dst.begin(), dst.end(), y) - dst.begin()] ^= 1;
      rows.push_back(row);
    }
    return dense_rank(rows);
  };
  int m = B.maslov(t);
  return int(piece[m].size()) - rank_d(m) - rank_d(m + 1);
}

}  // namespace

TEST_CASE("Y recognizer examples") {
  AlgebraA A(3);
  AlgebraB B(3);
  BimoduleY Y(A, B);
  CHECK(Y.recognize({}, {bt(B.rho(1))}, 1, {A.U(1)}) == 1);
  CHECK(Y.recognize({}, {bt(B.sigma(2))}, 2, {A.s(2, 1)}) == 3);
  CHECK(Y.recognize({}, {bt(B.sigma(3))}, 3, {A.s(3, 1)}) == 1);
  CHECK(!Y.recognize({}, {bt(B.rho(1))}, 1, {A.s(1, 1)}));
  CHECK(!Y.recognize({}, {bt(B.sigma(1)), bt(B.rho(2))}, 1, {A.U(1), A.s(1, 1)}));
  ATerm v0 = A.idem(2);
  v0.v = VMono::unit(0);
  CHECK(Y.recognize(Weight::unit(0), {}, 2, {v0}) == 2);
  // rho_1 against e_1 alone is off by one in Maslov
  CHECK(Y.maslov_defect(Weight::unit(1), {bt(B.rho(1))}, {}) == 1);
  CHECK(!Y.recognize(Weight::unit(1), {bt(B.rho(1))}, 1, {}));
}

TEST_CASE("Y relations, small sweep") {
  Caps c;
  c.maxInputs = 4;
  c.maxWeight = 1;
  c.samples = 300;
  Report r = verify_bimodule_y(c);
  INFO(r.to_text());
  CHECK(r.pass());
}

TEST_CASE("DD bimodule") {
  AlgebraA A(3);
  AlgebraB B(3);
  for (int i = 1; i <= 3; ++i) {
    auto d = dd_delta1(A, B, i);
    REQUIRE(d.size() == 2);
    CHECK(d[0].a == A.U(i));
    CHECK(d[0].b.w == B.rho(i));
    CHECK(d[1].a == A.s(i, 1));
    CHECK(d[1].b.w == B.sigma(i));
  }
  // per generator: U_j V_j, s V_{N+1}, and the two words of U_0 at j
  CHECK(dd_expected(A, B).size() == 3 * 4);
  std::map<int, int> perGen;
  for (auto& [t, g] : dd_expected(A, B)) ++perGen[g];
  CHECK(perGen == std::map<int, int>{{1, 4}, {2, 4}, {3, 4}});
  Report r = verify_bimodule_dd(Caps{});
  INFO(r.to_text());
  CHECK(r.pass());
}

TEST_CASE("box tensors: identity DA bimodules in low arity") {
  AlgebraA A(3);
  AlgebraB B(3);
  BimoduleY Y(A, B);
  BoxCaps bc;
  bc.maxChain = 8;
  for (int i = 1; i <= 3; ++i) {
    CHECK(box_xy(Y, {}, {A.U(i)}, bc) == AElem{A.U(i)});
    CHECK(box_xy(Y, {}, {A.s(i, 1)}, bc) == AElem{A.s(i, 1)});
    CHECK(box_yx(Y, 0, {bt(B.sigma(i))}, bc) == BElem{bt(B.sigma(i))});
    CHECK(box_yx(Y, 0, {bt(B.rho(i))}, bc) == BElem{bt(B.rho(i))});
  }
  CHECK(box_xy(Y, {}, {}, bc).empty());
  CHECK(box_yx(Y, 0, {}, bc).empty());
}

TEST_CASE("homology of B agrees with dense brute force") {
  AlgebraB B(3);
  auto cls = b_homology_generators(B, 2);
  int total = 0;
  for (auto& c : cls) {
    total += c.dim;
    CHECK(brute_h(B, c.rep) == c.dim);
  }
  CHECK(total == 6);
  for (int i = 1; i <= 3; ++i) {
    BTerm v{VMono::unit(i), B.idem(i)};
    CHECK(brute_h(B, v) == 0);
    CHECK(brute_h(B, bt(B.sigma(i))) == 1);
  }
  CHECK(b_homology_check(B, 2).pass);
}

TEST_CASE("duality report") {
  Report r = verify_duality(Caps{});
  INFO(r.to_text());
  CHECK(r.pass());
}
