#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "ainfty/gf2.hpp"
#include "ainfty/ring.hpp"

using namespace ainfty;

TEST_CASE("Maslov weights of variables") {
  Grading g;
  g.N = 3;
  CHECK(g.mV(0) == 4);
  CHECK(g.mV(1) == -2);
  CHECK(g.mV(4) == -2);
  CHECK(g.mW(0) == -4);
  CHECK(g.mW(2) == 2);
  CHECK(g.mW(4) == 2);
  // V_0 V_1 ... V_N has total Maslov 2N-2-2N = -2
  VMono v;
  for (int i = 0; i <= 3; ++i) v.e[i] = 1;
  CHECK(g.m(v) == -2);
}

TEST_CASE("Alexander slots") {
  Grading g;
  g.N = 3;
  Alex all{}, odd{}, even{};
  for (int k = 0; k < 6; ++k) all[k] = 1;
  CHECK(g.aVar(0) == all);
  // V_1 + ... + V_N + V_{N+1} covers every slot once
  Alex s{};
  for (int i = 1; i <= 4; ++i) s = s + g.aVar(i);
  CHECK(s == all);
  CHECK(g.slotOdd(2)[2] == 1);
  CHECK(g.slotEven(3)[5] == 1);
  CHECK(g.idx(4) == 1);
  CHECK(g.idx(0) == 3);
}

TEST_CASE("weights_upto counts") {
  // compositions of <= t into k parts: C(t+k, k)
  auto binom = [](int n, int k) {
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
  };
  for (int k = 1; k <= 5; ++k)
    for (int t = 0; t <= 3; ++t) CHECK(long(weights_upto(0, k - 1, t).size()) == binom(t + k, k));
}

TEST_CASE("cancel_pairs is F_2 reduction") {
  std::vector<int> v{3, 1, 3, 2, 3, 1, 7};
  cancel_pairs(v);
  CHECK(v == std::vector<int>{2, 3, 7});
}

TEST_CASE("column basis rank matches dense elimination") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    int rows = 1 + rng() % 12, cols = 1 + rng() % 12;
    std::vector<uint32_t> dense;
    ColumnBasis cb;
    for (int c = 0; c < cols; ++c) {
      uint32_t m = rng() & ((1u << rows) - 1);
      dense.push_back(m);
      SparseVec sv;
      for (int r = 0; r < rows; ++r)
        if (m >> r & 1) sv.push_back(r);
      cb.add(sv);
    }
    int rank = 0;
    for (int bit = rows - 1; bit >= 0; --bit) {
      auto it = std::find_if(dense.begin(), dense.end(), [&](uint32_t x) { return x >> bit & 1; });
      if (it == dense.end()) continue;
      uint32_t p = *it;
      dense.erase(it);
      for (auto& x : dense)
        if (x >> bit & 1) x ^= p;
      ++rank;
    }
    CHECK(cb.rank() == rank);
  }
}

TEST_CASE("string forms") {
  VMono v;
  v.e[0] = 2;
  v.e[1] = 1;
  CHECK(!vmono_str(v, 3).empty());
  CHECK(weight_str(Weight{}, 3) == "0");
}
