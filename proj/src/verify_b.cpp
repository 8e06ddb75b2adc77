#include <functional>
#include <mutex>

#include "ainfty/algebra_b.hpp"
#include "ainfty/parallel.hpp"
#include "ainfty/verify.hpp"

namespace ainfty {

namespace {

void sequences(const AlgebraB& B, int maxK, int maxLen,
               const std::function<void(const std::vector<BTerm>&)>& f) {
  std::vector<BTerm> cur;
  auto words = B.all_words(maxLen);
  std::function<void(int, int)> rec = [&](int idem, int left) {
    if (!cur.empty()) f(cur);
    if (int(cur.size()) == maxK) return;
    for (auto& w : words) {
      if (w.isIdem() || w.start != idem || w.len > left) continue;
      cur.push_back({VMono{}, w});
      rec(B.final(w), left - w.len);
      cur.pop_back();
    }
  };
  for (int i = 1; i <= B.N(); ++i) rec(i, maxLen);
}

bool grading_ok(const AlgebraB& B, const std::vector<BTerm>& in, const BElem& out, int extraM,
                const Alex& extraA) {
  int m = extraM + int(in.size()) - 2;
  Alex a = extraA;
  for (auto& t : in) {
    m += B.maslov(t);
    a = a + B.alex(t);
  }
  for (auto& t : out)
    if (B.maslov(t) != m || B.alex(t) != a) return false;
  return true;
}

}  // namespace

Report verify_algebra_b(const Caps& c) {
  Stopwatch sw;
  Report r;
  r.command = "verify algebra-b";
  r.params = {{"n", c.N}, {"max_len", c.maxLen}, {"max_inputs", c.maxInputs}};
  AlgebraB B(c.N);
  const Grading& g = B.grading();

  Check d2{"d^2 = 0"};
  for (auto& w : B.all_words(c.maxLen)) {
    ++d2.checked;
    BElem acc;
    for (auto& t : B.diff({VMono{}, w})) b_add(acc, B.diff(t));
    if (!acc.empty()) d2.fail(B.str(w) + " -> " + B.str(acc));
  }

  std::vector<std::vector<BTerm>> seqs;
  sequences(B, c.maxInputs, c.maxLen, [&](const std::vector<BTerm>& s) { seqs.push_back(s); });

  Check rel{"A-infinity relations"};
  Check grad{"grading and Alexander laws on nonzero operations"};
  Check nz{"nonzero higher operations seen"};
  std::mutex mx;
  std::vector<long long> nonzero(c.maxInputs + 1, 0);
  parallel_for(seqs.size(), [&](size_t idx, int) {
    auto& s = seqs[idx];
    BElem out = B.mu(s);
    bool gok = grading_ok(B, s, out, 0, Alex{});
    BElem rs = s.size() >= 2 ? B.relation_sum(s) : BElem{};
    std::lock_guard<std::mutex> lk(mx);
    ++grad.checked;
    if (!out.empty()) ++nonzero[s.size()];
    if (!gok) {
      std::string d;
      for (auto& t : s) d += B.str(t) + ",";
      grad.fail("mu(" + d + ") = " + B.str(out));
    }
    if (s.size() >= 2) {
      ++rel.checked;
      if (!rs.empty()) {
        std::string d;
        for (auto& t : s) d += B.str(t) + ",";
        rel.fail("(" + d + ") -> " + B.str(rs));
      }
    }
  });
  nz.data["by_arity"] = nonzero;
  for (int k = 3; k <= std::min(c.maxInputs, c.N); ++k)
    if (!nonzero[k]) nz.fail("no nonzero mu_" + std::to_string(k));
  nz.checked = c.maxInputs;

  // e_0 curvature: dU_0 = 0, centrality, and the weighted relations
  Check wrel{"weighted (e_0) relations"};
  {
    ++wrel.checked;
    BElem dU;
    for (auto& t : B.u0()) b_add(dU, B.diff(t));
    if (!dU.empty()) wrel.fail("dU0 = " + B.str(dU));
    Alex a0 = g.aVar(0);
    for (auto& t : B.u0())
      if (B.maslov(t) != g.mW(0) - 2 || B.alex(t) != a0) wrel.fail("U0 grading " + B.str(t));
    std::vector<std::vector<BTerm>> short_seqs;
    sequences(B, std::max(1, c.maxInputs - 1), std::max(0, c.maxLen - c.N),
              [&](const std::vector<BTerm>& s) { short_seqs.push_back(s); });
    parallel_for(short_seqs.size(), [&](size_t idx, int) {
      auto rs = B.relation_sum_weighted(short_seqs[idx], 1);
      std::lock_guard<std::mutex> lk(mx);
      ++wrel.checked;
      if (!rs.empty()) {
        std::string d;
        for (auto& t : short_seqs[idx]) d += B.str(t) + ",";
        wrel.fail("e0 (" + d + ") -> " + B.str(rs));
      }
    });
  }

  Check ex{"differential example"};
  if (c.N == 3) {
    ++ex.checked;
    BWord w = B.word(1, 4, false, false);  // S1R1S3R3S2R2S1
    BElem want;
    VMono a, b;
    a.e[1] = a.e[3] = a.e[4] = 1;
    b.e[2] = b.e[3] = b.e[4] = 1;
    want.push_back({a, B.word(1, 1, true, false)});
    want.push_back({b, B.word(1, 1, false, true)});
    cancel_pairs(want);
    BElem got = B.diff({VMono{}, w});
    if (got != want) ex.fail(B.str(w) + " -> " + B.str(got));
  }

  r.checks = {d2, rel, grad, nz, wrel};
  if (ex.checked) r.checks.push_back(ex);
  r.seconds = sw.seconds();
  return r;
}

}  // namespace ainfty
