#include <functional>
#include <mutex>

#include "ainfty/algebra_a.hpp"
#include "ainfty/parallel.hpp"
#include "ainfty/verify.hpp"

namespace ainfty {

namespace {

std::mt19937_64 rng_for(uint64_t seed, uint64_t index) {
  std::seed_seq ss{uint32_t(seed), uint32_t(seed >> 32), uint32_t(index), uint32_t(index >> 32)};
  return std::mt19937_64(ss);
}

bool grading_ok(const AlgebraA& A, const Weight& w, const std::vector<ATerm>& in, const AElem& out) {
  const Grading& g = A.grading();
  int m = g.m(w) + int(in.size()) - 2;
  Alex a = g.a(w);
  for (auto& t : in) {
    m += A.maslov(t);
    a = a + A.alex(t);
  }
  for (auto& t : out)
    if (A.maslov(t) != m || A.alex(t) != a) return false;
  return true;
}

struct Witness {
  Weight w;
  std::vector<ATerm> seq;
  int family;  // 0 pull, 1 push, 2 split, 3 random
};

// mutation of an accepted op into a relation witness
std::optional<Witness> mutate(const AlgebraA& A, std::mt19937_64& rng, const AOp& op, int family,
                              int maxInputs, int maxWeight) {
  int N = A.N();
  Witness wt{op.w, op.seq, family};
  int n = int(op.seq.size());
  auto pick = [&](int hi) { return std::uniform_int_distribution<int>(0, hi - 1)(rng); };
  if (family == 0) {
    std::vector<int> c;
    for (int a = 0; a < n; ++a)
      if (op.seq[a].p >= 2) c.push_back(a);
    if (c.empty()) return std::nullopt;
    int a = c[pick(int(c.size()))];
    const ATerm& t = op.seq[a];
    int cutp = 1 + pick(t.p - 1);
    ATerm x = t, y = t;
    x.p = uint16_t(cutp);
    y.p = uint16_t(t.p - cutp);
    if (t.kind == ATerm::Chord) y.i = uint8_t(A.grading().idx(t.i + cutp));
    wt.seq[a] = x;
    wt.seq.insert(wt.seq.begin() + a + 1, y);
  } else if (family == 1) {
    std::vector<int> c;
    for (int a = 0; a < n; ++a) {
      const ATerm& t = op.seq[a];
      if ((t.kind == ATerm::UPow && t.p == 1) || (t.kind == ATerm::Chord && t.p == N)) c.push_back(a);
    }
    if (c.empty() || n < 3) return std::nullopt;
    int a = c[pick(int(c.size()))];
    const ATerm& t = op.seq[a];
    wt.w.e[t.kind == ATerm::UPow ? t.i : N + 1]++;
    wt.seq.erase(wt.seq.begin() + a);
  } else if (family == 2) {
    int a = pick(n);
    AGenOpts o;
    o.maxVertices = 1;
    o.maxWeight = std::max(0, maxWeight - op.w.total());
    o.cycles = false;
    o.extension = 1 + pick(2);
    o.alpha = op.seq[a];
    o.alpha->v = VMono{};
    AOp inner = random_op(A, rng, o);
    if (inner.seq.empty()) return std::nullopt;
    wt.w = op.w + inner.w;
    wt.seq.erase(wt.seq.begin() + a);
    wt.seq.insert(wt.seq.begin() + a, inner.seq.begin(), inner.seq.end());
  } else {
    // random idempotent-consistent sequence of short elements
    int len = 2 + pick(std::min(maxInputs, 8) - 1);
    wt.seq.clear();
    int idem = 1 + pick(N);
    for (int k = 0; k < len; ++k) {
      ATerm t = pick(2) ? A.U(idem, 1 + pick(2)) : A.s(idem, 1 + pick(N + 1));
      wt.seq.push_back(t);
      idem = A.final(t);
    }
    wt.w = Weight{};
    int k = pick(maxWeight + 1);
    for (int q = 0; q < k; ++q) wt.w.e[1 + pick(N + 1)]++;
  }
  if (int(wt.seq.size()) > maxInputs || wt.w.total() > maxWeight) return std::nullopt;
  return wt;
}

}  // namespace

std::vector<AOp> a_census(const AlgebraA& A, int j, long long* checked) {
  int N = A.N();
  int n = j * (2 * N - 2) + 2;
  std::vector<AOp> out;
  std::vector<ATerm> seq;
  std::function<void(int)> rec = [&](int idem) {
    if (int(seq.size()) == n) {
      if (checked) ++*checked;
      AElem o = A.mu(Weight{}, seq);
      if (!o.empty()) out.push_back({Weight{}, seq, o});
      return;
    }
    for (ATerm t : {A.U(idem), A.s(idem, 1)}) {
      seq.push_back(t);
      rec(A.final(t));
      seq.pop_back();
    }
  };
  for (int i = 1; i <= N; ++i) rec(i);
  return out;
}

Check a_census_check(const AlgebraA& A) {
  Check census{"basic corolla census"};
  int twoN = 2 * A.N();
  auto ops = a_census(A, 1, &census.checked);
  json list = json::array();
  for (auto& op : ops) {
    bool rotation = true;
    for (int k = 0; k + 1 < twoN; ++k) {
      auto l1 = A.letters(op.seq[k])[0], l2 = A.letters(op.seq[k + 1])[0];
      if (l2 != (l1 + 1) % twoN) rotation = false;
    }
    if (!rotation) census.fail("unexpected " + A.str(op.seq, true));
    if (op.out.size() != 1 || op.out[0].v != VMono::unit(0) || op.out[0].kind != ATerm::Idem)
      census.fail(A.str(op.seq, true) + " = " + A.str(op.out));
    list.push_back(A.str(op.seq, true) + " -> " + A.str(op.out));
  }
  census.data["nonzero"] = list;
  if (int(ops.size()) != twoN)
    census.fail("expected " + std::to_string(twoN) + " nonzero, got " + std::to_string(ops.size()));
  return census;
}

Report verify_algebra_a(const Caps& c) {
  Stopwatch sw;
  Report r;
  r.command = "verify algebra-a";
  r.params = {{"n", c.N}, {"max_weight", c.maxWeight}, {"samples", c.samples}, {"seed", c.seed}};
  AlgebraA A(c.N);
  A.corruptChord = c.corruptChord;
  int N = c.N;
  int maxInputs = 2 * (2 * N - 2) + 3;
  std::mutex mx;

  Check census = a_census_check(A);

  Check gen{"generated operations recognised"};
  Check uniq{"graph multiplicity (value is the parity of the graph count)"};
  long long multi = 0;
  Check grad{"grading and Alexander laws on accepted operations"};
  Check rel{"A-infinity relations on witnesses and random sequences"};
  long long famCount[4] = {0, 0, 0, 0};
  long long famNontrivial[4] = {0, 0, 0, 0};
  long long nonzeroOps = 0;

  parallel_for(size_t(c.samples), [&](size_t idx, int) {
    auto rng = rng_for(c.seed, idx);
    AGenOpts o;
    o.maxVertices = std::uniform_int_distribution<int>(1, N == 3 ? 3 : 2)(rng);
    o.maxWeight = c.maxWeight;
    o.maxInputs = maxInputs;
    AOp op = random_op(A, rng, o);
    if (op.seq.empty() || op.w.total() > c.maxWeight) return;
    int parses = 0;
    AElem got = A.mu(op.w, op.seq, &parses);
    bool ok = got == (parses % 2 ? op.out : AElem{});
    bool gok = grading_ok(A, op.w, op.seq, got);
    int fam = int(idx % 4);
    auto wt = mutate(A, rng, op, fam, maxInputs, c.maxWeight);
    if (!wt && fam != 3) wt = mutate(A, rng, op, 3, maxInputs, c.maxWeight);
    AElem rs;
    long terms = 0;
    int wparses = 0;
    AElem wout;
    if (wt) {
      rs = A.relation_sum(wt->w, wt->seq, &terms);
      wout = A.mu(wt->w, wt->seq, &wparses);
    }
    std::lock_guard<std::mutex> lk(mx);
    ++gen.checked;
    ++grad.checked;
    ++uniq.checked;
    if (!ok) gen.fail(weight_str(op.w, N) + " " + A.str(op.seq, true) + " got " + A.str(got) + " want " + A.str(op.out));
    if (!gok) grad.fail(A.str(op.seq, true));
    if (parses > 1 && uniq.examples.size() < 4) uniq.examples.push_back(A.str(op.seq, true) + " graphs=" + std::to_string(parses));
    if (parses > 1) ++multi;
    if (parses < 1) uniq.fail(A.str(op.seq, true) + " generated graph not found");
    if (wt) {
      ++rel.checked;
      ++famCount[wt->family];
      if (terms) ++famNontrivial[wt->family];
      if (!wout.empty()) {
        ++nonzeroOps;
        ++grad.checked;
        if (!grading_ok(A, wt->w, wt->seq, wout)) grad.fail(A.str(wt->seq, true));
      }
      if (!rs.empty())
        rel.fail(weight_str(wt->w, N) + " " + A.str(wt->seq, true) + " -> " + A.str(rs));
    }
  });
  const char* names[4] = {"pull", "push", "split", "random"};
  for (int f = 0; f < 4; ++f) {
    rel.data[names[f]] = {{"checked", famCount[f]}, {"nontrivial", famNontrivial[f]}};
    if (f < 3 && famNontrivial[f] == 0) rel.fail(std::string("no nontrivial ") + names[f] + " witnesses");
  }
  grad.data["nonzero_mutated"] = nonzeroOps;
  uniq.data["trees_with_several_graphs"] = multi;

  Check ex{"fixed examples"};
  if (N == 3) {
    auto want = [&](const Weight& w, std::vector<ATerm> s, int j) {
      ++ex.checked;
      AElem o = A.mu(w, s);
      if (o.size() != 1 || o[0].v.e[0] != j) ex.fail(weight_str(w, N) + " " + A.str(s, true) + " = " + A.str(o));
    };
    Weight e12, e4;
    e12.e[1] = e12.e[2] = 1;
    e4.e[4] = 1;
    want(e12, {A.U(3), A.s(3, 3)}, 1);
    want(Weight{}, {A.U(1, 2), A.s(1, 1), A.U(2), A.s(2, 1), A.U(3), A.s(3, 2), A.U(2), A.s(2, 1), A.U(3), A.s(3, 1)}, 2);
    // one cycle: twelve inputs, three vertices
    AGenOpts o;
    std::mt19937_64 g(7);
    bool found = false;
    for (int t = 0; t < 2000 && !found; ++t) {
      o.maxVertices = 3;
      o.maxWeight = 1;
      o.extension = 0;
      AOp op = random_op(A, g, o);
      if (op.w == e4 && op.seq.size() == 12) {
        found = true;
        want(e4, op.seq, 3);
        ex.data["cycle_example"] = A.str(op.seq, true);
      }
    }
    if (!found) ex.fail("no cycle operation generated");
  }

  r.checks = {census, gen, uniq, grad, rel};
  if (ex.checked) r.checks.push_back(ex);
  r.seconds = sw.seconds();
  return r;
}

}  // namespace ainfty
