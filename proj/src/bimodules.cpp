#include "ainfty/bimodules.hpp"

#include <functional>
#include <set>
#include <unordered_set>

#include "ainfty/gf2.hpp"

namespace ainfty {

std::vector<int> b_letters(const AlgebraB& B, const BWord& w) {
  const Grading& g = B.grading();
  std::vector<int> l;
  if (w.rrho) l.push_back(2 * (w.start - 1));
  for (int p = 0; p < w.len; ++p) {
    l.push_back(2 * (g.idx(w.start + p) - 1) + 1);
    if (p + 1 < w.len) l.push_back(2 * (g.idx(w.start + p + 1) - 1));
  }
  if (w.lrho) l.push_back(2 * (g.idx(w.start + w.len) - 1));
  return l;
}

int BimoduleY::maslov_defect(const Weight& w, const std::vector<BTerm>& bs, const std::vector<ATerm>& as) const {
  int m = A_.grading().m(w) + int(bs.size()) + int(as.size()) - 1;
  for (auto& b : bs) m += B_.maslov(b);
  for (auto& a : as) m += A_.maslov(a);
  return m;
}

bool BimoduleY::alexander_even(const Weight& w, const std::vector<BTerm>& bs, const std::vector<ATerm>& as) const {
  Alex a = A_.grading().a(w);
  for (auto& b : bs) a = a + B_.alex(b);
  for (auto& x : as) a = a + A_.alex(x);
  for (int v : a)
    if (v & 1) return false;
  return true;
}

namespace {

constexpr int kVCode = 100;  // V_c as a basic letter: kVCode + c

struct MatchDP {
  int N;
  const std::vector<int>& eta;
  const std::vector<int>& tau;
  std::unordered_set<uint64_t> dead;

  // rotation of (U_1, s_1, ..., U_N, s_N) starting at eta[i]
  bool eta_cycle(size_t i) const {
    size_t L = 2 * N;
    if (i + L > eta.size()) return false;
    for (size_t k = 1; k < L; ++k)
      if (eta[i] >= kVCode || eta[i + k] != (eta[i] + int(k)) % int(L)) return false;
    return true;
  }
  // rotation of (sigma_1, ..., sigma_N)
  bool tau_cycle(size_t j) const {
    if (j + N > tau.size()) return false;
    if (tau[j] >= kVCode || tau[j] % 2 == 0) return false;
    for (int k = 1; k < N; ++k)
      if (tau[j + k] != (tau[j] + 2 * k) % (2 * N)) return false;
    return true;
  }

  // E[0]: e_0 left; E[c]: e_c left, 1 <= c <= N+1
  bool run(size_t i, size_t j, std::array<int, kSlots>& E) {
    if (i == eta.size() && j == tau.size()) {
      for (int c = 0; c <= N + 1; ++c)
        if (E[c]) return false;
      return true;
    }
    uint64_t key = i | (uint64_t(j) << 10);
    for (int c = 0; c <= N + 1; ++c) key |= uint64_t(E[c]) << (20 + 5 * c);
    if (dead.count(key)) return false;
    if (i < eta.size() && j < tau.size() && eta[i] == tau[j] && eta[i] < kVCode && run(i + 1, j + 1, E))
      return true;
    if (i < eta.size() && eta[i] == kVCode) {
      if (E[0] == 0) return remember(key);
      --E[0];
      bool ok = run(i + 1, j, E);
      ++E[0];
      return ok || remember(key);
    }
    if (j < tau.size() && tau[j] >= kVCode) {
      int c = tau[j] - kVCode;
      if (E[c] == 0) return remember(key);
      --E[c];
      bool ok = run(i, j + 1, E);
      ++E[c];
      return ok || remember(key);
    }
    if (j < tau.size() && tau[j] % 2 == 0) {
      int c = tau[j] / 2 + 1;
      if (E[c] > 0) {
        --E[c];
        bool ok = run(i, j + 1, E);
        ++E[c];
        if (ok) return true;
      }
    }
    if (E[0] > 0 && eta_cycle(i)) {
      --E[0];
      bool ok = run(i + 2 * N, j, E);
      ++E[0];
      if (ok) return true;
    }
    if (E[N + 1] > 0 && tau_cycle(j)) {
      --E[N + 1];
      bool ok = run(i, j + N, E);
      ++E[N + 1];
      if (ok) return true;
    }
    return remember(key);
  }
  bool remember(uint64_t key) {
    dead.insert(key);
    return false;
  }
};

}  // namespace

bool BimoduleY::admits_matching(const Weight& w, const std::vector<BTerm>& bs, const std::vector<ATerm>& as) const {
  std::array<int, kSlots> E{};
  for (int c = 0; c <= N_ + 1; ++c) E[c] = w.e[c];
  auto vcodes = [&](const VMono& v) {
    std::vector<int> vs;
    for (int c = 0; c <= N_ + 1; ++c)
      for (int k = 0; k < v.e[c]; ++k) vs.push_back(kVCode + c);
    return vs;
  };
  std::vector<int> eta;
  for (auto& a : as) {
    for (int c = 1; c <= N_ + 1; ++c)
      if (a.v.e[c]) return false;  // would have to meet an A-side weight
    auto vs = vcodes(a.v);
    auto l = A_.letters(a);
    eta.insert(eta.end(), vs.begin(), vs.end());
    eta.insert(eta.end(), l.begin(), l.end());
  }
  // B-side V letters sit at an end of their word; choices[i]: bit 0 front, bit 1 back
  std::vector<int> choice(bs.size(), 1);
  std::vector<int> opts(bs.size(), 0);
  for (size_t i = 0; i < bs.size(); ++i) {
    const BTerm& b = bs[i];
    if (b.v.e[0]) return false;
    if (b.v.zero()) continue;
    // an end where the matching rho_c could have stood
    bool front = true, back = true;
    for (int c = 1; c <= N_; ++c)
      if (b.v.e[c]) {
        front = front && !b.w.rrho && b.w.start == c;
        back = back && !b.w.lrho && !b.w.isBareRho() && B_.final(b.w) == c;
      }
    int o = (front ? 1 : 0) | (back ? 2 : 0);
    if (!o) o = 3;
    opts[i] = o;
    choice[i] = (o & 1) ? 1 : 2;
  }
  while (true) {
    std::vector<int> tau;
    for (size_t i = 0; i < bs.size(); ++i) {
      auto l = b_letters(B_, bs[i].w);
      auto vs = vcodes(bs[i].v);
      if (choice[i] == 1) tau.insert(tau.end(), vs.begin(), vs.end());
      tau.insert(tau.end(), l.begin(), l.end());
      if (choice[i] == 2) tau.insert(tau.end(), vs.begin(), vs.end());
    }
    MatchDP dp{N_, eta, tau, {}};
    auto E2 = E;
    if (dp.run(0, 0, E2)) return true;
    size_t i = 0;
    for (; i < bs.size(); ++i) {
      if (opts[i] == 3 && choice[i] == 1) {
        choice[i] = 2;
        break;
      }
      if (opts[i] == 3) choice[i] = 1;
    }
    if (i == bs.size()) return false;
  }
}

std::optional<int> BimoduleY::recognize(const Weight& w, const std::vector<BTerm>& bs, int x,
                                        const std::vector<ATerm>& as) const {
  int ya = x, yb = x;
  for (auto& a : as) {
    if (A_.initial(a) != ya) return std::nullopt;
    ya = A_.final(a);
  }
  for (auto& b : bs) {
    if (B_.initial(b.w) != yb) return std::nullopt;
    yb = B_.final(b.w);
  }
  if (ya != yb && !as.empty() && !bs.empty()) return std::nullopt;
  int y = as.empty() ? yb : ya;
  if (maslov_defect(w, bs, as) != 0) return std::nullopt;
  if (!alexander_even(w, bs, as)) return std::nullopt;
  if (!admits_matching(w, bs, as)) return std::nullopt;
  return y;
}

static std::vector<Weight> sub_weights(const Weight& w) {
  std::vector<Weight> out{Weight{}};
  for (int c = 0; c < kSlots; ++c) {
    size_t n = out.size();
    for (int k = 1; k <= w.e[c]; ++k)
      for (size_t i = 0; i < n; ++i) {
        Weight v = out[i];
        v.e[c] = uint8_t(k);
        out.push_back(v);
      }
  }
  return out;
}

std::vector<int> BimoduleY::relation_sum(const Weight& w, const std::vector<BTerm>& bs, int x,
                                         const std::vector<ATerm>& as, long* terms) const {
  std::vector<int> out;
  long cnt = 0;
  auto hit = [&](std::optional<int> y) {
    if (!y) return;
    out.push_back(*y);
    ++cnt;
  };
  size_t n = as.size(), k = bs.size();
  auto subs = sub_weights(w);

  // A side
  for (size_t p = 0; p <= n; ++p)
    for (size_t q = p; q <= n; ++q)
      for (auto& w1 : subs) {
        if (w1.e[0]) continue;
        if (p == q && w1.zero()) continue;
        std::vector<ATerm> blk(as.begin() + p, as.begin() + q);
        for (auto& t : A_.mu(w1, blk)) {
          std::vector<ATerm> s(as.begin(), as.begin() + p);
          s.push_back(t);
          s.insert(s.end(), as.begin() + q, as.end());
          hit(recognize(w - w1, bs, x, s));
        }
      }
  // B side
  for (size_t p = 0; p <= k; ++p)
    for (size_t q = p; q <= k; ++q) {
      BElem r;
      Weight rest = w;
      if (p == q) {
        if (!w.e[0]) continue;
        r = B_.u0();
        rest.e[0]--;
      } else {
        r = B_.mu(std::vector<BTerm>(bs.begin() + p, bs.begin() + q));
      }
      for (auto& t : r) {
        std::vector<BTerm> s(bs.begin(), bs.begin() + p);
        s.push_back(t);
        s.insert(s.end(), bs.begin() + q, bs.end());
        hit(recognize(rest, s, x, as));
      }
    }
  // splits
  for (size_t j2 = 0; j2 <= k; ++j2)
    for (size_t j = 0; j <= n; ++j) {
      std::vector<BTerm> b1(bs.begin(), bs.begin() + j2), b2(bs.begin() + j2, bs.end());
      std::vector<ATerm> a1(as.begin(), as.begin() + j), a2(as.begin() + j, as.end());
      for (auto& w1 : subs) {
        auto y1 = recognize(w1, b1, x, a1);
        if (!y1) continue;
        hit(recognize(w - w1, b2, *y1, a2));
      }
    }
  cancel_pairs(out);
  if (terms) *terms = cnt;
  return out;
}

std::string BimoduleY::str(const Weight& w, const std::vector<BTerm>& bs, int x, const std::vector<ATerm>& as) const {
  std::string s = "m^" + weight_str(w, N_) + "(";
  for (size_t i = bs.size(); i-- > 0;) s += B_.str(bs[i]) + ", ";
  s += "{" + std::to_string(x) + "}";
  for (auto& a : as) s += ", " + A_.str(a);
  return s + ")";
}

// ---- DD bimodule

std::vector<DDStep> dd_delta1(const AlgebraA& A, const AlgebraB& B, int i) {
  return {{A.U(i), {VMono{}, B.rho(i)}, i}, {A.s(i, 1), {VMono{}, B.sigma(i)}, A.grading().idx(i + 1)}};
}

std::vector<std::vector<DDStep>> dd_chains(const AlgebraA& A, const AlgebraB& B, int i, int n) {
  std::vector<std::vector<DDStep>> out{{}};
  for (int k = 0; k < n; ++k) {
    std::vector<std::vector<DDStep>> nx;
    for (auto& c : out) {
      int g = c.empty() ? i : c.back().next;
      for (auto& st : dd_delta1(A, B, g)) {
        nx.push_back(c);
        nx.back().push_back(st);
      }
    }
    out.swap(nx);
  }
  return out;
}

DDCensus dd_census(const Diagonal& d, const AlgebraA& A, const AlgebraB& B, int maxInputs, int maxDegree) {
  int N = A.N();
  const Grading& g = A.grading();
  DDCensus res;
  std::map<std::pair<ABTerm, int>, DDCensusEntry> census;
  ABElem total;
  auto ws = weights_upto(0, N + 1, maxDegree / 2);
  for (int j = 1; j <= N; ++j)
    for (int n = 0; n <= maxInputs; ++n)
      for (auto& ch : dd_chains(A, B, j, n)) {
        std::vector<ABInput> in;
        int m0 = n - 2;
        Alex a0{};
        for (auto& st : ch) {
          in.push_back({st.a, st.b});
          m0 += A.maslov(st.a) + B.maslov(st.b);
          a0 = a0 + A.alex(st.a) + B.alex(st.b);
        }
        int last = ch.empty() ? j : ch.back().next;
        for (auto& w : ws) {
          if (n + 2 * w.total() > maxDegree) continue;
          if (!(n == 1 && w.zero()) && !d.has(n, w)) continue;
          Alex aw = g.a(w);
          for (auto& [pr, v] : tensor_mu_terms(d, A, B, w, in)) {
            ++res.evaluations;
            for (auto& t : v) {
              int m = A.maslov(t.a) + B.maslov({VMono{}, t.b});
              if (m != m0) {
                ++res.gradingFailures;
                if (res.gradingExamples.size() < 8) res.gradingExamples.push_back("maslov: " + ab_str(A, B, t));
              }
              if (A.alex(t.a) + B.alex({VMono{}, t.b}) != a0 + aw + aw) {
                ++res.alexFailures;
                if (res.gradingExamples.size() < 8) res.gradingExamples.push_back("alexander: " + ab_str(A, B, t));
              }
              // the X generator is read off from the idempotents
              if (A.initial(t.a) != j || B.initial(t.b) != j || A.final(t.a) != last || B.final(t.b) != last) {
                ++res.offIdempotent;
                continue;
              }
              auto& e = census[{t, last}];
              e.out = t;
              e.gen = last;
              ++e.count;
              if (e.sources.size() < 4)
                e.sources.push_back("n=" + std::to_string(n) + " w=" + weight_str(w, N) + " " + pair_str(pr, N));
              total.push_back(t);
            }
          }
        }
      }
  for (auto& [k, e] : census) res.entries.push_back(e);
  cancel_pairs(total);
  res.sumZero = total.empty();
  return res;
}

std::vector<std::pair<ABTerm, int>> dd_expected(const AlgebraA& A, const AlgebraB& B) {
  int N = A.N();
  std::vector<std::pair<ABTerm, int>> out;
  for (int j = 1; j <= N; ++j) {
    ATerm u = A.U(j);
    u.v = VMono::unit(j);
    out.push_back({{u, B.idem(j)}, j});
    ATerm s = A.s(j, N);
    s.v = VMono::unit(N + 1);
    out.push_back({{s, B.idem(j)}, j});
    ATerm i = A.idem(j);
    i.v = VMono::unit(0);
    for (auto& b : B.u0(j)) {
      ATerm ii = i;
      ii.v += b.v;
      out.push_back({{ii, b.w}, j});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---- box tensor products

AElem box_xy(const BimoduleY& Y, const Weight& wa, const std::vector<ATerm>& in, const BoxCaps& c) {
  const AlgebraA& A = Y.A();
  const AlgebraB& B = Y.B();
  int N = A.N();
  AElem out;
  for (int g = 1; g <= N; ++g)
    for (int i = 0; i <= c.maxChain; ++i)
      for (auto& ch : dd_chains(A, B, g, i)) {
        std::vector<BTerm> bs;
        std::optional<ATerm> prod = A.idem(g);
        for (auto& st : ch) {
          bs.push_back(st.b);
          if (prod) prod = A.mul(*prod, st.a);
        }
        if (!prod) continue;
        int h = ch.empty() ? g : ch.back().next;
        for (int c0 = 0; c0 <= c.maxContracted; ++c0) {
          Weight w = wa;
          w.e[0] = uint8_t(c0);
          auto y = Y.recognize(w, bs, g, in);
          if (!y || *y != h) continue;
          ATerm t = *prod;
          t.v.e[0] = uint8_t(t.v.e[0] + c0);
          out.push_back(t);
        }
      }
  cancel_pairs(out);
  return out;
}

BElem box_yx(const BimoduleY& Y, int w0, const std::vector<BTerm>& in, const BoxCaps& c) {
  const AlgebraA& A = Y.A();
  const AlgebraB& B = Y.B();
  int N = A.N();
  auto contracted = weights_upto(1, N + 1, c.maxContracted);
  BElem out;
  for (int g = 1; g <= N; ++g)
    for (int i = 0; i <= c.maxChain; ++i)
      for (auto& ch : dd_chains(A, B, g, i)) {
        std::vector<ATerm> as;
        std::optional<BWord> prod = B.idem(g);
        for (auto& st : ch) {
          as.push_back(st.a);
          if (prod) prod = B.mul(*prod, st.b.w);
        }
        if (!prod) continue;
        int h = ch.empty() ? g : ch.back().next;
        for (auto& u : contracted) {
          Weight w = u;
          w.e[0] = uint8_t(w0);
          auto y = Y.recognize(w, in, g, as);
          if (!y || *y != h) continue;
          BTerm t{VMono{}, *prod};
          for (int k = 1; k <= N + 1; ++k) t.v.e[k] = u.e[k];
          out.push_back(t);
        }
      }
  cancel_pairs(out);
  return out;
}

// ---- element enumeration

std::vector<ATerm> a_terms(const AlgebraA& A, int maxLetters) {
  std::vector<ATerm> out;
  for (int i = 1; i <= A.N(); ++i) {
    out.push_back(A.idem(i));
    for (int p = 1; p <= maxLetters; ++p) {
      out.push_back(A.U(i, p));
      out.push_back(A.s(i, p));
    }
  }
  return out;
}

std::vector<BTerm> b_terms(const AlgebraB& B, int maxLen) {
  std::vector<BTerm> out;
  for (auto& w : B.all_words(maxLen)) out.push_back({VMono{}, w});
  return out;
}

namespace {

bool alex_leq(const Alex& a, const Alex& b) {
  for (int k = 0; k < kAlex; ++k)
    if (a[k] > b[k]) return false;
  return true;
}

Alex alex_sub(Alex a, const Alex& b) {
  for (int k = 0; k < kAlex; ++k) a[k] -= b[k];
  return a;
}

// all V monomials with Alexander grading r
std::vector<VMono> v_monos_with(const Grading& g, const Alex& r) {
  int N = g.N;
  std::vector<VMono> out;
  for (int k = 2 * N; k < kAlex; ++k)
    if (r[k]) return out;
  int c0max = *std::min_element(r.begin(), r.begin() + 2 * N);
  for (int c0 = 0; c0 <= c0max; ++c0) {
    Alex r1 = r;
    for (int k = 0; k < 2 * N; ++k) r1[k] -= c0;
    int cl = 1 << 20;
    for (int k = 1; k < 2 * N; k += 2) cl = std::min(cl, r1[k]);
    // even slots must be covered by V_{N+1} exactly
    bool even = true;
    for (int k = 1; k < 2 * N; k += 2)
      if (r1[k] != r1[1]) even = false;
    if (!even) continue;
    VMono v;
    v.e[0] = uint8_t(c0);
    v.e[N + 1] = uint8_t(cl);
    for (int i = 1; i <= N; ++i) v.e[i] = uint8_t(r1[2 * i - 2]);
    out.push_back(v);
  }
  return out;
}

}  // namespace

std::vector<ATerm> a_terms_with(const AlgebraA& A, const Alex& a, int from, int to) {
  const Grading& g = A.grading();
  int tot = 0;
  for (int v : a) tot += v;
  std::vector<ATerm> bodies;
  if (from == to) bodies.push_back(A.idem(from));
  for (int p = 1; p <= tot; ++p) {
    if (from == to) bodies.push_back(A.U(from, p));
    ATerm s = A.s(from, p);
    if (A.final(s) == to) bodies.push_back(s);
  }
  std::vector<ATerm> out;
  for (auto& b : bodies) {
    Alex ab = A.alex(b);
    if (!alex_leq(ab, a)) continue;
    for (auto& v : v_monos_with(g, alex_sub(a, ab))) {
      ATerm t = b;
      t.v = v;
      out.push_back(t);
    }
  }
  return out;
}

std::vector<BTerm> b_terms_with(const AlgebraB& B, const Alex& a, int from, int to) {
  const Grading& g = B.grading();
  int tot = 0;
  for (int v : a) tot += v;
  std::vector<BTerm> out;
  for (auto& w : B.all_words(tot)) {
    if (B.initial(w) != from || B.final(w) != to) continue;
    Alex aw = B.alex({VMono{}, w});
    if (!alex_leq(aw, a)) continue;
    for (auto& v : v_monos_with(g, alex_sub(a, aw))) out.push_back({v, w});
  }
  return out;
}

namespace {

struct Piece {
  Alex a{};
  int from = 1, to = 1;
  auto operator<=>(const Piece&) const = default;
};

// chain complex of B in one Alexander/idempotent piece, graded by Maslov
struct PieceComplex {
  std::map<int, std::vector<BTerm>> byM;
  std::map<BTerm, int> index;  // position within its Maslov degree

  PieceComplex(const AlgebraB& B, const Piece& p) {
    for (auto& t : b_terms_with(B, p.a, p.from, p.to)) byM[B.maslov(t)].push_back(t);
    for (auto& [m, v] : byM) {
      std::sort(v.begin(), v.end());
      for (size_t i = 0; i < v.size(); ++i) index[v[i]] = int(i);
    }
  }
  SparseVec coords(const BElem& e) const {
    SparseVec r;
    for (auto& t : e) r.push_back(index.at(t));
    std::sort(r.begin(), r.end());
    return r;
  }
  std::vector<SparseVec> boundaries(const AlgebraB& B, int m) const {
    std::vector<SparseVec> out;
    auto it = byM.find(m + 1);
    if (it == byM.end()) return out;
    for (auto& t : it->second) out.push_back(coords(B.diff(t)));
    return out;
  }
  // basis of cycles in degree m, as elements
  std::vector<BElem> cycles(const AlgebraB& B, int m) const {
    std::vector<BElem> out;
    auto it = byM.find(m);
    if (it == byM.end()) return out;
    const auto& terms = it->second;
    // each dependent column gives a kernel vector
    ColumnBasis fresh(true);
    std::vector<SparseVec> kernel;
    for (size_t i = 0; i < terms.size(); ++i) {
      SparseVec col;
      for (auto& x : B.diff(terms[i])) col.push_back(index.at(x));
      std::sort(col.begin(), col.end());
      auto sol = fresh.solve(col);
      if (sol) {
        SparseVec k = *sol;
        k.push_back(int(i));
        std::sort(k.begin(), k.end());
        kernel.push_back(k);
      }
      fresh.add(col);
    }
    for (auto& k : kernel) {
      BElem e;
      for (int i : k) e.push_back(terms[i]);
      std::sort(e.begin(), e.end());
      out.push_back(e);
    }
    return out;
  }
  int dim(int m) const {
    auto it = byM.find(m);
    return it == byM.end() ? 0 : int(it->second.size());
  }
};

int rank_of(const std::vector<SparseVec>& cols) {
  ColumnBasis cb;
  for (auto& c : cols) cb.add(c);
  return cb.rank();
}

}  // namespace

int b_homology_dim(const AlgebraB& B, const Alex& a, int from, int to, int maslov) {
  PieceComplex pc(B, {a, from, to});
  int z = int(pc.cycles(B, maslov).size());
  return z - rank_of(pc.boundaries(B, maslov));
}

std::vector<BClass> b_homology_generators(const AlgebraB& B, int maxLen) {
  int N = B.N();
  std::set<std::pair<Piece, int>> pieces;
  std::map<std::pair<Piece, int>, BTerm> rep;
  for (auto& w : B.all_words(maxLen)) {
    if (w.isIdem()) continue;
    BTerm t{VMono{}, w};
    std::pair<Piece, int> k{{B.alex(t), B.initial(w), B.final(w)}, B.maslov(t)};
    if (pieces.insert(k).second) rep[k] = t;
  }
  std::vector<BClass> out;
  std::map<Piece, PieceComplex> cache;
  auto cx = [&](const Piece& p) -> const PieceComplex& {
    auto it = cache.find(p);
    if (it == cache.end()) it = cache.emplace(p, PieceComplex(B, p)).first;
    return it->second;
  };
  for (auto& [p, m] : pieces) {
    const PieceComplex& pc = cx(p);
    int z = int(pc.cycles(B, m).size());
    auto bd = pc.boundaries(B, m);
    int rb = rank_of(bd);
    int h = z - rb;
    if (h == 0) continue;
    // products of cycles from two nontrivial pieces
    std::vector<SparseVec> span = bd;
    std::vector<Alex> splits{Alex{}};
    for (int k = 0; k < 2 * N; ++k) {
      std::vector<Alex> nx;
      for (auto& s : splits)
        for (int c = 0; c <= p.a[k]; ++c) {
          Alex t = s;
          t[k] = c;
          nx.push_back(t);
        }
      splits.swap(nx);
    }
    for (auto& a1 : splits) {
      if (a1 == Alex{} || a1 == p.a) continue;
      Alex a2 = alex_sub(p.a, a1);
      for (int mid = 1; mid <= N; ++mid) {
        const PieceComplex& c1 = cx({a1, p.from, mid});
        const PieceComplex& c2 = cx({a2, mid, p.to});
        for (auto& [m1, _] : c1.byM) {
          auto z1 = c1.cycles(B, m1);
          if (z1.empty()) continue;
          auto z2 = c2.cycles(B, m - m1);
          for (auto& x : z1)
            for (auto& y : z2) {
              BElem prod;
              for (auto& s : x)
                for (auto& t : y)
                  if (auto r = B.mul(s.w, t.w)) prod.push_back({s.v + t.v, *r});
              cancel_pairs(prod);
              if (!prod.empty()) span.push_back(pc.coords(prod));
            }
        }
      }
    }
    BClass c;
    c.rep = rep[{p, m}];
    c.dim = h;
    c.decomposable = rank_of(span) - rb;
    out.push_back(c);
  }
  return out;
}

}  // namespace ainfty
