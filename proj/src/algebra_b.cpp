#include "ainfty/algebra_b.hpp"

namespace ainfty {

void b_add(BElem& acc, const BElem& x) {
  acc.insert(acc.end(), x.begin(), x.end());
  cancel_pairs(acc);
}

BElem b_scale(const BElem& x, const VMono& v) {
  BElem r = x;
  for (auto& t : r) t.v += v;
  return r;
}

BWord AlgebraB::word(int start, int len, bool lrho, bool rrho) const {
  BWord w;
  w.start = uint8_t(g_.idx(start));
  w.len = uint16_t(len);
  if (len == 0) {
    w.rrho = lrho || rrho;
    w.lrho = false;
  } else {
    w.lrho = lrho;
    w.rrho = rrho;
  }
  return w;
}

Alex AlgebraB::alex(const BTerm& t) const {
  Alex a = g_.a(t.v);
  const BWord& w = t.w;
  if (w.rrho) a = a + g_.slotOdd(w.start);
  for (int p = 0; p < w.len; ++p) {
    a = a + g_.slotEven(g_.idx(w.start + p));
    if (p + 1 < w.len) a = a + g_.slotOdd(g_.idx(w.start + p + 1));
  }
  if (w.lrho) a = a + g_.slotOdd(g_.idx(w.start + w.len));
  return a;
}

std::optional<BWord> AlgebraB::mul(const BWord& x, const BWord& y) const {
  if (final(x) != initial(y)) return std::nullopt;
  if (x.isIdem()) return y;
  if (y.isIdem()) return x;
  bool xEndsRho = x.lrho || x.isBareRho();
  bool yStartsRho = y.rrho;
  if (xEndsRho == yStartsRho) return std::nullopt;
  BWord r;
  r.start = x.start;
  r.len = uint16_t(x.len + y.len);
  r.rrho = x.rrho;
  r.lrho = y.isBareRho() ? true : y.lrho;
  return r;
}

VMono AlgebraB::prodExcept(int skip) const {
  VMono v;
  for (int l = 1; l <= N_ + 1; ++l)
    if (l != skip) v.e[l] = 1;
  return v;
}

BElem AlgebraB::diff(const BTerm& t) const {
  const BWord& w = t.w;
  BElem out;
  if (w.isIdem()) return out;
  int i = w.start;
  int l = w.len;
  int j1 = final(w);
  auto push = [&](VMono v, BWord ww) { out.push_back({t.v + v, ww}); };
  if (w.isBareRho()) {
    push(VMono::unit(i), idem(i));
  } else if (l < N_) {
    if (w.rrho) push(VMono::unit(i), word(i, l, w.lrho, false));
    if (w.lrho) push(VMono::unit(j1), word(i, l, false, w.rrho));
  } else if (!w.lrho && !w.rrho && l == N_) {
    push(prodExcept(i), idem(i));  // single term, like the length-N products
  } else if (!w.lrho && !w.rrho) {
    push(prodExcept(j1), word(i, l - N_, true, false));
    push(prodExcept(i), word(i, l - N_, false, true));
  } else if (w.lrho && !w.rrho) {
    push(VMono::unit(j1), word(i, l, false, false));
    push(prodExcept(i), word(i, l - N_, true, true));
  } else if (!w.lrho && w.rrho) {
    push(VMono::unit(i), word(i, l, false, false));
    push(prodExcept(j1), word(i, l - N_, true, true));
  } else {
    push(VMono::unit(j1), word(i, l, false, true));
    push(VMono::unit(i), word(i, l, true, false));
  }
  cancel_pairs(out);
  return out;
}

BElem AlgebraB::highProduct(const std::vector<BWord>& t) const {
  int k = int(t.size());
  if (k < 2 || k > N_) return {};
  int L = 0;
  for (int a = 0; a < k; ++a) {
    if (t[a].len < 1) return {};
    if (a > 0 && final(t[a - 1]) != initial(t[a])) return {};
    if (a > 0 && a + 1 < k && (t[a].lrho || t[a].rrho)) return {};
    L += t[a].len;
  }
  if (t[0].lrho || t[k - 1].rrho) return {};
  if (L < N_) return {};
  int i = t[0].start;
  bool S1 = L - t[0].len >= N_;
  bool S2 = L - t[k - 1].len >= N_;
  bool right = !t[0].rrho && !S2;
  bool left = !t[k - 1].lrho && !S1;

  // junction[p]: connector between sigma p and p+1 is a junction (not rho)
  std::vector<bool> junction(std::max(L - 1, 0), false);
  int pos = 0;
  for (int a = 0; a + 1 < k; ++a) {
    pos += t[a].len;
    junction[pos - 1] = true;
  }
  auto blockV = [&](int from, int to) {  // sigma positions from..to inclusive
    VMono v = VMono::unit(N_ + 1);
    for (int p = from; p < to; ++p)
      if (!junction[p]) v.e[g_.idx(i + p + 1)] += 1;
    return v;
  };
  BElem out;
  if (right) {
    VMono v = blockV(0, N_ - 1);
    BWord rest = L == N_ ? word(i, 0, t[k - 1].lrho, false) : word(i, L - N_, t[k - 1].lrho, true);
    out.push_back({v, rest});
  }
  if (left && !(right && L == N_)) {
    VMono v = blockV(L - N_, L - 1);
    BWord rest = L == N_ ? word(i, 0, false, t[0].rrho) : word(i, L - N_, true, t[0].rrho);
    out.push_back({v, rest});
  }
  cancel_pairs(out);
  return out;
}

BElem AlgebraB::mu(const std::vector<BTerm>& seq) const {
  int k = int(seq.size());
  if (k == 0) return {};
  if (k == 1) return diff(seq[0]);
  VMono coef;
  std::vector<BWord> ws;
  for (auto& t : seq) {
    coef += t.v;
    ws.push_back(t.w);
  }
  for (int a = 0; a < k; ++a) {
    if (ws[a].isIdem()) {
      if (k != 2) return {};
      auto p = mul(ws[0], ws[1]);
      if (!p) return {};
      return {BTerm{coef, *p}};
    }
  }
  if (k == 2) {
    if (auto p = mul(ws[0], ws[1])) return {BTerm{coef, *p}};
  }
  return b_scale(highProduct(ws), coef);
}

BElem AlgebraB::u0(int only) const {
  BElem out;
  for (int i = 1; i <= N_; ++i) {
    if (only && i != only) continue;
    out.push_back({VMono{}, word(i, N_, false, true)});
    out.push_back({VMono{}, word(i, N_, true, false)});
  }
  cancel_pairs(out);
  return out;
}

BElem AlgebraB::relation_sum(const std::vector<BTerm>& seq) const {
  return relation_sum_weighted(seq, 0);
}

BElem AlgebraB::relation_sum_weighted(const std::vector<BTerm>& seq, int w0) const {
  int k = int(seq.size());
  BElem acc;
  auto outer = [&](const std::vector<BTerm>& s, int wOuter) -> BElem {
    if (wOuter == 0) return mu(s);
    if (s.empty() && wOuter == 1) return u0();
    return {};
  };
  for (int p = 0; p <= k; ++p) {
    for (int q = p; q <= k; ++q) {  // block [p, q)
      for (int wi = 0; wi <= w0; ++wi) {
        BElem inner;
        std::vector<BTerm> block(seq.begin() + p, seq.begin() + q);
        if (block.empty()) {
          if (wi != 1) continue;
          inner = u0();
        } else {
          inner = outer(block, wi);
        }
        for (auto& r : inner) {
          std::vector<BTerm> s(seq.begin(), seq.begin() + p);
          s.push_back(r);
          s.insert(s.end(), seq.begin() + q, seq.end());
          auto o = outer(s, w0 - wi);
          acc.insert(acc.end(), o.begin(), o.end());
        }
      }
    }
  }
  cancel_pairs(acc);
  return acc;
}

std::vector<BWord> AlgebraB::all_words(int maxLen) const {
  std::vector<BWord> out;
  for (int i = 1; i <= N_; ++i) {
    out.push_back(idem(i));
    out.push_back(rho(i));
    for (int l = 1; l <= maxLen; ++l)
      for (int f = 0; f < 4; ++f) out.push_back(word(i, l, f & 1, f & 2));
  }
  return out;
}

std::string AlgebraB::str(const BWord& w) const {
  if (w.isIdem()) return "i" + std::to_string(w.start);
  std::vector<std::string> app;
  if (w.rrho) app.push_back("R" + std::to_string(w.start));
  for (int p = 0; p < w.len; ++p) {
    app.push_back("S" + std::to_string(g_.idx(w.start + p)));
    if (p + 1 < w.len) app.push_back("R" + std::to_string(g_.idx(w.start + p + 1)));
  }
  if (w.lrho) app.push_back("R" + std::to_string(g_.idx(w.start + w.len)));
  std::string s;
  for (auto it = app.rbegin(); it != app.rend(); ++it) s += *it;
  return s;
}

std::string AlgebraB::str(const BTerm& t) const {
  std::string v = vmono_str(t.v, N_);
  return v.empty() ? str(t.w) : v + "*" + str(t.w);
}

std::string AlgebraB::str(const BElem& e) const {
  if (e.empty()) return "0";
  std::string s;
  for (auto& t : e) {
    if (!s.empty()) s += " + ";
    s += str(t);
  }
  return s;
}

}  // namespace ainfty
