#include "ainfty/algebra_a.hpp"

namespace ainfty {

void a_add(AElem& acc, const AElem& x) {
  acc.insert(acc.end(), x.begin(), x.end());
  cancel_pairs(acc);
}

Alex AlgebraA::alex(const ATerm& t) const {
  Alex a = g_.a(t.v);
  if (t.kind == ATerm::UPow) {
    for (int k = 0; k < t.p; ++k) a = a + g_.slotOdd(t.i);
  } else if (t.kind == ATerm::Chord) {
    for (int k = 0; k < t.p; ++k) a = a + g_.slotEven(g_.idx(t.i + k));
  }
  return a;
}

std::optional<ATerm> AlgebraA::mul(const ATerm& x, const ATerm& y) const {
  if (final(x) != initial(y)) return std::nullopt;
  ATerm r;
  if (x.kind == ATerm::Idem) {
    r = y;
  } else if (y.kind == ATerm::Idem) {
    r = x;
  } else if (x.kind != y.kind) {
    return std::nullopt;
  } else if (x.kind == ATerm::Chord && x.i == corruptChord) {
    return std::nullopt;
  } else {
    r = x;
    r.p = uint16_t(x.p + y.p);
  }
  r.v = x.v + y.v;
  return r;
}

std::vector<int> AlgebraA::letters(const ATerm& t) const {
  std::vector<int> l;
  if (t.kind == ATerm::UPow) l.assign(t.p, 2 * (t.i - 1));
  if (t.kind == ATerm::Chord)
    for (int k = 0; k < t.p; ++k) l.push_back(2 * (g_.idx(t.i + k) - 1) + 1);
  return l;
}

ATerm AlgebraA::from_letters(const std::vector<int>& l, size_t from, size_t to) const {
  int c = l[from] / 2 + 1;
  if (l[from] % 2 == 0) return U(c, int(to - from));
  return s(c, int(to - from));
}

AElem AlgebraA::mu0(const Weight& w) const {
  if (w.total() != 1 || w.e[0]) return {};
  for (int c = 1; c <= N_; ++c)
    if (w.e[c]) return {U(c)};
  AElem out;
  for (int i = 1; i <= N_; ++i) out.push_back(s(i, N_));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CycleShape> cycle_shapes(int N) {
  std::vector<CycleShape> out;
  int twoN = 2 * N;
  for (int mask = 0; mask < (1 << N); ++mask) {
    // bit x-1 set: a vertex boundary between s_x and s_{x+1}
    if (__builtin_popcount(mask) < 2) continue;
    CycleShape cy;
    cy.colours.push_back(N + 1);
    std::vector<std::pair<int, int>> runs;  // (start, length)
    for (int x = 1; x <= N; ++x) {
      if (!(mask >> (x - 1) & 1)) {
        cy.colours.push_back(x % N + 1);  // U_{x+1} hidden inside the face
        continue;
      }
      int y = x % N + 1;  // run starts after the boundary
      int r = 1;
      while (!(mask >> ((y + r - 2) % N) & 1)) ++r;
      runs.push_back({y, r});
    }
    std::sort(runs.begin(), runs.end());
    // exterior order walks the runs backwards
    std::vector<std::pair<int, int>> order;
    int cur = runs[0].first;
    for (size_t k = 0; k < runs.size(); ++k) {
      auto it = std::find_if(runs.begin(), runs.end(), [&](auto& r) { return r.first == cur; });
      order.push_back(*it);
      int prevEnd = (cur + N - 2) % N + 1;  // s_{cur-1}
      auto jt = std::find_if(runs.begin(), runs.end(),
                             [&](auto& r) { return (r.first + r.second - 2) % N + 1 == prevEnd; });
      cur = jt->first;
    }
    for (auto [x, r] : order) {
      int len = twoN - 2 * r + 1;
      for (int k = 0; k < len; ++k) {
        cy.ext.push_back((2 * (x + r - 1) + k) % twoN);
        cy.fusedAfter.push_back(k == len - 1);
      }
    }
    cy.vertices = int(runs.size());
    out.push_back(cy);
  }
  return out;
}

namespace {

// Counts planar graphs whose boundary walk spells the given letters.
struct Parser {
  int N;
  const std::vector<int>& L;
  const std::vector<char>& cut;  // cut[t]: boundary edge between letter t and t+1
  std::array<int, kSlots> cap{};  // colours 1..N+1
  std::array<int, kSlots> stride{};
  int B = 1;
  int m;
  std::vector<std::vector<uint64_t>> memo;
  std::vector<char> done;
  std::vector<std::array<int, kSlots>> comp;

  std::vector<CycleShape> cyc_;
  const std::vector<CycleShape>& cycles() {
    if (cyc_.empty()) cyc_ = cycle_shapes(N);
    return cyc_;
  }

  Parser(int N_, const std::vector<int>& L_, const std::vector<char>& cut_, const Weight& w)
      : N(N_), L(L_), cut(cut_), m(int(L_.size())) {
    for (int c = 1; c <= N + 1; ++c) {
      cap[c] = w.e[c];
      stride[c] = B;
      B *= cap[c] + 1;
    }
    comp.resize(B);
    for (int code = 0; code < B; ++code)
      for (int c = 1; c <= N + 1; ++c) comp[code][c] = (code / stride[c]) % (cap[c] + 1);
    memo.resize(size_t(m) * m);
    done.assign(size_t(m) * m, 0);
  }

  int combine(int a, int b) const {
    int r = 0;
    for (int c = 1; c <= N + 1; ++c) {
      int x = comp[a][c] + comp[b][c];
      if (x > cap[c]) return -1;
      r += x * stride[c];
    }
    return r;
  }
  int single(int c) const { return cap[c] ? stride[c] : -1; }

  // walk a node whose exterior sectors are Y (fused[t]: gap after Y[t] is a cycle edge)
  void walk(const std::vector<int>& Y, const std::vector<char>& fused, int p, int q, int base,
            std::vector<uint64_t>& out) {
    int M = int(Y.size());
    int W = q - p + 1;
    if (W < 1) return;
    std::vector<uint64_t> dp(size_t(M) * W * B, 0);
    auto at = [&](int t, int pos) -> uint64_t* { return &dp[(size_t(t) * W + (pos - p)) * B]; };
    at(0, p)[base] = 1;
    for (int t = 0; t + 1 < M; ++t) {
      for (int pos = p; pos <= q; ++pos) {
        uint64_t* cur = at(t, pos);
        bool any = false;
        for (int b = 0; b < B; ++b) any |= cur[b] != 0;
        if (!any || pos == q) continue;
        if (fused[t]) {
          if (!cut[pos] && L[pos + 1] == Y[t + 1]) {
            uint64_t* nx = at(t + 1, pos + 1);
            for (int b = 0; b < B; ++b) nx[b] += cur[b];
          }
          continue;
        }
        // boundary edge
        if (cut[pos] && L[pos + 1] == Y[t + 1]) {
          uint64_t* nx = at(t + 1, pos + 1);
          for (int b = 0; b < B; ++b) nx[b] += cur[b];
        }
        if (cut[pos]) continue;
        // petal hiding Y[t+1]
        if (t + 2 < M && !fused[t + 1] && Y[t + 1] % 2 == 0 && L[pos + 1] == Y[t + 2]) {
          int pc = single(Y[t + 1] / 2 + 1);
          if (pc >= 0) {
            uint64_t* nx = at(t + 2, pos + 1);
            for (int b = 0; b < B; ++b)
              if (cur[b]) {
                int nb = combine(b, pc);
                if (nb >= 0) nx[nb] += cur[b];
              }
          }
        }
        // child subtree on letters pos+1..r
        for (int r = pos + 1; r + 1 <= q; ++r) {
          if (cut[r] || L[r + 1] != Y[t + 1]) continue;
          const auto& ch = F(pos + 1, r);
          if (ch.empty()) continue;
          uint64_t* nx = at(t + 1, r + 1);
          for (int b = 0; b < B; ++b) {
            if (!cur[b]) continue;
            for (int b2 = 0; b2 < B; ++b2) {
              if (!ch[b2]) continue;
              int nb = combine(b, b2);
              if (nb >= 0) nx[nb] += cur[b] * ch[b2];
            }
          }
        }
      }
    }
    uint64_t* fin = at(M - 1, q);
    for (int b = 0; b < B; ++b) out[b] += fin[b];
  }

  const std::vector<uint64_t>& F(int p, int q) {
    size_t key = size_t(p) * m + q;
    if (done[key]) return memo[key];
    done[key] = 1;
    std::vector<uint64_t> out(B, 0);
    int twoN = 2 * N;
    {
      std::vector<int> Y(twoN);
      for (int t = 0; t < twoN; ++t) Y[t] = (L[p] + t) % twoN;
      walk(Y, std::vector<char>(twoN, 0), p, q, 0, out);
    }
    if (cap[N + 1] > 0) {
      for (const auto& cy : cycles()) {
        int base = 0;
        for (int c : cy.colours) {
          int sc = single(c);
          if (sc < 0 || (base = combine(base, sc)) < 0) break;
        }
        if (base < 0) continue;
        int M = int(cy.ext.size());
        for (int x = 0; x < M; ++x) {
          if (cy.fusedAfter[(x + M - 1) % M] || cy.ext[x] != L[p]) continue;
          std::vector<int> Y(M);
          std::vector<char> fz(M, 0);
          for (int t = 0; t < M; ++t) {
            Y[t] = cy.ext[(x + t) % M];
            fz[t] = cy.fusedAfter[(x + t) % M];
          }
          walk(Y, fz, p, q, base, out);
        }
      }
    }
    bool any = false;
    for (auto v : out) any |= v != 0;
    if (any) memo[key] = std::move(out);
    return memo[key];
  }

  uint64_t count_exact() {
    const auto& r = F(0, m - 1);
    if (r.empty()) return 0;
    int code = 0;
    for (int c = 1; c <= N + 1; ++c) code += cap[c] * stride[c];
    return r[code];
  }
};

}  // namespace

AElem AlgebraA::mu(const Weight& w, const std::vector<ATerm>& seq, int* parses) const {
  if (parses) *parses = 0;
  int n = int(seq.size());
  for (auto& t : seq) {
    if (t.kind == ATerm::Idem) {
      if (n != 2 || !w.zero()) return {};
      auto pr = mul(seq[0], seq[1]);
      if (!pr) return {};
      return {*pr};
    }
  }
  if (w.e[0]) return {};
  if (n == 0) return mu0(w);
  if (n == 1) return {};
  if (n == 2 && w.zero()) {
    auto pr = mul(seq[0], seq[1]);
    if (!pr) return {};
    return {*pr};
  }
  int k = w.total();
  int num = n - 2 + 2 * k;
  if (num <= 0 || num % (2 * N_ - 2)) return {};
  int j = num / (2 * N_ - 2);
  VMono coef;
  std::vector<int> Lt;
  std::vector<int> owner;
  for (int a = 0; a < n; ++a) {
    if (a > 0 && final(seq[a - 1]) != initial(seq[a])) return {};
    coef += seq[a].v;
    auto l = letters(seq[a]);
    for (int x : l) {
      Lt.push_back(x);
      owner.push_back(a);
    }
  }
  int P = 0;
  for (int c = 1; c <= N_; ++c) P += w.e[c];
  int C = w.e[N_ + 1];
  int E = 2 * N_ * j - P - N_ * C;
  int m = int(Lt.size());
  int ext = m - E;
  if (ext < 0) return {};
  VMono vj;
  vj.e[0] = uint8_t(j);

  AElem out;
  int total = 0;
  auto attempt = [&](int from, int to, std::optional<ATerm> alpha) {
    std::vector<int> L(Lt.begin() + from, Lt.begin() + to);
    std::vector<char> cut(L.size() ? L.size() - 1 : 0);
    for (size_t t = 0; t + 1 < L.size(); ++t) cut[t] = owner[from + t] != owner[from + t + 1];
    Parser ps(N_, L, cut, w);
    uint64_t cnt = L.empty() ? 0 : ps.count_exact();
    total += int(cnt);
    if (cnt & 1) {
      ATerm o = alpha ? *alpha : idem(initial(seq[0]));
      o.v = coef + vj;
      out.push_back(o);
    }
  };
  if (ext == 0) {
    attempt(0, m, std::nullopt);
  } else {
    size_t first = letters(seq[0]).size();
    size_t last = letters(seq[n - 1]).size();
    if (int(first) > ext) attempt(ext, m, from_letters(Lt, 0, ext));
    if (int(last) > ext) attempt(0, m - ext, from_letters(Lt, m - ext, m));
  }
  if (parses) *parses = total;
  cancel_pairs(out);
  return out;
}

AElem AlgebraA::relation_sum(const Weight& w, const std::vector<ATerm>& seq, long* terms) const {
  if (terms) *terms = 0;
  int n = int(seq.size());
  auto splits = weights_upto(1, N_ + 1, w.total());
  AElem acc;
  for (int p = 0; p <= n; ++p) {
    for (int q = p; q <= n; ++q) {
      if (q - p == 1) continue;  // mu_1 = 0
      std::vector<ATerm> block(seq.begin() + p, seq.begin() + q);
      for (auto& wi : splits) {
        if (!wi.leq(w)) continue;
        if (block.empty() && wi.total() != 1) continue;
        AElem inner = block.empty() ? mu0(wi) : mu(wi, block);
        for (auto& t : inner) {
          std::vector<ATerm> s(seq.begin(), seq.begin() + p);
          s.push_back(t);
          s.insert(s.end(), seq.begin() + q, seq.end());
          if (s.size() < 2) continue;
          auto o = mu(w - wi, s);
          if (terms) *terms += long(o.size());
          acc.insert(acc.end(), o.begin(), o.end());
        }
      }
    }
  }
  cancel_pairs(acc);
  return acc;
}

std::string AlgebraA::str(const ATerm& t) const {
  std::string v = vmono_str(t.v, N_);
  std::string b;
  if (t.kind == ATerm::Idem) b = "i" + std::to_string(t.i);
  if (t.kind == ATerm::UPow) b = "U" + std::to_string(t.i) + (t.p > 1 ? "^" + std::to_string(t.p) : "");
  if (t.kind == ATerm::Chord) b = "s" + std::to_string(t.i) + ":" + std::to_string(t.p);
  return v.empty() ? b : v + "*" + b;
}

std::string AlgebraA::str(const AElem& e) const {
  if (e.empty()) return "0";
  std::string s;
  for (auto& t : e) s += (s.empty() ? "" : " + ") + str(t);
  return s;
}

std::string AlgebraA::str(const std::vector<ATerm>& seq, bool) const {
  std::string s = "(";
  for (size_t a = 0; a < seq.size(); ++a) s += (a ? ", " : "") + str(seq[a]);
  return s + ")";
}

}  // namespace ainfty
