#include "ainfty/algebra_a.hpp"

namespace ainfty {

namespace {

struct Gen {
  const AlgebraA& A;
  std::mt19937_64& rng;
  int N;
  int vertsLeft;
  Weight w;
  int weightLeft;
  bool cycles;
  int vertices = 0;
  std::vector<int> L;
  std::vector<char> cutAfter;

  bool coin(double p) { return std::uniform_real_distribution<double>(0, 1)(rng) < p; }

  void emit(int code) {
    L.push_back(code);
    cutAfter.push_back(0);
  }

  // sectors Y with fused gaps; the entry letter is Y[0]
  void walk(const std::vector<int>& Y, const std::vector<char>& fused) {
    int M = int(Y.size());
    int t = 0;
    while (true) {
      emit(Y[t]);
      if (t == M - 1) break;
      if (fused[t]) {
        ++t;
        continue;
      }
      double r = std::uniform_real_distribution<double>(0, 1)(rng);
      if (r < 0.2 && weightLeft > 0 && t + 2 < M && !fused[t + 1] && Y[t + 1] % 2 == 0) {
        w.e[Y[t + 1] / 2 + 1]++;
        --weightLeft;
        t += 2;
        continue;
      }
      if (r < 0.55 && vertsLeft > 0) {
        int child = Y[t] % 2 == 0 ? Y[t] : (Y[t] + 2) % (2 * N);
        node(child);
        ++t;
        continue;
      }
      cutAfter.back() = 1;
      ++t;
    }
  }

  void node(int entry) {
    int twoN = 2 * N;
    if (cycles && coin(0.3)) {
      std::vector<CycleShape> ok;
      for (auto& cy : cycle_shapes(N))
        if (cy.vertices <= vertsLeft && int(cy.colours.size()) <= weightLeft) ok.push_back(cy);
      std::vector<int> starts;
      const CycleShape* pick = nullptr;
      if (!ok.empty()) {
        pick = &ok[std::uniform_int_distribution<int>(0, int(ok.size()) - 1)(rng)];
        int M = int(pick->ext.size());
        for (int x = 0; x < M; ++x)
          if (!pick->fusedAfter[(x + M - 1) % M] && pick->ext[x] == entry) starts.push_back(x);
      }
      if (!starts.empty()) {
        vertsLeft -= pick->vertices;
        vertices += pick->vertices;
        weightLeft -= int(pick->colours.size());
        for (int c : pick->colours) w.e[c]++;
        int M = int(pick->ext.size());
        int x = starts[std::uniform_int_distribution<int>(0, int(starts.size()) - 1)(rng)];
        std::vector<int> Y(M);
        std::vector<char> f(M);
        for (int t = 0; t < M; ++t) {
          Y[t] = pick->ext[(x + t) % M];
          f[t] = pick->fusedAfter[(x + t) % M];
        }
        walk(Y, f);
        return;
      }
    }
    --vertsLeft;
    ++vertices;
    std::vector<int> Y(twoN);
    for (int t = 0; t < twoN; ++t) Y[t] = (entry + t) % twoN;
    walk(Y, std::vector<char>(twoN, 0));
  }
};

}  // namespace

AOp random_op(const AlgebraA& A, std::mt19937_64& rng, const AGenOpts& o) {
  int N = A.N();
  Gen g{A, rng, N, o.maxVertices, Weight{}, o.maxWeight, o.cycles};
  int twoN = 2 * N;
  int ext = o.extension;
  if (ext < 0) ext = std::uniform_int_distribution<int>(0, 4)(rng) < 2 ? std::uniform_int_distribution<int>(1, 2)(rng) : 0;
  std::optional<ATerm> alpha = o.alpha;
  if (ext && !alpha) {
    int r = std::uniform_int_distribution<int>(1, 3)(rng);
    if (std::uniform_int_distribution<int>(0, 1)(rng))
      alpha = A.U(std::uniform_int_distribution<int>(1, N)(rng), r);
    else
      alpha = A.s(std::uniform_int_distribution<int>(1, N)(rng), r);
  }
  int entry = std::uniform_int_distribution<int>(0, twoN - 1)(rng);
  if (ext == 1) {  // root's first letter follows alpha
    auto l = A.letters(*alpha);
    entry = l.back() % 2 == 0 ? l.back() : (l.back() + 2) % twoN;
  } else if (ext == 2) {  // root's last letter precedes alpha
    auto l = A.letters(*alpha);
    int last = l.front() % 2 == 0 ? l.front() : (l.front() + twoN - 2) % twoN;
    entry = (last + 1) % twoN;
  }
  g.node(entry);
  AOp op;
  op.w = g.w;
  // group letters into inputs
  std::vector<std::vector<int>> groups(1);
  for (size_t t = 0; t < g.L.size(); ++t) {
    groups.back().push_back(g.L[t]);
    if (g.cutAfter[t] && t + 1 < g.L.size()) groups.emplace_back();
  }
  std::vector<ATerm> seq;
  for (auto& gr : groups) seq.push_back(A.from_letters(gr, 0, gr.size()));
  ATerm out = A.idem(A.initial(seq.front()));
  if (ext == 1) {
    auto m = A.mul(*alpha, seq.front());
    if (!m) return {};
    seq.front() = *m;
    out = *alpha;
  } else if (ext == 2) {
    auto m = A.mul(seq.back(), *alpha);
    if (!m) return {};
    seq.back() = *m;
    out = *alpha;
  }
  if (int(seq.size()) > o.maxInputs) return {};
  out.v.e[0] = uint8_t(out.v.e[0] + g.vertices);
  op.seq = seq;
  op.out = {out};
  return op;
}

}  // namespace ainfty
