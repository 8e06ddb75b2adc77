#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ainfty/ring.hpp"

namespace ainfty {

// A word in sigma/rho. Letters in application order:
//   [rho_start if rrho] sigma_start rho_{start+1} sigma_{start+1} ... sigma_top [rho_{top+1} if lrho]
// len = number of sigmas. len 0 without rho is the idempotent; len 0 with rrho is bare rho_start.
struct BWord {
  uint8_t start = 1;
  uint16_t len = 0;
  bool lrho = false;
  bool rrho = false;

  bool isIdem() const { return len == 0 && !rrho; }
  bool isBareRho() const { return len == 0 && rrho; }
  int letters() const { return 2 * len - (len ? 1 : 0) + lrho + rrho; }
  auto operator<=>(const BWord&) const = default;
  bool operator==(const BWord&) const = default;
};

struct BTerm {
  VMono v;
  BWord w;
  auto operator<=>(const BTerm&) const = default;
  bool operator==(const BTerm&) const = default;
};

using BElem = std::vector<BTerm>;  // sorted, pair-cancelled

class AlgebraB {
 public:
  explicit AlgebraB(int N, Grading g = {}) : N_(N), g_(g) { g_.N = N; }

  int N() const { return N_; }
  const Grading& grading() const { return g_; }

  BWord word(int start, int len, bool lrho, bool rrho) const;
  BWord idem(int i) const { return word(i, 0, false, false); }
  BWord rho(int i) const { return word(i, 0, false, true); }
  BWord sigma(int i) const { return word(i, 1, false, false); }

  int initial(const BWord& w) const { return w.start; }
  int final(const BWord& w) const { return g_.idx(w.start + w.len); }

  int maslov(const BTerm& t) const { return g_.m(t.v) - t.w.letters(); }
  Alex alex(const BTerm& t) const;

  // x applied first; returns the word "y x"
  std::optional<BWord> mul(const BWord& x, const BWord& y) const;

  BElem diff(const BTerm& t) const;
  // inputs in application order
  BElem mu(const std::vector<BTerm>& seq) const;
  // mu_0^{e_0}, restricted to idempotent i when i > 0
  BElem u0(int i = 0) const;

  // sum over all ways of composing two operations; zero iff the relation holds
  BElem relation_sum(const std::vector<BTerm>& seq) const;
  // same, including the e_0 curvature insertions
  BElem relation_sum_weighted(const std::vector<BTerm>& seq, int w0) const;

  std::vector<BWord> all_words(int maxLen) const;
  std::string str(const BWord& w) const;
  std::string str(const BTerm& t) const;
  std::string str(const BElem& e) const;

 private:
  BElem highProduct(const std::vector<BWord>& t) const;
  VMono prodExcept(int skip) const;
  int N_;
  Grading g_;
};

void b_add(BElem& acc, const BElem& x);
BElem b_scale(const BElem& x, const VMono& v);

}  // namespace ainfty
