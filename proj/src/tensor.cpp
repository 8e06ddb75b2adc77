#include "ainfty/tensor.hpp"

namespace ainfty {

namespace {

template <class Term, class Mu, class Unit>
std::vector<Term> eval_rec(TreeId t, const std::vector<Term>& in, size_t& pos, Mu&& mu, Unit&& unit) {
  if (t == kShoot) return {in[pos++]};
  if (t == kStump) return unit();
  const TreeNode& nd = tree_node(t);
  std::vector<std::vector<Term>> vals;
  vals.reserve(nd.kids.size());
  bool dead = false;
  for (TreeId c : nd.kids) {
    vals.push_back(eval_rec<Term>(c, in, pos, mu, unit));
    if (vals.back().empty()) dead = true;
  }
  if (dead) return {};
  std::vector<Term> out;
  std::vector<Term> seq(vals.size());
  auto rec = [&](auto&& self, size_t k) -> void {
    if (k == vals.size()) {
      auto r = mu(nd.w, seq);
      out.insert(out.end(), r.begin(), r.end());
      return;
    }
    for (auto& x : vals[k]) {
      seq[k] = x;
      self(self, k + 1);
    }
  };
  rec(rec, 0);
  cancel_pairs(out);
  return out;
}

}  // namespace

AElem eval_tree_a(const AlgebraA& A, TreeId t, const std::vector<ATerm>& in) {
  size_t pos = 0;
  return eval_rec<ATerm>(
      t, in, pos, [&](const Weight& w, const std::vector<ATerm>& s) { return A.mu(w, s); },
      [&] {
        AElem u;
        for (int i = 1; i <= A.N(); ++i) u.push_back(A.idem(i));
        std::sort(u.begin(), u.end());
        return u;
      });
}

BElem eval_tree_b(const AlgebraB& B, TreeId t, const std::vector<BTerm>& in) {
  size_t pos = 0;
  return eval_rec<BTerm>(
      t, in, pos,
      [&](const Weight& w, const std::vector<BTerm>& s) -> BElem {
        if (w.zero()) return B.mu(s);
        if (s.empty() && w.total() == 1 && w.e[0] == 1) return B.u0();
        return {};
      },
      [&] {
        BElem u;
        for (int i = 1; i <= B.N(); ++i) u.push_back({VMono{}, B.idem(i)});
        std::sort(u.begin(), u.end());
        return u;
      });
}

static VMono as_vmono(const Weight& w) {
  VMono v;
  v.e = w.e;
  return v;
}

ABElem eval_pair(const AlgebraA& A, const AlgebraB& B, const TreePair& p, const Weight& w,
                 const std::vector<ABInput>& in) {
  std::vector<ATerm> ai;
  std::vector<BTerm> bi;
  for (auto& [a, b] : in) {
    ai.push_back(a);
    bi.push_back(b);
  }
  Weight ws = tree_weight(p.s), wt = tree_weight(p.t);
  if (!ws.leq(w) || !wt.leq(w)) return {};
  AElem x = eval_tree_a(A, p.s, ai);
  if (x.empty()) return {};
  BElem y = eval_tree_b(B, p.t, bi);
  if (y.empty()) return {};
  VMono extra = as_vmono(w - ws) + as_vmono(w - wt);
  ABElem out;
  for (auto& a : x)
    for (auto& b : y) {
      ABTerm t{a, b.w};
      t.a.v += b.v + extra;
      out.push_back(t);
    }
  cancel_pairs(out);
  return out;
}

std::vector<std::pair<TreePair, ABElem>> tensor_mu_terms(const Diagonal& d, const AlgebraA& A,
                                                         const AlgebraB& B, const Weight& w,
                                                         const std::vector<ABInput>& in) {
  std::vector<std::pair<TreePair, ABElem>> out;
  if (in.size() == 1 && w.zero()) {
    // mu_1 = d (x) 1 + 1 (x) d; the differential on the left is zero
    ABElem v;
    for (auto& b : B.diff(in[0].second)) {
      ABTerm t{in[0].first, b.w};
      t.a.v += b.v;
      v.push_back(t);
    }
    for (auto& a : A.mu({}, {in[0].first})) {
      ABTerm t{a, in[0].second.w};
      t.a.v += in[0].second.v;
      v.push_back(t);
    }
    cancel_pairs(v);
    if (!v.empty()) out.emplace_back(TreePair{kShoot, kShoot}, std::move(v));
    return out;
  }
  for (auto& p : d.corolla_value(int(in.size()), w)) {
    auto v = eval_pair(A, B, p, w, in);
    if (!v.empty()) out.emplace_back(p, std::move(v));
  }
  return out;
}

ABElem tensor_mu(const Diagonal& d, const AlgebraA& A, const AlgebraB& B, const Weight& w,
                 const std::vector<ABInput>& in) {
  ABElem out;
  for (auto& [p, v] : tensor_mu_terms(d, A, B, w, in)) out.insert(out.end(), v.begin(), v.end());
  cancel_pairs(out);
  return out;
}

std::vector<std::vector<BTerm>> total_differential_b(const AlgebraB& B, const std::vector<BTerm>& seq, int w0) {
  std::vector<std::vector<BTerm>> out;
  size_t k = seq.size();
  for (size_t p = 0; p <= k; ++p)
    for (size_t q = p; q <= k; ++q) {
      BElem r;
      if (p == q) {
        if (w0 != 1) continue;
        r = B.u0();
      } else {
        if (w0 != 0) continue;
        r = B.mu(std::vector<BTerm>(seq.begin() + p, seq.begin() + q));
      }
      for (auto& x : r) {
        std::vector<BTerm> s(seq.begin(), seq.begin() + p);
        s.push_back(x);
        s.insert(s.end(), seq.begin() + q, seq.end());
        out.push_back(std::move(s));
      }
    }
  cancel_pairs(out);
  return out;
}

std::vector<std::vector<ATerm>> total_differential_a(const AlgebraA& A, const std::vector<ATerm>& seq,
                                                     const Weight& w) {
  std::vector<std::vector<ATerm>> out;
  size_t k = seq.size();
  for (size_t p = 0; p <= k; ++p)
    for (size_t q = p; q <= k; ++q) {
      if (p == q && w.zero()) continue;
      AElem r = A.mu(w, std::vector<ATerm>(seq.begin() + p, seq.begin() + q));
      for (auto& x : r) {
        std::vector<ATerm> s(seq.begin(), seq.begin() + p);
        s.push_back(x);
        s.insert(s.end(), seq.begin() + q, seq.end());
        out.push_back(std::move(s));
      }
    }
  cancel_pairs(out);
  return out;
}

std::string ab_str(const AlgebraA& A, const AlgebraB& B, const ABTerm& t) {
  return A.str(t.a) + " # " + B.str(BTerm{VMono{}, t.b});
}

std::string ab_str(const AlgebraA& A, const AlgebraB& B, const ABElem& e) {
  if (e.empty()) return "0";
  std::string s;
  for (size_t i = 0; i < e.size(); ++i) {
    if (i) s += " + ";
    s += ab_str(A, B, e[i]);
  }
  return s;
}

}  // namespace ainfty
