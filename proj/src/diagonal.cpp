#include "ainfty/diagonal.hpp"

#include <set>
#include <stdexcept>

#include "ainfty/gf2.hpp"

namespace ainfty {

int pair_dim(const TreePair& p) { return tree_dim(p.s) + tree_dim(p.t); }

PairChain pair_boundary(const TreePair& p) {
  PairChain out;
  for (TreeId x : tree_boundary(p.s)) out.push_back({x, p.t});
  for (TreeId y : tree_boundary(p.t)) out.push_back({p.s, y});
  cancel_pairs(out);
  return out;
}

PairChain pair_boundary(const PairChain& c) {
  PairChain out;
  for (auto& p : c) {
    for (TreeId x : tree_boundary(p.s)) out.push_back({x, p.t});
    for (TreeId y : tree_boundary(p.t)) out.push_back({p.s, y});
  }
  cancel_pairs(out);
  return out;
}

std::string pair_str(const TreePair& p, int N) { return tree_str(p.s, N) + " # " + tree_str(p.t, N); }

Weight weight_left(const Weight& w) {
  Weight r = w;
  r.e[0] = 0;
  return r;
}

Weight weight_right(const Weight& w) {
  Weight r;
  r.e[0] = w.e[0];
  return r;
}

PairChain diagonal_seed(int n, const Weight& w, int N) {
  if (n == 2 && w.zero()) return {{corolla(2, {}), corolla(2, {})}};
  if (n == 0 && w.total() == 1) {
    if (w.e[0]) return {{kStump, corolla(0, w)}};
    for (int i = 1; i <= N + 1; ++i)
      if (w.e[i]) return {{corolla(0, w), kStump}};
  }
  return {};
}

static void subst_rec(const TreePair& root, const std::vector<const PairChain*>& kids, size_t k,
                      std::vector<TreeId>& ls, std::vector<TreeId>& rs, PairChain& out) {
  if (k == kids.size()) {
    TreeId a = tree_subst(root.s, ls);
    if (a == kZero) return;
    TreeId b = tree_subst(root.t, rs);
    if (b == kZero) return;
    out.push_back({a, b});
    return;
  }
  for (auto& p : *kids[k]) {
    ls[k] = p.s;
    rs[k] = p.t;
    subst_rec(root, kids, k + 1, ls, rs, out);
  }
}

PairChain pair_subst(const PairChain& root, const std::vector<const PairChain*>& kids) {
  PairChain out;
  std::vector<TreeId> ls(kids.size()), rs(kids.size());
  for (auto& r : root) subst_rec(r, kids, 0, ls, rs, out);
  cancel_pairs(out);
  return out;
}

// corollas appearing as vertices of the faces of Psi_n^w
static std::vector<CorollaKey> face_corollas(const CorollaKey& k) {
  std::vector<CorollaKey> out;
  for (const Weight& wc : weights_upto(0, kSlots - 1, k.w.total())) {
    if (!wc.leq(k.w)) continue;
    Weight wp = k.w - wc;
    for (int b = 0; b <= k.n; ++b) {
      if (!tree_stable(wc, b) || !tree_stable(wp, k.n - b + 1)) continue;
      if (b == k.n && wc == k.w) continue;
      out.push_back({b, wc});
      out.push_back({k.n - b + 1, wp});
    }
  }
  return out;
}

Diagonal::Diagonal(const DiagonalParams& p) : p_(p) {
  std::set<CorollaKey> need;
  std::vector<CorollaKey> stack;
  for (const Weight& w : weights_upto(0, p.N + 1, p.maxWeight))
    for (int n = 0; n <= p.maxInputs; ++n) {
      if (n + 2 * w.total() > p.maxDegree || !tree_stable(w, n)) continue;
      stack.push_back({n, w});
    }
  while (!stack.empty()) {
    CorollaKey k = stack.back();
    stack.pop_back();
    if (!need.insert(k).second) continue;
    for (auto& f : face_corollas(k))
      if (!need.count(f)) stack.push_back(f);
  }
  std::vector<CorollaKey> order(need.begin(), need.end());
  std::stable_sort(order.begin(), order.end(), [](const CorollaKey& a, const CorollaKey& b) {
    int da = a.n + 2 * a.w.total(), db = b.n + 2 * b.w.total();
    if (da != db) return da < db;
    return a < b;
  });
  for (auto& k : order) build_one(k);
}

const PairChain& Diagonal::corolla_value(int n, const Weight& w) const {
  auto it = table_.find({n, w});
  if (it == table_.end())
    throw std::out_of_range("diagonal: corolla (" + std::to_string(n) + ", " + weight_str(w, p_.N) +
                            ") outside caps");
  return it->second;
}

void Diagonal::set_value(int n, const Weight& w, PairChain c) {
  cancel_pairs(c);
  table_[{n, w}] = std::move(c);
  std::lock_guard lk(mu_);
  memo_.clear();
}

bool Diagonal::covers(TreeId t) const {
  if (t <= kShoot) return true;
  const TreeNode& nd = tree_node(t);
  if (!has(int(nd.kids.size()), nd.w)) return false;
  for (TreeId c : nd.kids)
    if (!covers(c)) return false;
  return true;
}

PairChain Diagonal::operator()(TreeId t) const {
  if (t == kShoot) return {{kShoot, kShoot}};
  if (t == kStump) return {{kStump, kStump}};
  {
    std::lock_guard lk(mu_);
    auto it = memo_.find(t);
    if (it != memo_.end()) return it->second;
  }
  const TreeNode& nd = tree_node(t);
  const PairChain& root = corolla_value(int(nd.kids.size()), nd.w);
  PairChain out;
  bool bare = true;
  for (TreeId c : nd.kids) bare = bare && c == kShoot;
  if (bare) {
    out = root;
  } else {
    std::vector<PairChain> vals;
    vals.reserve(nd.kids.size());
    for (TreeId c : nd.kids) vals.push_back((*this)(c));
    std::vector<const PairChain*> ptrs;
    for (auto& v : vals) ptrs.push_back(&v);
    out = pair_subst(root, ptrs);
  }
  std::lock_guard lk(mu_);
  return memo_.emplace(t, std::move(out)).first->second;
}

static std::vector<TreeId> candidates(int n, const Weight& w) {
  std::vector<TreeId> r = trees_with(n, w);
  if (w.zero() && n == 0) r.push_back(kStump);
  if (w.zero() && n == 1) r.push_back(kShoot);
  return r;
}

void Diagonal::build_one(const CorollaKey& k) {
  CorollaStats st;
  PairChain seed = diagonal_seed(k.n, k.w, p_.N);
  if (!seed.empty()) {
    st.terms = int(seed.size());
    table_[k] = seed;
    stats_[k] = st;
    return;
  }
  TreeId psi = corolla(k.n, k.w);
  PairChain rhs;
  for (TreeId f : tree_boundary(psi)) {
    auto v = (*this)(f);
    rhs.insert(rhs.end(), v.begin(), v.end());
  }
  cancel_pairs(rhs);
  PairChain val = solve(k, rhs, st);
  st.terms = int(val.size());
  table_[k] = std::move(val);
  stats_[k] = st;
}

PairChain Diagonal::solve(const CorollaKey& k, const PairChain& rhs, CorollaStats& st) {
  int D = k.n + 2 * k.w.total() - 2;
  // every pair in the image carries the e_0 part of w on the right and the rest on the left
  auto L = candidates(k.n, weight_left(k.w));
  auto R = candidates(k.n, weight_right(k.w));
  auto byCanon = [](TreeId a, TreeId b) { return tree_compare(a, b) < 0; };
  std::sort(L.begin(), L.end(), byCanon);
  std::sort(R.begin(), R.end(), byCanon);
  std::map<int, std::vector<TreeId>> rByDim;
  for (TreeId t : R) rByDim[tree_dim(t)].push_back(t);

  std::vector<TreePair> unknowns;
  for (TreeId s : L) {
    auto it = rByDim.find(D - tree_dim(s));
    if (it == rByDim.end()) continue;
    for (TreeId t : it->second) {
      if (s == kStump && t == kStump) continue;
      if (s == kShoot && t == kShoot) continue;
      if (p_.rightMoving && !p_.rm(s, t)) continue;
      unknowns.push_back({s, t});
    }
  }
  std::map<TreePair, int> rowId;
  auto row = [&](const TreePair& p) {
    auto it = rowId.find(p);
    if (it != rowId.end()) return it->second;
    int id = int(rowId.size());
    rowId.emplace(p, id);
    return id;
  };
  ColumnBasis basis(true);
  for (auto& u : unknowns) {
    SparseVec col;
    for (auto& q : pair_boundary(u)) col.push_back(row(q));
    std::sort(col.begin(), col.end());
    basis.add(std::move(col));
  }
  st.unknowns = int(unknowns.size());
  st.rank = basis.rank();
  SparseVec b;
  for (auto& q : rhs) {
    auto it = rowId.find(q);
    if (it == rowId.end()) {
      errors_.push_back("corolla (" + std::to_string(k.n) + ", " + weight_str(k.w, p_.N) +
                        "): boundary term outside the admissible pairs: " + pair_str(q, p_.N));
      return {};
    }
    b.push_back(it->second);
  }
  std::sort(b.begin(), b.end());
  auto sol = basis.solve(b);
  if (!sol) {
    errors_.push_back("corolla (" + std::to_string(k.n) + ", " + weight_str(k.w, p_.N) + "): no solution");
    return {};
  }
  PairChain out;
  for (int c : *sol) out.push_back(unknowns[c]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ainfty
