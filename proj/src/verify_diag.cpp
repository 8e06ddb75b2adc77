#include <functional>

#include "ainfty/diagonal.hpp"
#include "ainfty/verify.hpp"

namespace ainfty {

namespace {

// T with the subtree at kid position `path` collapsed to a leaf; also its leaf index (1-based)
struct Cut {
  TreeId outer;
  TreeId inner;
  int leaf;
};

void cuts_rec(TreeId t, std::vector<Cut>& out) {
  const TreeNode& nd = tree_node(t);
  int before = 0;
  for (size_t k = 0; k < nd.kids.size(); ++k) {
    TreeId c = nd.kids[k];
    if (c > 0) {
      auto kids = nd.kids;
      kids[k] = kShoot;
      out.push_back({tree_make(nd.w, kids), c, before + 1});
      std::vector<Cut> sub;
      cuts_rec(c, sub);
      for (auto& s : sub) {
        auto kk = nd.kids;
        kk[k] = s.outer;
        out.push_back({tree_make(nd.w, kk), s.inner, before + s.leaf});
      }
    }
    before += c > 0 ? tree_inputs(c) : (c == kShoot ? 1 : 0);
  }
}

}  // namespace

std::vector<Check> diagonal_checks(const Diagonal& d, int maxInputs, int maxWeight) {
  int N = d.params().N;
  Check build{"build complete"};
  ++build.checked;
  for (auto& e : d.errors()) build.fail(e);

  Check seeds{"seeds and Gamma^{2,0}"};
  auto seedOk = [&](int n, const Weight& w, const PairChain& want) {
    ++seeds.checked;
    if (!d.has(n, w)) return seeds.fail("missing corolla (" + std::to_string(n) + ", " + weight_str(w, N) + ")");
    if (d.corolla_value(n, w) != want) seeds.fail("corolla (" + std::to_string(n) + ", " + weight_str(w, N) + ")");
  };
  seedOk(2, {}, {{corolla(2, {}), corolla(2, {})}});
  seedOk(0, Weight::unit(0), {{kStump, corolla(0, Weight::unit(0))}});
  for (int i = 1; i <= N + 1; ++i) seedOk(0, Weight::unit(i), {{corolla(0, Weight::unit(i)), kStump}});

  Check wd1{"WD1 dimension"}, wd2{"WD2 weight"}, wd3{"WD3 stacking"}, wd4{"WD4 no stump/stump or shoot/shoot"};
  Check chain{"chain map"}, rm{"right-moving"};
  long long skipped = 0, splitExact = 0;
  for (const Weight& w : weights_upto(0, N + 1, maxWeight))
    for (int n = 0; n <= maxInputs; ++n)
      for (TreeId t : trees_with(n, w)) {
        if (!d.covers(t)) {
          ++skipped;
          continue;
        }
        PairChain g = d(t);
        std::string ts = tree_str(t, N);
        ++wd1.checked;
        ++wd2.checked;
        ++wd4.checked;
        ++rm.checked;
        bool exact = true;
        for (auto& p : g) {
          if (pair_dim(p) != tree_dim(t)) wd1.fail(ts + ": " + pair_str(p, N));
          Weight ws = tree_weight(p.s), wt = tree_weight(p.t);
          if (!ws.leq(w) || !wt.leq(w)) wd2.fail(ts + ": " + pair_str(p, N));
          if (ws != weight_left(w) || wt != weight_right(w)) exact = false;
          if ((p.s == kStump && p.t == kStump) || (p.s == kShoot && p.t == kShoot)) wd4.fail(ts + ": " + pair_str(p, N));
          if (d.params().rightMoving && !d.params().rm(p.s, p.t)) rm.fail(ts + ": " + pair_str(p, N));
        }
        if (exact) ++splitExact;
        ++chain.checked;
        PairChain lhs = pair_boundary(g), rhs;
        bool ok = true;
        for (TreeId f : tree_boundary(t)) {
          if (!d.covers(f)) {
            ok = false;
            break;
          }
          auto v = d(f);
          rhs.insert(rhs.end(), v.begin(), v.end());
        }
        if (!ok) {
          --chain.checked;
          ++skipped;
        } else {
          cancel_pairs(rhs);
          if (lhs != rhs) chain.fail(ts);
        }
        if (t <= 0) continue;
        std::vector<Cut> cuts;
        cuts_rec(t, cuts);
        for (auto& c : cuts) {
          ++wd3.checked;
          PairChain outer = d(c.outer), inner = d(c.inner);
          PairChain shoot{{kShoot, kShoot}};
          std::vector<const PairChain*> kids(tree_inputs(c.outer), &shoot);
          kids[c.leaf - 1] = &inner;
          if (pair_subst(outer, kids) != g) wd3.fail(ts + " at input " + std::to_string(c.leaf));
        }
      }
  wd2.data["left_weight_exactly_colours_1_to_N+1"] = splitExact;
  chain.data["skipped_uncovered"] = skipped;

  Check usual{"Gamma^{3,0} is the usual choice"};
  ++usual.checked;
  {
    TreeId c3 = corolla(3, {}), c2 = corolla(2, {});
    TreeId L = tree_make({}, {c2, kShoot}), R = tree_make({}, {kShoot, c2});
    PairChain want{{c3, R}, {L, c3}};
    std::sort(want.begin(), want.end());
    if (!d.has(3, {}) || d.corolla_value(3, {}) != want) usual.fail("Gamma^{3,0} differs");
  }
  return {build, seeds, wd1, wd2, wd3, wd4, chain, rm, usual};
}

Report verify_diagonal(const Caps& c) {
  Stopwatch sw;
  Report r;
  r.command = "verify diagonal";
  int maxIn = std::min(c.maxInputs, 6);
  int maxW = std::min(c.maxWeight, 1);
  DiagonalParams p;
  p.N = c.N;
  p.maxInputs = maxIn;
  p.maxWeight = maxW;
  p.maxDegree = maxIn + 2 * maxW;
  r.params = {{"n", c.N}, {"max_inputs", maxIn}, {"max_weight", maxW}, {"max_degree", p.maxDegree}};
  Diagonal d(p);
  r.checks = diagonal_checks(d, maxIn, maxW);
  long long terms = 0;
  for (auto& [k, v] : d.table()) terms += static_cast<long long>(v.size());
  r.checks[0].data["corollas"] = d.table().size();
  r.checks[0].data["terms"] = terms;
  r.seconds = sw.seconds();
  return r;
}

}  // namespace ainfty
