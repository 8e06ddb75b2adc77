#include "ainfty/trees.hpp"

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace ainfty {

namespace {

struct Key {
  Weight w;
  std::vector<TreeId> kids;
  bool operator==(const Key&) const = default;
};

struct KeyHash {
  size_t operator()(const Key& k) const {
    uint64_t h = 1469598103934665603ull;
    for (auto x : k.w.e) h = (h ^ x) * 1099511628211ull;
    for (auto x : k.kids) h = (h ^ uint64_t(uint32_t(x + 7))) * 1099511628211ull;
    return size_t(h);
  }
};

constexpr int kChunkBits = 12;
constexpr int kChunk = 1 << kChunkBits;
constexpr int kMaxChunks = 1 << 14;

struct Store {
  std::mutex mu;
  std::array<std::unique_ptr<TreeNode[]>, kMaxChunks> chunks;
  int size = 1;  // id 0 is the shoot
  std::unordered_map<Key, TreeId, KeyHash> index;
  std::unordered_map<TreeId, TreeChain> bd;
  std::unordered_map<TreeId, std::vector<int8_t>> shapes;

  Store() { chunks[0] = std::make_unique<TreeNode[]>(kChunk); }
  TreeNode& at(TreeId id) { return chunks[id >> kChunkBits][id & (kChunk - 1)]; }
};

Store& store() {
  static Store s;
  return s;
}

}  // namespace

const TreeNode& tree_node(TreeId t) { return store().at(t); }

size_t tree_store_size() {
  std::lock_guard lk(store().mu);
  return size_t(store().size);
}

bool tree_stable(const Weight& w, int kids) { return kids >= 2 || !w.zero(); }

TreeId tree_make(const Weight& w, std::vector<TreeId> kids) {
  Store& S = store();
  Key k{w, std::move(kids)};
  std::lock_guard lk(S.mu);
  auto it = S.index.find(k);
  if (it != S.index.end()) return it->second;
  TreeId id = S.size++;
  if ((id >> kChunkBits) >= kMaxChunks) throw std::runtime_error("tree store full");
  if (!S.chunks[id >> kChunkBits]) S.chunks[id >> kChunkBits] = std::make_unique<TreeNode[]>(kChunk);
  TreeNode& n = S.at(id);
  n.w = w;
  n.kids = k.kids;
  n.inputs = 0;
  n.verts = 1;
  n.wt = w;
  for (TreeId c : n.kids) {
    if (c == kShoot) {
      n.inputs++;
    } else {
      const TreeNode& cn = S.at(c);
      n.inputs += cn.inputs;
      n.verts += cn.verts;
      n.wt += cn.wt;
    }
  }
  S.index.emplace(std::move(k), id);
  return id;
}

TreeId corolla(int n, const Weight& w) { return tree_make(w, std::vector<TreeId>(n, kShoot)); }

int tree_inputs(TreeId t) {
  if (t == kStump) return 0;
  if (t == kShoot) return 1;
  return tree_node(t).inputs;
}

Weight tree_weight(TreeId t) {
  if (t <= kShoot) return {};
  return tree_node(t).wt;
}

int tree_verts(TreeId t) {
  if (t == kStump) return -1;
  if (t == kShoot) return 0;
  return tree_node(t).verts;
}

int tree_dim(TreeId t) { return tree_inputs(t) + 2 * tree_weight(t).total() - tree_verts(t) - 1; }

static void sub_weights(const Weight& w, int c, Weight& cur, std::vector<Weight>& out) {
  if (c == kSlots) {
    out.push_back(cur);
    return;
  }
  for (int k = 0; k <= w.e[c]; ++k) {
    cur.e[c] = uint8_t(k);
    sub_weights(w, c + 1, cur, out);
  }
  cur.e[c] = 0;
}

static std::vector<Weight> sub_weights(const Weight& w) {
  std::vector<Weight> out;
  Weight cur;
  sub_weights(w, 0, cur, out);
  return out;
}

const TreeChain& tree_boundary(TreeId t) {
  static const TreeChain empty;
  if (t <= kShoot) return empty;
  Store& S = store();
  {
    std::lock_guard lk(S.mu);
    auto it = S.bd.find(t);
    if (it != S.bd.end()) return it->second;
  }
  const TreeNode nd = tree_node(t);
  TreeChain out;
  int k = int(nd.kids.size());
  auto subs = sub_weights(nd.w);
  for (int b = 0; b <= k; ++b) {
    for (int s = 0; s + b <= k; ++s) {
      for (const Weight& wc : subs) {
        Weight wp = nd.w - wc;
        if (!tree_stable(wc, b) || !tree_stable(wp, k - b + 1)) continue;
        std::vector<TreeId> block(nd.kids.begin() + s, nd.kids.begin() + s + b);
        TreeId c = tree_make(wc, std::move(block));
        std::vector<TreeId> pk(nd.kids.begin(), nd.kids.begin() + s);
        pk.push_back(c);
        pk.insert(pk.end(), nd.kids.begin() + s + b, nd.kids.end());
        out.push_back(tree_make(wp, std::move(pk)));
      }
    }
  }
  for (int j = 0; j < k; ++j) {
    if (nd.kids[j] == kShoot) continue;
    const TreeChain& cb = tree_boundary(nd.kids[j]);
    for (TreeId x : cb) {
      auto kids = nd.kids;
      kids[j] = x;
      out.push_back(tree_make(nd.w, std::move(kids)));
    }
  }
  cancel_pairs(out);
  std::lock_guard lk(S.mu);
  return S.bd.emplace(t, std::move(out)).first->second;
}

static TreeId subst_rec(TreeId t, const std::vector<TreeId>& subs, size_t& pos) {
  if (t == kShoot) return subs[pos++];
  const TreeNode& nd = tree_node(t);
  std::vector<TreeId> kids;
  kids.reserve(nd.kids.size());
  int stumps = 0;
  for (TreeId c : nd.kids) {
    TreeId r = subst_rec(c, subs, pos);
    if (r == kZero) return kZero;
    if (r == kStump) ++stumps;
    kids.push_back(r);
  }
  if (!stumps) return tree_make(nd.w, std::move(kids));
  // unit rule: only a bare binary vertex absorbs a stump
  if (!nd.w.zero() || kids.size() != 2) return kZero;
  return kids[0] == kStump ? kids[1] : kids[0];
}

TreeId tree_subst(TreeId t, const std::vector<TreeId>& subs) {
  if ((int)subs.size() != tree_inputs(t)) throw std::invalid_argument("tree_subst: arity");
  if (t == kStump) return kStump;
  for (TreeId s : subs)
    if (s == kZero) return kZero;
  size_t pos = 0;
  return subst_rec(t, subs, pos);
}

TreeId tree_glue(TreeId t, int i, TreeId s) {
  int n = tree_inputs(t);
  if (i < 1 || i > n) throw std::invalid_argument("tree_glue: index");
  std::vector<TreeId> subs(n, kShoot);
  subs[i - 1] = s;
  return tree_subst(t, subs);
}

TreeId tree_stack(int i, int j, int n, TreeId s, TreeId t) {
  if (tree_inputs(s) != j - i + 1 || tree_inputs(t) != n + i - j)
    throw std::invalid_argument("tree_stack: input counts");
  return tree_glue(t, i, s);
}

// kShoot for a single surviving leaf, kZero for none
static TreeId profile_rec(TreeId t, const std::vector<char>& keep, int& pos) {
  if (t == kShoot) return keep[pos++] ? kShoot : kZero;
  const TreeNode& nd = tree_node(t);
  std::vector<TreeId> kids;
  for (TreeId c : nd.kids) {
    TreeId r = profile_rec(c, keep, pos);
    if (r != kZero) kids.push_back(r);
  }
  if (kids.empty()) return kZero;
  if (kids.size() == 1) return kids[0];
  return tree_make(Weight{}, std::move(kids));
}

TreeId tree_profile(TreeId t, const std::vector<int>& I) {
  int n = tree_inputs(t);
  std::vector<char> keep(n, 0);
  for (int i : I) {
    if (i < 1 || i > n) throw std::invalid_argument("tree_profile: index");
    keep[i - 1] = 1;
  }
  if (t == kStump) return kStump;
  int pos = 0;
  TreeId r = profile_rec(t, keep, pos);
  return r == kZero ? kStump : r;
}

int shape3(TreeId t) {
  if (t <= kShoot || tree_inputs(t) != 3) throw std::invalid_argument("shape3");
  const TreeNode& nd = tree_node(t);
  if (nd.kids.size() == 3) return 0;
  return nd.kids[0] != kShoot ? 1 : 2;
}

// shape of every 3-subset, in lexicographic order of (a<b<c)
static const std::vector<int8_t>& triple_shapes(TreeId t) {
  Store& S = store();
  {
    std::lock_guard lk(S.mu);
    auto it = S.shapes.find(t);
    if (it != S.shapes.end()) return it->second;
  }
  std::vector<std::vector<int>> paths;  // child indices from the root
  std::vector<int> cur;
  auto walk = [&](auto&& self, TreeId x) -> void {
    if (x == kShoot) {
      paths.push_back(cur);
      return;
    }
    const auto& kids = tree_node(x).kids;
    for (size_t i = 0; i < kids.size(); ++i) {
      cur.push_back(int(i));
      self(self, kids[i]);
      cur.pop_back();
    }
  };
  if (t > kShoot) walk(walk, t);
  int n = int(paths.size());
  auto lca = [&](int a, int b) {
    size_t d = 0;
    while (d < paths[a].size() && d < paths[b].size() && paths[a][d] == paths[b][d]) ++d;
    return int(d);
  };
  std::vector<int8_t> out;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        int ab = lca(a, b), bc = lca(b, c);
        out.push_back(ab == bc ? 0 : (ab > bc ? 1 : 2));
      }
  std::lock_guard lk(S.mu);
  return S.shapes.emplace(t, std::move(out)).first->second;
}

bool RightMoving::operator()(TreeId s, TreeId t) const {
  if (tree_inputs(s) < 3) return true;
  const auto& a = triple_shapes(s);
  const auto& b = triple_shapes(t);
  for (size_t k = 0; k < a.size(); ++k)
    if (!ok[a[k]][b[k]]) return false;
  return true;
}

int tree_compare(TreeId a, TreeId b) {
  if (a == b) return 0;
  auto rank = [](TreeId x) { return x <= kShoot ? x : 1; };
  if (rank(a) != rank(b)) return rank(a) < rank(b) ? -1 : 1;
  const TreeNode& x = tree_node(a);
  const TreeNode& y = tree_node(b);
  if (x.inputs != y.inputs) return x.inputs < y.inputs ? -1 : 1;
  if (x.verts != y.verts) return x.verts < y.verts ? -1 : 1;
  if (x.wt != y.wt) return x.wt < y.wt ? -1 : 1;
  if (x.w != y.w) return x.w < y.w ? -1 : 1;
  if (x.kids.size() != y.kids.size()) return x.kids.size() < y.kids.size() ? -1 : 1;
  for (size_t i = 0; i < x.kids.size(); ++i)
    if (int c = tree_compare(x.kids[i], y.kids[i])) return c;
  return 0;
}

std::string tree_str(TreeId t, int N) {
  if (t == kStump) return "T";
  if (t == kShoot) return "|";
  if (t == kZero) return "0";
  const TreeNode& nd = tree_node(t);
  std::string s = "(";
  for (size_t i = 0; i < nd.kids.size(); ++i) {
    if (i) s += ' ';
    s += tree_str(nd.kids[i], N);
  }
  s += ')';
  if (!nd.w.zero()) s += "^" + weight_str(nd.w, N);
  return s;
}

namespace {
struct TreeParser {
  const std::string& s;
  size_t p = 0;
  void ws() {
    while (p < s.size() && s[p] == ' ') ++p;
  }
  TreeId node() {
    ws();
    if (p >= s.size()) throw std::invalid_argument("tree_parse: eof");
    if (s[p] == '|') return ++p, kShoot;
    if (s[p] == 'T') return ++p, kStump;
    if (s[p] != '(') throw std::invalid_argument("tree_parse: at " + std::to_string(p));
    ++p;
    std::vector<TreeId> kids;
    for (ws(); p < s.size() && s[p] != ')'; ws()) kids.push_back(node());
    if (p >= s.size()) throw std::invalid_argument("tree_parse: unclosed");
    ++p;
    Weight w;
    if (p < s.size() && s[p] == '^') {
      ++p;
      while (p < s.size() && s[p] == 'e') {
        ++p;
        int c = 0;
        while (p < s.size() && isdigit((unsigned char)s[p])) c = c * 10 + (s[p++] - '0');
        if (c >= kSlots) throw std::invalid_argument("tree_parse: colour");
        w.e[c]++;
        if (p < s.size() && s[p] == '+') ++p;
      }
    }
    if (!tree_stable(w, int(kids.size()))) throw std::invalid_argument("tree_parse: unstable vertex");
    return tree_make(w, std::move(kids));
  }
};
}  // namespace

TreeId tree_parse(const std::string& s) {
  TreeParser P{s};
  TreeId t = P.node();
  P.ws();
  if (P.p != s.size()) throw std::invalid_argument("tree_parse: trailing");
  return t;
}

// enumeration: a forest of k subtrees with total n inputs and weight w, then a root
namespace {
struct Enum {
  std::map<std::pair<int, Weight>, std::vector<TreeId>> memo;  // trees incl. shoot
  std::map<std::tuple<int, Weight, int>, std::vector<std::vector<TreeId>>> forests;

  const std::vector<TreeId>& trees(int n, const Weight& w) {
    auto key = std::make_pair(n, w);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    std::vector<TreeId> out;
    if (n == 1 && w.zero()) out.push_back(kShoot);
    // root weight wr, k kids; each kid is a shoot or a tree
    for (const Weight& wr : sub_weights(w)) {
      Weight rest = w - wr;
      int maxk = n + rest.total();  // every kid carries an input or weight
      for (int k = 0; k <= maxk; ++k) {
        if (!tree_stable(wr, k)) continue;
        if (k == 1 && wr.zero()) continue;
        for (auto& f : forest(n, rest, k)) out.push_back(tree_make(wr, f));
      }
    }
    return memo[key] = out;
  }

  const std::vector<std::vector<TreeId>>& forest(int n, const Weight& w, int k) {
    auto key = std::make_tuple(n, w, k);
    auto it = forests.find(key);
    if (it != forests.end()) return it->second;
    std::vector<std::vector<TreeId>> out;
    if (k == 0) {
      if (n == 0 && w.zero()) out.push_back({});
    } else {
      for (int n1 = 0; n1 <= n; ++n1)
        for (const Weight& w1 : sub_weights(w)) {
          if (n1 == 0 && w1.zero()) continue;
          const auto& tails = forest(n - n1, w - w1, k - 1);
          if (tails.empty()) continue;
          const auto& first = trees(n1, w1);
          for (TreeId f : first)
            for (auto& tl : tails) {
              std::vector<TreeId> v{f};
              v.insert(v.end(), tl.begin(), tl.end());
              out.push_back(std::move(v));
            }
        }
    }
    return forests[key] = out;
  }
};
}  // namespace

std::vector<TreeId> trees_with(int n, const Weight& w) {
  static std::mutex mu;
  static Enum E;
  std::lock_guard lk(mu);
  std::vector<TreeId> r;
  for (TreeId t : E.trees(n, w))
    if (t != kShoot) r.push_back(t);
  return r;
}

}  // namespace ainfty
