#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ainfty/ring.hpp"

namespace ainfty {

// Interned stably weighted planar trees.
// Tree ids: kShoot is the bare leaf, kStump the 0-input unit, kZero means "no tree".
// Internal nodes get ids >= 1 and are shared between trees.
using TreeId = int;
constexpr TreeId kShoot = 0;
constexpr TreeId kStump = -1;
constexpr TreeId kZero = -2;

struct TreeNode {
  Weight w;
  std::vector<TreeId> kids;  // kShoot marks an input leaf
  int inputs = 0;
  int verts = 0;
  Weight wt;  // total weight
};

const TreeNode& tree_node(TreeId t);
TreeId tree_make(const Weight& w, std::vector<TreeId> kids);
TreeId corolla(int n, const Weight& w);
size_t tree_store_size();

int tree_inputs(TreeId t);
Weight tree_weight(TreeId t);
int tree_verts(TreeId t);  // -1 for the stump
int tree_dim(TreeId t);
bool tree_stable(const Weight& w, int kids);

// all stable trees with exactly n inputs and total weight w
std::vector<TreeId> trees_with(int n, const Weight& w);

// F_2 chain of trees: sorted ids, no repeats
using TreeChain = std::vector<TreeId>;
const TreeChain& tree_boundary(TreeId t);

// substitute subs[k] into the k-th input; stumps follow the unit rule
TreeId tree_subst(TreeId t, const std::vector<TreeId>& subs);
TreeId tree_glue(TreeId t, int i, TreeId s);  // 1-based input
TreeId tree_stack(int i, int j, int n, TreeId s, TreeId t);

// weight-forgetting profile on a sorted 1-based subset
TreeId tree_profile(TreeId t, const std::vector<int>& I);

// 3-leaf shapes: 0 corolla, 1 left comb ((12)3), 2 right comb (1(23))
int shape3(TreeId t);

// basic right-moving pairs on three leaves, indexed [left shape][right shape]
struct RightMoving {
  bool ok[3][3] = {{false, false, true}, {true, true, true}, {false, false, true}};
  bool operator()(TreeId s, TreeId t) const;
};

// structural order, independent of interning order
int tree_compare(TreeId a, TreeId b);
std::string tree_str(TreeId t, int N);
TreeId tree_parse(const std::string& s);

}  // namespace ainfty
