#pragma once

#include <map>
#include <mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ainfty/trees.hpp"

namespace ainfty {

// a pair S (x) T; the Y exponents are implicit: y1 = w - wt(S), y2 = w - wt(T)
struct TreePair {
  TreeId s = kShoot, t = kShoot;
  auto operator<=>(const TreePair&) const = default;
  bool operator==(const TreePair&) const = default;
};
using PairChain = std::vector<TreePair>;  // sorted, no repeats

int pair_dim(const TreePair& p);
PairChain pair_boundary(const TreePair& p);
PairChain pair_boundary(const PairChain& c);
std::string pair_str(const TreePair& p, int N);

// the part of w on the left (e_1..e_{N+1}) and on the right (e_0)
Weight weight_left(const Weight& w);
Weight weight_right(const Weight& w);

struct CorollaKey {
  int n = 0;
  Weight w;
  auto operator<=>(const CorollaKey&) const = default;
};

struct DiagonalParams {
  int N = 3;
  // corollas requested: n <= maxInputs, n + 2|w| <= maxDegree, |w| <= maxWeight
  int maxInputs = 6;
  int maxDegree = 8;
  int maxWeight = 4;
  bool rightMoving = true;
  RightMoving rm;
};

struct CorollaStats {
  int unknowns = 0;
  int rank = 0;  // rank of the boundary on the unknowns
  int terms = 0;
};

class Diagonal {
 public:
  explicit Diagonal(const DiagonalParams& p);

  const DiagonalParams& params() const { return p_; }
  bool has(int n, const Weight& w) const { return table_.count({n, w}) > 0; }
  const PairChain& corolla_value(int n, const Weight& w) const;
  const std::map<CorollaKey, PairChain>& table() const { return table_; }
  const std::map<CorollaKey, CorollaStats>& stats() const { return stats_; }
  bool complete() const { return errors_.empty(); }
  const std::vector<std::string>& errors() const { return errors_; }

  // value on any tree whose vertices are all in the table, by stacking at the root
  PairChain operator()(TreeId t) const;
  bool covers(TreeId t) const;

  // overwrite a corolla value (mutation tests)
  void set_value(int n, const Weight& w, PairChain c);

 private:
  void build_one(const CorollaKey& k);
  PairChain solve(const CorollaKey& k, const PairChain& rhs, CorollaStats& st);

  DiagonalParams p_;
  std::map<CorollaKey, PairChain> table_;
  std::map<CorollaKey, CorollaStats> stats_;
  std::vector<std::string> errors_;
  mutable std::mutex mu_;
  mutable std::unordered_map<TreeId, PairChain> memo_;
};

// the seeds: Gamma^{2,0}, Gamma^{0,e_0} = T (x) Psi_0^{e_0}, Gamma^{0,e_i} = Psi_0^{e_i} (x) T
PairChain diagonal_seed(int n, const Weight& w, int N);

// glue pair chains into every input of a pair chain's trees
PairChain pair_subst(const PairChain& root, const std::vector<const PairChain*>& kids);

}  // namespace ainfty
