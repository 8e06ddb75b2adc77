#pragma once

#include <algorithm>
#include <iterator>
#include <optional>
#include <unordered_map>
#include <vector>

namespace ainfty {

using SparseVec = std::vector<int>;  // sorted, no repeats

inline void xor_into(SparseVec& a, const SparseVec& b) {
  SparseVec r;
  r.reserve(a.size() + b.size());
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  a.swap(r);
}

// Column reduction over F_2, pivot = largest row index.
class ColumnBasis {
  std::unordered_map<int, int> pivot_;
  std::vector<SparseVec> cols_;
  std::vector<SparseVec> combo_;
  bool track_;
  int added_ = 0;

 public:
  explicit ColumnBasis(bool track = false) : track_(track) {}

  // returns true if the column was independent
  bool add(SparseVec col) {
    SparseVec combo;
    if (track_) combo.push_back(added_);
    ++added_;
    while (!col.empty()) {
      auto it = pivot_.find(col.back());
      if (it == pivot_.end()) break;
      xor_into(col, cols_[it->second]);
      if (track_) xor_into(combo, combo_[it->second]);
    }
    if (col.empty()) return false;
    pivot_[col.back()] = int(cols_.size());
    cols_.push_back(std::move(col));
    if (track_) combo_.push_back(std::move(combo));
    return true;
  }

  int rank() const { return int(cols_.size()); }
  int added() const { return added_; }

  // combination of added columns summing to b, if any
  std::optional<SparseVec> solve(SparseVec b) const {
    SparseVec combo;
    while (!b.empty()) {
      auto it = pivot_.find(b.back());
      if (it == pivot_.end()) return std::nullopt;
      xor_into(b, cols_[it->second]);
      if (track_) xor_into(combo, combo_[it->second]);
    }
    return combo;
  }

  bool in_span(SparseVec b) const { return solve(std::move(b)).has_value(); }
};

}  // namespace ainfty
