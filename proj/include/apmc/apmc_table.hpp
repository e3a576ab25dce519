#pragma once

#include <vector>

#include "apmc/cuts_types.hpp"

namespace apmc {

// All-pairs table of latest <=k-cut families. Diagonal entries are unused.
// Value semantics per entry: the unreachable family {{}} is value 0; an empty
// family with the pair connected means "above k".
class ApmcTable {
 public:
  ApmcTable() = default;
  ApmcTable(int n, int k) : n_(n), k_(k), entries_(static_cast<std::size_t>(n) * n) {}

  int n() const { return n_; }
  int k() const { return k_; }

  CutFamily& at(int s, int t) { return entries_[static_cast<std::size_t>(s) * n_ + t]; }
  const CutFamily& at(int s, int t) const {
    return entries_[static_cast<std::size_t>(s) * n_ + t];
  }

  static constexpr int kDiagonal = -1;

  // 0..k, or k+1 as the above-k marker, kDiagonal on the diagonal.
  int value(int s, int t) const {
    if (s == t) return kDiagonal;
    const CutFamily& fam = at(s, t);
    if (fam.cuts.empty()) return k_ + 1;
    return fam.min_value();
  }

  std::vector<std::vector<int>> value_matrix() const {
    std::vector<std::vector<int>> m(n_, std::vector<int>(n_));
    for (int s = 0; s < n_; ++s)
      for (int t = 0; t < n_; ++t) m[s][t] = value(s, t);
    return m;
  }

 private:
  int n_ = 0;
  int k_ = 0;
  std::vector<CutFamily> entries_;
};

}  // namespace apmc
