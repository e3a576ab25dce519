#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "apmc/apmc_table.hpp"
#include "apmc/codes.hpp"
#include "apmc/graph.hpp"

namespace apmc {

struct DimensionMismatchError : std::runtime_error {
  DimensionMismatchError() : std::runtime_error("code matrix dimensions do not match") {}
};

// Matrix of tensor codewords over vertex index ranges. Zero entries stand for
// vacuous families (unreachable pair, the {{}} family); Ones entries stand
// for families that are required but carry no <=k-encodable member (> k
// parallel arcs, or an above-k family) and absorb everything under AND/OR.
class CodeMatrix {
 public:
  enum class EntryKind : uint8_t { kZero, kOnes, kTensor };
  struct Entry {
    EntryKind kind = EntryKind::kZero;
    Bitset bits;
  };

  CodeMatrix() = default;
  CodeMatrix(int rows, int cols, int dim, int base_len)
      : rows_(rows), cols_(cols), dim_(dim), base_len_(base_len),
        entries_(static_cast<std::size_t>(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int dim() const { return dim_; }
  int base_len() const { return base_len_; }

  Entry& at(int i, int j) { return entries_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Entry& at(int i, int j) const {
    return entries_[static_cast<std::size_t>(i) * cols_ + j];
  }

 private:
  int rows_ = 0, cols_ = 0, dim_ = 0, base_len_ = 0;
  std::vector<Entry> entries_;
};

// Lift X by K free axes on the right, Y by K on the left, then take the
// coordinate-wise boolean matrix product: Z'[i][j] = OR_a X'[i][a] & Y'[a][j]
// over 2K dimensions.
CodeMatrix star_product(const CodeMatrix& x, const CodeMatrix& y,
                        uint64_t bit_guard = kTensorBitGuard);

struct RecursiveOptions {
  int per_side_k_cap = 4;                    // max family size encodable per operand
  uint64_t tensor_bit_guard = kTensorBitGuard;
  bool strict_codes = false;  // LimitExceeded instead of the pruning fallback
};

// Latest <=k-cut family for (s,t) from one known min-cut: a late-covering
// instance over the min-cut's arcs (cover the arc itself or a latest cut of
// its head); `lookup` serves latest families of (head, t) pairs.
using LatestLookup = std::function<const CutFamily&(int, int)>;
CutFamily fix_to_latest(const MultiDigraph& g, int s, int t, const ArcSet& mincut,
                        int k, const LatestLookup& lookup);

// Divide-and-conquer of the topological order with star products over encoded
// cut families; identical table semantics to all_pairs_latest_cuts. Merges
// whose tensor parameters exceed the guard fall back to solving the same
// Witness Superset instances with the pruning recursion (or throw
// LimitExceeded in strict mode).
ApmcTable all_pairs_latest_cuts_recursive(const MultiDigraph& g, int k,
                                          const RecursiveOptions& opts = {});

}  // namespace apmc
