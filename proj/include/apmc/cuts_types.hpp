#pragma once

#include <vector>

#include "apmc/sets.hpp"

namespace apmc {

// A cut with its sides for a fixed (g, s, t). Sides are sorted vertex lists:
// source_side = s-reachable and target_side = t-reaching in g minus arcs.
struct Cut {
  ArcSet arcs;
  std::vector<int> source_side;
  std::vector<int> target_side;
};

enum class CutKind { kEarliest, kLatest };

// An ordered collection of extremal cuts for one pair. later[i][j] means
// cuts[i] >= cuts[j] in the later-than partial order (reflexive).
struct CutFamily {
  std::vector<ArcSet> cuts;
  std::vector<std::vector<char>> later;
  CutKind kind = CutKind::kLatest;
  int k = 0;

  bool ge(std::size_t i, std::size_t j) const { return later[i][j] != 0; }

  // Family conventions: {} = no cut of size <= k exists (but the pair is
  // connected); {{}} = target unreachable, the empty cut.
  bool is_unreachable_family() const {
    return cuts.size() == 1 && cuts[0].empty();
  }
  // Min-cut value through this family: 0 for the unreachable family, the
  // smallest member size otherwise. Meaningless when empty (above k).
  int min_value() const {
    std::size_t best = cuts[0].size();
    for (const auto& c : cuts) best = std::min(best, c.size());
    return static_cast<int>(best);
  }
};

}  // namespace apmc
