#pragma once

#include <stdexcept>
#include <vector>

#include "apmc/cuts_types.hpp"
#include "apmc/sets.hpp"

namespace apmc {

struct OrderUndefinedError : std::runtime_error {
  OrderUndefinedError() : std::runtime_error("candidate covers no member of some family") {}
};

// One Witness Superset instance: c set families over arc ids, each member of
// size <= k. A family containing the empty set is always covered.
struct WsInstance {
  std::vector<std::vector<ArcSet>> families;
  int k = 0;
};

// Recursion with pruning: all minimal <=k supersets covering one member of
// every family. Output deduplicated, sorted by (size, lex).
std::vector<ArcSet> solve_ws_pruning(const WsInstance& inst);

// Definitional oracle over all <=k subsets of the instance's universe.
std::vector<ArcSet> solve_ws_bruteforce(const WsInstance& inst);

// A family whose members carry a known internal later-order; ge[i][j] means
// members[i] >= members[j]. Used to compare candidate cuts without touching
// the graph: M' >= M iff every covered member of M' is >= every covered
// member of M, in every family.
struct OrderedFamily {
  std::vector<ArcSet> members;
  std::vector<std::vector<char>> ge;
};

// Keeps candidates that no other candidate strictly dominates (later per the
// family order, and not larger), and materializes the induced order. The
// candidates must each cover every family.
CutFamily filter_latest(const std::vector<ArcSet>& candidates,
                        const std::vector<OrderedFamily>& families, int k);

// Convenience: ge matrix for a family laid out [bundle, table cuts...] where
// the bundle (index 0) is earlier than everything and the table block carries
// a prior order.
OrderedFamily family_with_minimum(const ArcSet& minimum,
                                  const std::vector<ArcSet>& cuts,
                                  const std::vector<std::vector<char>>& cuts_ge);

}  // namespace apmc
