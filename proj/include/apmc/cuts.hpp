#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "apmc/cuts_types.hpp"
#include "apmc/flow.hpp"
#include "apmc/graph.hpp"

namespace apmc {

struct NotACutError : std::runtime_error {
  NotACutError() : std::runtime_error("arc set is not an s-t cut") {}
};

// (S_M, T_M) of a cut; throws NotACutError if t stays reachable.
std::pair<std::vector<int>, std::vector<int>> sides(const MultiDigraph& g, int s,
                                                    int t, const ArcSet& arcs);

Cut make_cut(const MultiDigraph& g, int s, int t, const ArcSet& arcs);

// M >= M2 iff T_M is a subset of T_M2 (both cuts of the same (g,s,t)).
bool later_than(const Cut& m, const Cut& m2);
bool strictly_later(const Cut& m, const Cut& m2);
bool earlier_than(const Cut& m, const Cut& m2);

bool is_minimal_cut(const MultiDigraph& g, int s, int t, const ArcSet& arcs);

// Definitional checks against all arc subsets of size <= |arcs| (guarded by
// the brute-force arc limit).
bool is_latest_cut(const MultiDigraph& g, int s, int t, const ArcSet& arcs);
bool is_earliest_cut(const MultiDigraph& g, int s, int t, const ArcSet& arcs);

// Contract S_M plus head(a) into s, take the latest min-cut there. Absent if
// head(a) = t. Requires a in M.
std::optional<Cut> arc_replacement(const MultiDigraph& g, int s, int t,
                                   const Cut& m, ArcId a);

// Arc-replacement closure seeded at the unique latest min-cut, then a latest
// filter. {{}} when t is unreachable, {} when the min-cut exceeds k.
CutFamily latest_cuts_upto_k(const MultiDigraph& g, int s, int t, int k);
CutFamily earliest_cuts_upto_k(const MultiDigraph& g, int s, int t, int k);

// Per-vertex option sets for split-covering checks: earliest s-v cuts in (V,a1)
// and latest v-t cuts in (V,a2). Unreachable pairs carry the {{}} family, so
// the unreachability clause is the empty-member short-circuit.
struct SplitFamilies {
  std::vector<CutFamily> earliest_a1;  // indexed by v; entry for v == s unused
  std::vector<CutFamily> latest_a2;    // indexed by v; entry for v == t unused
};

SplitFamilies split_families(const MultiDigraph& g, int s, int t,
                             const ArcSplit& split, int k);

bool check_split_covering(const MultiDigraph& g, int s, int t, const ArcSplit& split,
                          const ArcSet& m, const SplitFamilies& families);

}  // namespace apmc
