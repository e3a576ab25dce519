#pragma once

#include "apmc/apmc_table.hpp"
#include "apmc/graph.hpp"

namespace apmc {

// Reverse-topological DP: when processing v, each target's Witness Superset
// instance has one family per out-neighbor head h, holding the parallel-arc
// bundle v->h plus the already-computed latest <=k-cuts of (h, target).
// Throws CyclicGraphError on cyclic input.
ApmcTable all_pairs_latest_cuts(const MultiDigraph& g, int k);

}  // namespace apmc
