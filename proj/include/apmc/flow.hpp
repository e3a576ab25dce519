#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

#include "apmc/cuts_types.hpp"
#include "apmc/fourpartite.hpp"
#include "apmc/graph.hpp"

namespace apmc {

struct TooLargeError : std::runtime_error {
  TooLargeError() : std::runtime_error("instance exceeds brute-force guard") {}
};

struct FlowResult {
  int value = 0;                     // min(bound, number of arc-disjoint s-t paths)
  std::vector<int> residual_reach_t; // T_{s,t}: vertices with a residual path to t
  ArcSet saturated;                  // support of the flow found
};

// Ford-Fulkerson with BFS augmentation, deterministic lowest-arc-id tie-break.
FlowResult max_flow_bounded(const MultiDigraph& g, int s, int t, int bound);

// The unique latest s-t min-cut M = A cap (complement(T) x T); empty cut when
// t is unreachable.
Cut latest_min_cut(const MultiDigraph& g, int s, int t);
Cut earliest_min_cut(const MultiDigraph& g, int s, int t);

// Definitional enumeration over all arc subsets of size <= k. Guarded.
std::pair<CutFamily, CutFamily> enumerate_extremal_cuts_bruteforce(
    const MultiDigraph& g, int s, int t, int k);

// min(k, vertex connectivity), via split_vertices + max_flow_bounded. Unit
// arc capacities: parallel and direct arcs each count once.
int vertex_connectivity_bounded(const MultiDigraph& g, int s, int t, int k);

// First 4-clique in lexicographic (a,b,c,d) order, if any.
std::optional<std::array<int, 4>> find_4clique_bruteforce(const FourPartiteGraph& g4);

inline constexpr int kBruteforceArcGuard = 20;

}  // namespace apmc
