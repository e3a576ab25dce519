#pragma once

#include <cstdint>

#include "apmc/fourpartite.hpp"
#include "apmc/graph.hpp"

namespace apmc {

// Full binary tree of the given depth with arcs directed away from the root
// (vertex 0), plus a sink t with `mult` parallel arcs from every leaf.
// Witnesses the Catalan tightness of the latest k-cut bound.
struct TreeGadget {
  MultiDigraph graph;
  int root = 0;
  int sink = 0;
};
TreeGadget gen_tree_gadget(int depth, int mult);

// m arcs along the identity topological order, multiplicity capped.
MultiDigraph gen_random_dag(int n, int m, uint64_t seed, int max_mult = 3);
MultiDigraph gen_random_digraph(int n, int m, uint64_t seed, int max_mult = 3);
FourPartiteGraph gen_random_4partite(int n, double p, uint64_t seed);

}  // namespace apmc
