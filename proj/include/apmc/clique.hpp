#pragma once

#include <functional>
#include <vector>

#include "apmc/fourpartite.hpp"
#include "apmc/graph.hpp"

namespace apmc {

// Estimates |B'_{a,d}| + |C'_{a,d}| per (a,d), via two integer matrix
// products over the edge/non-edge matrices.
struct EstimateTable {
  int n = 0;
  std::vector<std::vector<int>> value;  // value[a][d]
};

EstimateTable estimates(const FourPartiteGraph& g4);

// Layered DAG H on 4n nodes: A->B, B->C, C->D arcs for edges; A->C, B->D for
// non-edges. Node layout: A = [0,n), B = [n,2n), C = [2n,3n), D = [3n,4n).
MultiDigraph build_h(const FourPartiteGraph& g4);

inline int h_node_a(const FourPartiteGraph&, int a) { return a; }
inline int h_node_d(const FourPartiteGraph& g4, int d) { return 3 * g4.n + d; }

// Vertex connectivity callback: NC(a, d) between two nodes of an H graph.
using VertexConnectivitySolver = std::function<int(const MultiDigraph&, int, int)>;

// Exact NC through split_vertices + uncapped bounded flow.
VertexConnectivitySolver flow_nc_solver();

// True iff some edge {a,d} has NC(a,d) strictly above its estimate.
bool decide_4clique_unbounded(const FourPartiteGraph& g4,
                              const VertexConnectivitySolver& solver);

// One block (i,j) of the k-bounded reduction: copies a_x of A_i's nodes wired
// to B_x only, copies d_y wired from C_y only. Pads n up to a multiple of k
// with isolated nodes. Layout: A' = [0,nb*npad) with a_x at a*nb+x where
// nb = npad/k, then B, C, D' analogously.
struct BoundedBlock {
  MultiDigraph h;
  int npad = 0;        // padded per-side size
  int blocks = 0;      // npad / k
  int a_copy(int a_local, int x) const { return a_local * blocks + x; }
  int d_copy(int d_local, int y) const { return k_nodes_ + 2 * npad + d_local * blocks + y; }

  int k_nodes_ = 0;  // number of A' nodes = k * blocks
};

BoundedBlock build_h_bounded(const FourPartiteGraph& g4, int k, int i, int j);

bool decide_4clique_bounded(const FourPartiteGraph& g4, int k,
                            const VertexConnectivitySolver& solver);

}  // namespace apmc
