#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "apmc/bitset.hpp"
#include "apmc/sets.hpp"

namespace apmc {

struct CyclicGraphError : std::runtime_error {
  CyclicGraphError() : std::runtime_error("graph has a directed cycle") {}
};
struct InvalidOrderError : std::runtime_error {
  InvalidOrderError() : std::runtime_error("order is not topological") {}
};

struct Arc {
  ArcId id;
  int tail;
  int head;
};

// Unit-capacity multi-digraph. Arc ids are unique and stable: subgraph,
// reversal and contraction preserve them, so cuts reported as id sets stay
// meaningful across those operations. Parallel arcs are repeated entries;
// self-loops are rejected at construction.
class MultiDigraph {
 public:
  MultiDigraph() = default;
  MultiDigraph(int n, const std::vector<std::pair<int, int>>& endpoints);
  // Explicit ids (subgraphs, contractions, transforms keep them stable).
  static MultiDigraph from_arcs(int n, std::vector<Arc> arcs);

  int vertex_count() const { return n_; }
  int arc_count() const { return static_cast<int>(arcs_.size()); }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const Arc& arc_at(std::size_t pos) const { return arcs_[pos]; }

  // Positions into arcs(), each list sorted by arc id.
  const std::vector<int>& out(int v) const { return out_[v]; }
  const std::vector<int>& in(int v) const { return in_[v]; }

  // Distinct heads of arcs leaving v, ascending.
  std::vector<int> out_neighbors(int v) const;
  std::vector<int> in_neighbors(int v) const;

  ArcId max_arc_id() const;

 private:
  void build_index();

  int n_ = 0;
  std::vector<Arc> arcs_;  // sorted by id
  std::vector<std::vector<int>> out_, in_;
};

struct ArcSplit {
  ArcSet a1;
  ArcSet a2;
};

enum class CrossArcs { kToA1, kToA2 };

// Kahn's scheme with a min-ordered frontier; throws CyclicGraphError.
std::vector<int> topological_order(const MultiDigraph& g);

// Prefix/suffix arc split of a topological order; cross arcs go to the side
// the caller picks. Throws InvalidOrderError if `order` is not topological.
ArcSplit arc_split_prefix(const MultiDigraph& g, const std::vector<int>& order,
                          int i, CrossArcs cross);

// Merge `block` into `into` (which must be in `block`). Arcs inside the block
// vanish; surviving arcs keep ids with endpoints relabeled. The vertex count
// is unchanged; vertices of block other than `into` become isolated.
MultiDigraph contract(const MultiDigraph& g, const std::vector<int>& block, int into);

MultiDigraph reverse(const MultiDigraph& g);
MultiDigraph induced_subgraph(const MultiDigraph& g, const std::vector<int>& s);

// Footnote-2 transform: v becomes v_in -> v_out with a bottleneck arc, so
// vertex-capacitated connectivity of g equals arc connectivity between
// split_in(s)..split_out(t) images. Original arcs keep their ids; the
// bottleneck arc of vertex v gets id m + v.
MultiDigraph split_vertices(const MultiDigraph& g);
inline int split_in(int v) { return 2 * v; }
inline int split_out(int v) { return 2 * v + 1; }

// Reachability in g with the arcs in `removed` (sorted ids) deleted.
std::vector<char> reachable_from(const MultiDigraph& g, int s, const ArcSet& removed = {});
std::vector<char> reaching_to(const MultiDigraph& g, int t, const ArcSet& removed = {});

// Bitset-row transitive closure (reach[v] has bit w iff v reaches w, v != w
// included as reach[v].test(v) = true).
std::vector<Bitset> transitive_closure(const MultiDigraph& g);

}  // namespace apmc
