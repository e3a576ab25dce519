#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "apmc/flow.hpp"
#include "apmc/graph.hpp"

namespace apmc::test {

// diamond: 0 -> 1 -> 3, 0 -> 2 -> 3 with arc ids 0:(0,1) 1:(0,2) 2:(1,3) 3:(2,3)
inline MultiDigraph diamond() {
  return MultiDigraph(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
}

// path: 0 -> 1 -> 2 with arc ids 0:(0,1) 1:(1,2)
inline MultiDigraph path3() { return MultiDigraph(3, {{0, 1}, {1, 2}}); }

inline std::set<ArcSet> as_set(const std::vector<ArcSet>& cuts) {
  return std::set<ArcSet>(cuts.begin(), cuts.end());
}

// Exact vertex connectivity by Menger: direct arcs count with multiplicity,
// plus the smallest internal vertex set whose removal disconnects the rest.
inline int vertex_connectivity_bruteforce(const MultiDigraph& g, int s, int t) {
  int direct = 0;
  std::vector<Arc> rest;
  for (const Arc& a : g.arcs()) {
    if (a.tail == s && a.head == t)
      ++direct;
    else
      rest.push_back(a);
  }
  MultiDigraph h = MultiDigraph::from_arcs(g.vertex_count(), rest);
  std::vector<int> internal;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (v != s && v != t) internal.push_back(v);
  // Removing every internal vertex always separates h (h has no direct arc),
  // so a minimum is always found.
  int best = static_cast<int>(internal.size());
  for (int mask = 0; mask < (1 << internal.size()); ++mask) {
    std::vector<char> removed(g.vertex_count(), 0);
    int size = 0;
    for (std::size_t i = 0; i < internal.size(); ++i)
      if (mask & (1 << i)) {
        removed[internal[i]] = 1;
        ++size;
      }
    if (size >= best) continue;
    std::vector<char> seen(g.vertex_count(), 0);
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int pos : h.out(v)) {
        int w = h.arc_at(pos).head;
        if (removed[w] || seen[w]) continue;
        seen[w] = 1;
        stack.push_back(w);
      }
    }
    if (!seen[t]) best = size;
  }
  return direct + best;
}

}  // namespace apmc::test
