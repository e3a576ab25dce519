#include "apmc/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace apmc {

MultiDigraph::MultiDigraph(int n, const std::vector<std::pair<int, int>>& endpoints)
    : n_(n) {
  arcs_.reserve(endpoints.size());
  ArcId id = 0;
  for (auto [u, v] : endpoints) arcs_.push_back(Arc{id++, u, v});
  build_index();
}

MultiDigraph MultiDigraph::from_arcs(int n, std::vector<Arc> arcs) {
  MultiDigraph g;
  g.n_ = n;
  g.arcs_ = std::move(arcs);
  std::sort(g.arcs_.begin(), g.arcs_.end(),
            [](const Arc& a, const Arc& b) { return a.id < b.id; });
  g.build_index();
  return g;
}

void MultiDigraph::build_index() {
  out_.assign(n_, {});
  in_.assign(n_, {});
  for (std::size_t pos = 0; pos < arcs_.size(); ++pos) {
    const Arc& a = arcs_[pos];
    if (a.tail < 0 || a.tail >= n_ || a.head < 0 || a.head >= n_)
      throw std::invalid_argument("arc endpoint out of range");
    if (a.tail == a.head) throw std::invalid_argument("self-loop rejected");
    if (pos > 0 && arcs_[pos - 1].id == a.id)
      throw std::invalid_argument("duplicate arc id");
    out_[a.tail].push_back(static_cast<int>(pos));
    in_[a.head].push_back(static_cast<int>(pos));
  }
}

std::vector<int> MultiDigraph::out_neighbors(int v) const {
  std::vector<int> heads;
  for (int pos : out_[v]) heads.push_back(arcs_[pos].head);
  std::sort(heads.begin(), heads.end());
  heads.erase(std::unique(heads.begin(), heads.end()), heads.end());
  return heads;
}

std::vector<int> MultiDigraph::in_neighbors(int v) const {
  std::vector<int> tails;
  for (int pos : in_[v]) tails.push_back(arcs_[pos].tail);
  std::sort(tails.begin(), tails.end());
  tails.erase(std::unique(tails.begin(), tails.end()), tails.end());
  return tails;
}

ArcId MultiDigraph::max_arc_id() const {
  ArcId m = -1;
  for (const Arc& a : arcs_) m = std::max(m, a.id);
  return m;
}

std::vector<int> topological_order(const MultiDigraph& g) {
  int n = g.vertex_count();
  std::vector<int> indeg(n, 0);
  for (const Arc& a : g.arcs()) indeg[a.head]++;
  std::priority_queue<int, std::vector<int>, std::greater<int>> frontier;
  for (int v = 0; v < n; ++v)
    if (indeg[v] == 0) frontier.push(v);
  std::vector<int> order;
  order.reserve(n);
  while (!frontier.empty()) {
    int v = frontier.top();
    frontier.pop();
    order.push_back(v);
    for (int pos : g.out(v)) {
      int w = g.arc_at(pos).head;
      if (--indeg[w] == 0) frontier.push(w);
    }
  }
  if (static_cast<int>(order.size()) != n) throw CyclicGraphError{};
  return order;
}

ArcSplit arc_split_prefix(const MultiDigraph& g, const std::vector<int>& order,
                          int i, CrossArcs cross) {
  int n = g.vertex_count();
  if (static_cast<int>(order.size()) != n) throw InvalidOrderError{};
  std::vector<int> pos(n, -1);
  for (int p = 0; p < n; ++p) {
    if (order[p] < 0 || order[p] >= n || pos[order[p]] != -1) throw InvalidOrderError{};
    pos[order[p]] = p;
  }
  for (const Arc& a : g.arcs())
    if (pos[a.tail] >= pos[a.head]) throw InvalidOrderError{};

  ArcSplit split;
  for (const Arc& a : g.arcs()) {
    bool tail_first = pos[a.tail] < i;
    bool head_first = pos[a.head] < i;
    if (tail_first && head_first)
      split.a1.push_back(a.id);
    else if (!tail_first && !head_first)
      split.a2.push_back(a.id);
    else
      (cross == CrossArcs::kToA1 ? split.a1 : split.a2).push_back(a.id);
  }
  canonicalize(split.a1);
  canonicalize(split.a2);
  return split;
}

MultiDigraph contract(const MultiDigraph& g, const std::vector<int>& block, int into) {
  std::vector<char> in_block(g.vertex_count(), 0);
  for (int v : block) in_block[v] = 1;
  if (!in_block[into]) throw std::invalid_argument("`into` must belong to block");
  std::vector<Arc> arcs;
  for (const Arc& a : g.arcs()) {
    int tail = in_block[a.tail] ? into : a.tail;
    int head = in_block[a.head] ? into : a.head;
    if (tail == head) continue;  // inside-block arcs and fresh self-loops drop
    arcs.push_back(Arc{a.id, tail, head});
  }
  return MultiDigraph::from_arcs(g.vertex_count(), std::move(arcs));
}

MultiDigraph reverse(const MultiDigraph& g) {
  std::vector<Arc> arcs;
  arcs.reserve(g.arcs().size());
  for (const Arc& a : g.arcs()) arcs.push_back(Arc{a.id, a.head, a.tail});
  return MultiDigraph::from_arcs(g.vertex_count(), std::move(arcs));
}

MultiDigraph induced_subgraph(const MultiDigraph& g, const std::vector<int>& s) {
  std::vector<char> keep(g.vertex_count(), 0);
  for (int v : s) keep[v] = 1;
  std::vector<Arc> arcs;
  for (const Arc& a : g.arcs())
    if (keep[a.tail] && keep[a.head]) arcs.push_back(a);
  return MultiDigraph::from_arcs(g.vertex_count(), std::move(arcs));
}

MultiDigraph split_vertices(const MultiDigraph& g) {
  int n = g.vertex_count();
  int m = g.arc_count();
  std::vector<Arc> arcs;
  arcs.reserve(m + n);
  for (const Arc& a : g.arcs())
    arcs.push_back(Arc{a.id, split_out(a.tail), split_in(a.head)});
  for (int v = 0; v < n; ++v) arcs.push_back(Arc{m + v, split_in(v), split_out(v)});
  return MultiDigraph::from_arcs(2 * n, std::move(arcs));
}

std::vector<char> reachable_from(const MultiDigraph& g, int s, const ArcSet& removed) {
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<int> stack{s};
  seen[s] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int pos : g.out(v)) {
      const Arc& a = g.arc_at(pos);
      if (!removed.empty() && contains(removed, a.id)) continue;
      if (!seen[a.head]) {
        seen[a.head] = 1;
        stack.push_back(a.head);
      }
    }
  }
  return seen;
}

std::vector<char> reaching_to(const MultiDigraph& g, int t, const ArcSet& removed) {
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<int> stack{t};
  seen[t] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int pos : g.in(v)) {
      const Arc& a = g.arc_at(pos);
      if (!removed.empty() && contains(removed, a.id)) continue;
      if (!seen[a.tail]) {
        seen[a.tail] = 1;
        stack.push_back(a.tail);
      }
    }
  }
  return seen;
}

std::vector<Bitset> transitive_closure(const MultiDigraph& g) {
  // Warshall over bitset rows; works on cyclic inputs too.
  int n = g.vertex_count();
  std::vector<Bitset> reach(n, Bitset(static_cast<std::size_t>(n)));
  for (int v = 0; v < n; ++v) {
    reach[v].set(static_cast<std::size_t>(v));
    for (int pos : g.out(v)) reach[v].set(static_cast<std::size_t>(g.arc_at(pos).head));
  }
  for (int k = 0; k < n; ++k)
    for (int v = 0; v < n; ++v)
      if (reach[v].test(static_cast<std::size_t>(k))) reach[v] |= reach[k];
  return reach;
}

}  // namespace apmc
