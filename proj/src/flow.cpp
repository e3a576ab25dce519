#include "apmc/flow.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <queue>

namespace apmc {

namespace {

// One BFS over the residual graph; arcs explored in id order so parents are
// picked by lowest arc id. Returns true and augments if t was reached.
bool augment(const MultiDigraph& g, std::vector<char>& flow, int s, int t) {
  int n = g.vertex_count();
  std::vector<int> parent_arc(n, -1);
  std::vector<char> parent_dir(n, 0);  // 1 = forward, 0 = backward
  std::vector<char> seen(n, 0);
  std::queue<int> q;
  q.push(s);
  seen[s] = 1;
  while (!q.empty() && !seen[t]) {
    int v = q.front();
    q.pop();
    for (int pos : g.out(v)) {
      const Arc& a = g.arc_at(pos);
      if (!flow[pos] && !seen[a.head]) {
        seen[a.head] = 1;
        parent_arc[a.head] = pos;
        parent_dir[a.head] = 1;
        q.push(a.head);
      }
    }
    for (int pos : g.in(v)) {
      const Arc& a = g.arc_at(pos);
      if (flow[pos] && !seen[a.tail]) {
        seen[a.tail] = 1;
        parent_arc[a.tail] = pos;
        parent_dir[a.tail] = 0;
        q.push(a.tail);
      }
    }
  }
  if (!seen[t]) return false;
  int v = t;
  while (v != s) {
    int pos = parent_arc[v];
    if (parent_dir[v]) {
      flow[pos] = 1;
      v = g.arc_at(pos).tail;
    } else {
      flow[pos] = 0;
      v = g.arc_at(pos).head;
    }
  }
  return true;
}

// Vertices with a residual path to t under the given flow.
std::vector<char> residual_reaching(const MultiDigraph& g, const std::vector<char>& flow, int t) {
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<int> stack{t};
  seen[t] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    // Residual arc u->v exists if (u,v) unsaturated; residual v->u if (u,v) saturated.
    for (int pos : g.in(v)) {
      const Arc& a = g.arc_at(pos);
      if (!flow[pos] && !seen[a.tail]) {
        seen[a.tail] = 1;
        stack.push_back(a.tail);
      }
    }
    for (int pos : g.out(v)) {
      const Arc& a = g.arc_at(pos);
      if (flow[pos] && !seen[a.head]) {
        seen[a.head] = 1;
        stack.push_back(a.head);
      }
    }
  }
  return seen;
}

std::vector<int> set_bits_to_vertices(const std::vector<char>& mask) {
  std::vector<int> out;
  for (int v = 0; v < static_cast<int>(mask.size()); ++v)
    if (mask[v]) out.push_back(v);
  return out;
}

}  // namespace

FlowResult max_flow_bounded(const MultiDigraph& g, int s, int t, int bound) {
  assert(s != t && bound >= 1);
  std::vector<char> flow(g.arc_count(), 0);
  int value = 0;
  while (value < bound && augment(g, flow, s, t)) ++value;
  FlowResult res;
  res.value = value;
  std::vector<char> reach_t = residual_reaching(g, flow, t);
  res.residual_reach_t = set_bits_to_vertices(reach_t);
  for (int pos = 0; pos < g.arc_count(); ++pos)
    if (flow[pos]) res.saturated.push_back(g.arc_at(pos).id);
  canonicalize(res.saturated);
  return res;
}

Cut latest_min_cut(const MultiDigraph& g, int s, int t) {
  FlowResult full = max_flow_bounded(g, s, t, g.arc_count() + 1);
  std::vector<char> in_t(g.vertex_count(), 0);
  for (int v : full.residual_reach_t) in_t[v] = 1;
  Cut cut;
  for (const Arc& a : g.arcs())
    if (!in_t[a.tail] && in_t[a.head]) cut.arcs.push_back(a.id);
  canonicalize(cut.arcs);
  cut.source_side = set_bits_to_vertices(reachable_from(g, s, cut.arcs));
  cut.target_side = set_bits_to_vertices(reaching_to(g, t, cut.arcs));
  return cut;
}

Cut earliest_min_cut(const MultiDigraph& g, int s, int t) {
  Cut rev = latest_min_cut(reverse(g), t, s);
  Cut cut;
  cut.arcs = rev.arcs;
  cut.source_side = set_bits_to_vertices(reachable_from(g, s, cut.arcs));
  cut.target_side = set_bits_to_vertices(reaching_to(g, t, cut.arcs));
  return cut;
}

namespace {

bool is_cut(const MultiDigraph& g, int s, int t, const ArcSet& arcs) {
  return !reachable_from(g, s, arcs)[t];
}

}  // namespace

std::pair<CutFamily, CutFamily> enumerate_extremal_cuts_bruteforce(
    const MultiDigraph& g, int s, int t, int k) {
  int m = g.arc_count();
  if (m > kBruteforceArcGuard) throw TooLargeError{};

  CutFamily earliest{{}, {}, CutKind::kEarliest, k};
  CutFamily latest{{}, {}, CutKind::kLatest, k};

  if (!reachable_from(g, s)[t]) {
    earliest.cuts = {ArcSet{}};
    earliest.later = {{1}};
    latest.cuts = {ArcSet{}};
    latest.later = {{1}};
    return {earliest, latest};
  }

  // All cuts of size <= k, each with its sides.
  struct Entry {
    ArcSet arcs;
    std::vector<char> s_side, t_side;
    bool minimal;
  };
  std::vector<Entry> all;
  std::vector<ArcId> ids;
  for (const Arc& a : g.arcs()) ids.push_back(a.id);
  std::sort(ids.begin(), ids.end());

  // Enumerate subsets of sizes 0..k.
  std::vector<int> comb;
  auto visit = [&](const ArcSet& subset) {
    if (!is_cut(g, s, t, subset)) return;
    Entry e;
    e.arcs = subset;
    e.s_side = reachable_from(g, s, subset);
    e.t_side = reaching_to(g, t, subset);
    e.minimal = true;
    for (std::size_t drop = 0; drop < subset.size() && e.minimal; ++drop) {
      ArcSet sub = subset;
      sub.erase(sub.begin() + static_cast<long>(drop));
      if (is_cut(g, s, t, sub)) e.minimal = false;
    }
    all.push_back(std::move(e));
  };
  // Simple recursive combination enumerator.
  std::function<void(std::size_t, ArcSet&)> go = [&](std::size_t start, ArcSet& cur) {
    visit(cur);
    if (static_cast<int>(cur.size()) == k) return;
    for (std::size_t i = start; i < ids.size(); ++i) {
      cur.push_back(ids[i]);
      go(i + 1, cur);
      cur.pop_back();
    }
  };
  ArcSet cur;
  go(0, cur);

  auto side_subset = [](const std::vector<char>& a, const std::vector<char>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] && !b[i]) return false;
    return true;
  };
  auto side_equal = [](const std::vector<char>& a, const std::vector<char>& b) {
    return a == b;
  };

  // Keep minimal cuts that are extremal against every enumerated cut of
  // smaller-or-equal size (Definition 2.1, checked over subsets <= k which is
  // exhaustive since any disqualifying cut has size <= |M| <= k).
  for (const Entry& e : all) {
    if (!e.minimal) continue;
    bool is_latest = true, is_earliest = true;
    for (const Entry& o : all) {
      if (o.arcs == e.arcs || o.arcs.size() > e.arcs.size()) continue;
      if (side_subset(o.t_side, e.t_side) && !side_equal(o.t_side, e.t_side)) is_latest = false;
      if (side_subset(o.s_side, e.s_side) && !side_equal(o.s_side, e.s_side)) is_earliest = false;
    }
    // Equal size, strictly later/earlier cuts also disqualify.
    for (const Entry& o : all) {
      if (o.arcs == e.arcs || o.arcs.size() != e.arcs.size()) continue;
      if (side_subset(o.t_side, e.t_side) && !side_equal(o.t_side, e.t_side)) is_latest = false;
      if (side_subset(o.s_side, e.s_side) && !side_equal(o.s_side, e.s_side)) is_earliest = false;
    }
    if (is_latest) latest.cuts.push_back(e.arcs);
    if (is_earliest) earliest.cuts.push_back(e.arcs);
  }
  std::sort(latest.cuts.begin(), latest.cuts.end(), size_lex_less);
  std::sort(earliest.cuts.begin(), earliest.cuts.end(), size_lex_less);

  auto fill_later = [&](CutFamily& fam) {
    std::size_t c = fam.cuts.size();
    std::vector<std::vector<char>> t_sides(c);
    for (std::size_t i = 0; i < c; ++i) t_sides[i] = reaching_to(g, t, fam.cuts[i]);
    fam.later.assign(c, std::vector<char>(c, 0));
    for (std::size_t i = 0; i < c; ++i)
      for (std::size_t j = 0; j < c; ++j)
        fam.later[i][j] = side_subset(t_sides[i], t_sides[j]) ? 1 : 0;
  };
  fill_later(latest);
  fill_later(earliest);
  return {earliest, latest};
}

int vertex_connectivity_bounded(const MultiDigraph& g, int s, int t, int k) {
  assert(s != t);
  MultiDigraph split = split_vertices(g);
  return max_flow_bounded(split, split_out(s), split_in(t), k).value;
}

std::optional<std::array<int, 4>> find_4clique_bruteforce(const FourPartiteGraph& g4) {
  for (int a = 0; a < g4.n; ++a)
    for (int b = 0; b < g4.n; ++b) {
      if (!g4.ab[a][b]) continue;
      for (int c = 0; c < g4.n; ++c) {
        if (!g4.bc[b][c] || !g4.ac[a][c]) continue;
        for (int d = 0; d < g4.n; ++d)
          if (g4.cd[c][d] && g4.bd[b][d] && g4.ad[a][d])
            return std::array<int, 4>{a, b, c, d};
      }
    }
  return std::nullopt;
}

}  // namespace apmc
