#include "apmc/cuts.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <functional>
#include <set>

namespace apmc {

namespace {

std::vector<int> mask_to_vertices(const std::vector<char>& mask) {
  std::vector<int> out;
  for (int v = 0; v < static_cast<int>(mask.size()); ++v)
    if (mask[v]) out.push_back(v);
  return out;
}

bool sorted_subset(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

std::pair<std::vector<int>, std::vector<int>> sides(const MultiDigraph& g, int s,
                                                    int t, const ArcSet& arcs) {
  auto s_mask = reachable_from(g, s, arcs);
  if (s_mask[t]) throw NotACutError{};
  auto t_mask = reaching_to(g, t, arcs);
  return {mask_to_vertices(s_mask), mask_to_vertices(t_mask)};
}

Cut make_cut(const MultiDigraph& g, int s, int t, const ArcSet& arcs) {
  Cut cut;
  cut.arcs = arcs;
  canonicalize(cut.arcs);
  auto [src, tgt] = sides(g, s, t, cut.arcs);
  cut.source_side = std::move(src);
  cut.target_side = std::move(tgt);
  return cut;
}

bool later_than(const Cut& m, const Cut& m2) {
  return sorted_subset(m.target_side, m2.target_side);
}

bool strictly_later(const Cut& m, const Cut& m2) {
  return later_than(m, m2) && m.target_side != m2.target_side;
}

bool earlier_than(const Cut& m, const Cut& m2) {
  return sorted_subset(m.source_side, m2.source_side);
}

bool is_minimal_cut(const MultiDigraph& g, int s, int t, const ArcSet& arcs) {
  if (reachable_from(g, s, arcs)[t]) return false;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    ArcSet sub = arcs;
    sub.erase(sub.begin() + static_cast<long>(i));
    if (!reachable_from(g, s, sub)[t]) return false;
  }
  return true;
}

namespace {

// Shared engine for the definitional latest/earliest checks: scan every cut
// of size <= |arcs| for one whose relevant side is properly contained.
bool is_extremal(const MultiDigraph& g, int s, int t, const ArcSet& arcs, CutKind kind) {
  if (g.arc_count() > kBruteforceArcGuard) throw TooLargeError{};
  if (reachable_from(g, s, arcs)[t]) throw NotACutError{};
  std::vector<int> own_side = kind == CutKind::kLatest
                                  ? mask_to_vertices(reaching_to(g, t, arcs))
                                  : mask_to_vertices(reachable_from(g, s, arcs));
  std::vector<ArcId> ids;
  for (const Arc& a : g.arcs()) ids.push_back(a.id);
  std::sort(ids.begin(), ids.end());

  bool extremal = true;
  std::function<void(std::size_t, ArcSet&)> go = [&](std::size_t start, ArcSet& cur) {
    if (!extremal) return;
    if (cur != arcs && !reachable_from(g, s, cur)[t]) {
      std::vector<int> other = kind == CutKind::kLatest
                                   ? mask_to_vertices(reaching_to(g, t, cur))
                                   : mask_to_vertices(reachable_from(g, s, cur));
      if (sorted_subset(other, own_side) && other != own_side) {
        extremal = false;
        return;
      }
    }
    if (cur.size() == arcs.size()) return;
    for (std::size_t i = start; i < ids.size(); ++i) {
      cur.push_back(ids[i]);
      go(i + 1, cur);
      cur.pop_back();
    }
  };
  ArcSet cur;
  go(0, cur);
  return extremal;
}

}  // namespace

bool is_latest_cut(const MultiDigraph& g, int s, int t, const ArcSet& arcs) {
  return is_extremal(g, s, t, arcs, CutKind::kLatest);
}

bool is_earliest_cut(const MultiDigraph& g, int s, int t, const ArcSet& arcs) {
  return is_extremal(g, s, t, arcs, CutKind::kEarliest);
}

std::optional<Cut> arc_replacement(const MultiDigraph& g, int s, int t,
                                   const Cut& m, ArcId a) {
  assert(contains(m.arcs, a));
  const Arc* arc = nullptr;
  for (const Arc& candidate : g.arcs())
    if (candidate.id == a) arc = &candidate;
  assert(arc != nullptr);
  if (arc->head == t) return std::nullopt;

  std::vector<int> block = m.source_side;
  block.push_back(arc->head);
  canonicalize(block);
  MultiDigraph contracted = contract(g, block, s);
  Cut inner = latest_min_cut(contracted, s, t);
  // Map back: ids are preserved, only the sides must be recomputed in g.
  return make_cut(g, s, t, inner.arcs);
}

CutFamily latest_cuts_upto_k(const MultiDigraph& g, int s, int t, int k) {
  CutFamily fam{{}, {}, CutKind::kLatest, k};
  if (!reachable_from(g, s)[t]) {
    fam.cuts = {ArcSet{}};
    fam.later = {{1}};
    return fam;
  }
  Cut seed = latest_min_cut(g, s, t);
  if (static_cast<int>(seed.arcs.size()) > k) return fam;  // min-cut above k

  std::set<ArcSet> seen;
  std::vector<Cut> pool;
  std::deque<std::size_t> queue;
  seen.insert(seed.arcs);
  pool.push_back(seed);
  queue.push_back(0);
  while (!queue.empty()) {
    std::size_t idx = queue.front();
    queue.pop_front();
    Cut current = pool[idx];
    for (ArcId a : current.arcs) {
      auto next = arc_replacement(g, s, t, current, a);
      if (!next || static_cast<int>(next->arcs.size()) > k) continue;
      if (seen.insert(next->arcs).second) {
        pool.push_back(*next);
        queue.push_back(pool.size() - 1);
      }
    }
  }

  // Latest filter: drop M when a kept M' is strictly later and not larger.
  std::vector<char> keep(pool.size(), 1);
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = 0; j < pool.size(); ++j) {
      if (i == j) continue;
      if (pool[j].arcs.size() <= pool[i].arcs.size() && strictly_later(pool[j], pool[i]))
        keep[i] = 0;
    }
  std::vector<Cut> kept;
  for (std::size_t i = 0; i < pool.size(); ++i)
    if (keep[i]) kept.push_back(pool[i]);
  std::sort(kept.begin(), kept.end(),
            [](const Cut& a, const Cut& b) { return size_lex_less(a.arcs, b.arcs); });

  fam.later.assign(kept.size(), std::vector<char>(kept.size(), 0));
  for (std::size_t i = 0; i < kept.size(); ++i) {
    fam.cuts.push_back(kept[i].arcs);
    for (std::size_t j = 0; j < kept.size(); ++j)
      fam.later[i][j] = later_than(kept[i], kept[j]) ? 1 : 0;
  }
  return fam;
}

CutFamily earliest_cuts_upto_k(const MultiDigraph& g, int s, int t, int k) {
  CutFamily fam = latest_cuts_upto_k(reverse(g), t, s, k);
  fam.kind = CutKind::kEarliest;
  return fam;
}

SplitFamilies split_families(const MultiDigraph& g, int s, int t,
                             const ArcSplit& split, int k) {
  int n = g.vertex_count();
  // (V, A1) keeps a1 arcs only; same vertex set.
  std::vector<Arc> a1_arcs, a2_arcs;
  for (const Arc& a : g.arcs()) {
    if (contains(split.a1, a.id))
      a1_arcs.push_back(a);
    else
      a2_arcs.push_back(a);
  }
  MultiDigraph g1 = MultiDigraph::from_arcs(n, a1_arcs);
  MultiDigraph g2 = MultiDigraph::from_arcs(n, a2_arcs);
  SplitFamilies fams;
  fams.earliest_a1.resize(n);
  fams.latest_a2.resize(n);
  for (int v = 0; v < n; ++v) {
    if (v != s) fams.earliest_a1[v] = earliest_cuts_upto_k(g1, s, v, k);
    if (v != t) fams.latest_a2[v] = latest_cuts_upto_k(g2, v, t, k);
  }
  return fams;
}

bool check_split_covering(const MultiDigraph& g, int s, int t, const ArcSplit&,
                          const ArcSet& m, const SplitFamilies& families) {
  int n = g.vertex_count();
  for (int v = 0; v < n; ++v) {
    bool covered = false;
    auto scan = [&](const CutFamily& fam) {
      for (const ArcSet& member : fam.cuts)
        if (is_subset(member, m)) covered = true;
    };
    if (v != s) scan(families.earliest_a1[v]);
    if (!covered && v != t) scan(families.latest_a2[v]);
    if (!covered) return false;
  }
  return true;
}

}  // namespace apmc
