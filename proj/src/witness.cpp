#include "apmc/witness.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace apmc {

namespace {

bool covers_family(const std::vector<ArcSet>& family, const ArcSet& s) {
  for (const ArcSet& member : family)
    if (is_subset(member, s)) return true;
  return false;
}

bool covers_all(const WsInstance& inst, const ArcSet& s) {
  for (const auto& family : inst.families)
    if (!covers_family(family, s)) return false;
  return true;
}

// [minimal] via single-element removals; cover is monotone so this suffices.
bool is_minimal_cover(const WsInstance& inst, const ArcSet& s) {
  for (ArcId x : s)
    if (covers_all(inst, set_minus(s, x))) return false;
  return true;
}

}  // namespace

std::vector<ArcSet> solve_ws_pruning(const WsInstance& inst) {
  std::set<ArcSet> out;
  std::size_t c = inst.families.size();
  std::function<void(std::size_t, ArcSet&)> rec = [&](std::size_t i, ArcSet& s) {
    if (i == c) {
      if (is_minimal_cover(inst, s)) out.insert(s);
      return;
    }
    if (covers_family(inst.families[i], s)) {
      rec(i + 1, s);
      return;
    }
    for (const ArcSet& f : inst.families[i]) {
      ArcSet merged = set_union(s, f);
      if (static_cast<int>(merged.size()) <= inst.k) rec(i + 1, merged);
    }
  };
  ArcSet empty;
  rec(0, empty);
  std::vector<ArcSet> result(out.begin(), out.end());
  std::sort(result.begin(), result.end(), size_lex_less);
  return result;
}

std::vector<ArcSet> solve_ws_bruteforce(const WsInstance& inst) {
  ArcSet universe;
  for (const auto& family : inst.families)
    for (const ArcSet& member : family)
      for (ArcId x : member) universe.push_back(x);
  canonicalize(universe);
  if (universe.size() > 24) throw std::runtime_error("witness brute force too large");

  std::vector<ArcSet> result;
  std::function<void(std::size_t, ArcSet&)> go = [&](std::size_t start, ArcSet& cur) {
    if (covers_all(inst, cur) && is_minimal_cover(inst, cur)) result.push_back(cur);
    if (static_cast<int>(cur.size()) == inst.k) return;
    for (std::size_t i = start; i < universe.size(); ++i) {
      cur.push_back(universe[i]);
      go(i + 1, cur);
      cur.pop_back();
    }
  };
  ArcSet cur;
  go(0, cur);
  std::sort(result.begin(), result.end(), size_lex_less);
  result.erase(std::unique(result.begin(), result.end()), result.end());
  return result;
}

CutFamily filter_latest(const std::vector<ArcSet>& candidates,
                        const std::vector<OrderedFamily>& families, int k) {
  std::size_t n = candidates.size();
  // Covered member indices per candidate per family.
  std::vector<std::vector<std::vector<int>>> cov(n);
  for (std::size_t ci = 0; ci < n; ++ci) {
    cov[ci].resize(families.size());
    for (std::size_t x = 0; x < families.size(); ++x) {
      for (std::size_t mi = 0; mi < families[x].members.size(); ++mi)
        if (is_subset(families[x].members[mi], candidates[ci]))
          cov[ci][x].push_back(static_cast<int>(mi));
      if (cov[ci][x].empty()) throw OrderUndefinedError{};
    }
  }
  auto ge = [&](std::size_t a, std::size_t b) {
    for (std::size_t x = 0; x < families.size(); ++x)
      for (int i : cov[a][x])
        for (int j : cov[b][x])
          if (!families[x].ge[i][j]) return false;
    return true;
  };

  std::vector<char> keep(n, 1);
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t a = 0; a < n; ++a) {
      if (a == b || candidates[a].size() > candidates[b].size()) continue;
      if (ge(a, b) && !ge(b, a)) {
        keep[b] = 0;
        break;
      }
    }

  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < n; ++i)
    if (keep[i]) kept.push_back(i);
  std::sort(kept.begin(), kept.end(), [&](std::size_t a, std::size_t b) {
    return size_lex_less(candidates[a], candidates[b]);
  });

  CutFamily fam{{}, {}, CutKind::kLatest, k};
  fam.later.assign(kept.size(), std::vector<char>(kept.size(), 0));
  for (std::size_t i = 0; i < kept.size(); ++i) {
    fam.cuts.push_back(candidates[kept[i]]);
    for (std::size_t j = 0; j < kept.size(); ++j)
      fam.later[i][j] = ge(kept[i], kept[j]) ? 1 : 0;
  }
  return fam;
}

OrderedFamily family_with_minimum(const ArcSet& minimum,
                                  const std::vector<ArcSet>& cuts,
                                  const std::vector<std::vector<char>>& cuts_ge) {
  OrderedFamily fam;
  fam.members.push_back(minimum);
  for (const ArcSet& c : cuts) fam.members.push_back(c);
  std::size_t total = fam.members.size();
  fam.ge.assign(total, std::vector<char>(total, 0));
  fam.ge[0][0] = 1;
  for (std::size_t i = 1; i < total; ++i) {
    fam.ge[i][0] = 1;  // every cut is later than the designated minimum
    for (std::size_t j = 1; j < total; ++j) fam.ge[i][j] = cuts_ge[i - 1][j - 1];
  }
  return fam;
}

}  // namespace apmc
