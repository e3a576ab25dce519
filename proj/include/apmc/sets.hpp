#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

namespace apmc {

// Arc identifiers. Cuts and witness sets are canonically sorted id vectors.
using ArcId = int;
using ArcSet = std::vector<ArcId>;

inline void canonicalize(ArcSet& s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
}

inline bool is_subset(const ArcSet& sub, const ArcSet& super) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

inline ArcSet set_union(const ArcSet& a, const ArcSet& b) {
  ArcSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline bool contains(const ArcSet& s, ArcId x) {
  return std::binary_search(s.begin(), s.end(), x);
}

inline ArcSet set_minus(const ArcSet& s, ArcId x) {
  ArcSet out;
  out.reserve(s.size());
  for (ArcId a : s)
    if (a != x) out.push_back(a);
  return out;
}

// Order for deterministic family output: by size, then lexicographic.
inline bool size_lex_less(const ArcSet& a, const ArcSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace apmc
