#include "apmc/apmc_iterative.hpp"

#include <algorithm>
#include <map>

#include "apmc/witness.hpp"

namespace apmc {

namespace {

CutFamily unreachable_family(int k) {
  CutFamily fam{{ArcSet{}}, {{1}}, CutKind::kLatest, k};
  return fam;
}

}  // namespace

ApmcTable all_pairs_latest_cuts(const MultiDigraph& g, int k) {
  std::vector<int> order = topological_order(g);
  int n = g.vertex_count();

  ApmcTable table(n, k);
  // Pairs against the topological order are trivial; pre-fill everything as
  // unreachable and let the DP overwrite forward pairs.
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      if (s != t) table.at(s, t) = unreachable_family(k);

  for (int i = n - 1; i >= 0; --i) {
    int v = order[i];
    // Parallel-arc bundles per distinct head, heads ascending.
    std::map<int, ArcSet> bundles;
    for (int pos : g.out(v)) bundles[g.arc_at(pos).head].push_back(g.arc_at(pos).id);
    for (auto& [head, bundle] : bundles) canonicalize(bundle);

    for (int j = i + 1; j < n; ++j) {
      int t = order[j];
      std::vector<OrderedFamily> families;
      bool impossible = false;
      for (auto& [head, bundle] : bundles) {
        bool bundle_fits = static_cast<int>(bundle.size()) <= k;
        if (head == t) {
          if (!bundle_fits) {
            impossible = true;
            break;
          }
          families.push_back(family_with_minimum(bundle, {}, {}));
          continue;
        }
        const CutFamily& sub = table.at(head, t);
        if (!bundle_fits && sub.cuts.empty()) {
          impossible = true;  // head is relevant but neither option encodable
          break;
        }
        if (bundle_fits) {
          families.push_back(family_with_minimum(bundle, sub.cuts, sub.later));
        } else {
          OrderedFamily fam{sub.cuts, sub.later};
          families.push_back(std::move(fam));
        }
      }
      if (impossible) {
        table.at(v, t) = CutFamily{{}, {}, CutKind::kLatest, k};
        continue;
      }
      WsInstance inst;
      inst.k = k;
      for (const auto& fam : families) inst.families.push_back(fam.members);
      std::vector<ArcSet> candidates = solve_ws_pruning(inst);
      table.at(v, t) = filter_latest(candidates, families, k);
    }
  }
  return table;
}

}  // namespace apmc
