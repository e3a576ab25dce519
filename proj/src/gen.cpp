#include "apmc/gen.hpp"

#include <map>
#include <random>

namespace apmc {

TreeGadget gen_tree_gadget(int depth, int mult) {
  // Levels 0..depth; node v has children 2v+1, 2v+2; 2^depth leaves.
  int internal = (1 << depth) - 1;
  int leaves = 1 << depth;
  int t = internal + leaves;
  std::vector<std::pair<int, int>> arcs;
  for (int v = 0; v < internal; ++v) {
    arcs.emplace_back(v, 2 * v + 1);
    arcs.emplace_back(v, 2 * v + 2);
  }
  for (int leaf = internal; leaf < internal + leaves; ++leaf)
    for (int i = 0; i < mult; ++i) arcs.emplace_back(leaf, t);
  TreeGadget gadget;
  gadget.graph = MultiDigraph(t + 1, arcs);
  gadget.root = 0;
  gadget.sink = t;
  return gadget;
}

namespace {

MultiDigraph gen_random(int n, int m, uint64_t seed, int max_mult, bool dag) {
  std::mt19937_64 rng(seed);
  std::map<std::pair<int, int>, int> mult;
  std::vector<std::pair<int, int>> arcs;
  int guard = 50 * m + 100;
  while (static_cast<int>(arcs.size()) < m && guard-- > 0) {
    int u = static_cast<int>(rng() % n);
    int v = static_cast<int>(rng() % n);
    if (u == v) continue;
    if (dag && u > v) std::swap(u, v);
    if (mult[{u, v}] >= max_mult) continue;
    mult[{u, v}]++;
    arcs.emplace_back(u, v);
  }
  return MultiDigraph(n, arcs);
}

}  // namespace

MultiDigraph gen_random_dag(int n, int m, uint64_t seed, int max_mult) {
  return gen_random(n, m, seed, max_mult, true);
}

MultiDigraph gen_random_digraph(int n, int m, uint64_t seed, int max_mult) {
  return gen_random(n, m, seed, max_mult, false);
}

FourPartiteGraph gen_random_4partite(int n, double p, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  FourPartiteGraph g4(n);
  for (auto* m : {&g4.ab, &g4.bc, &g4.cd, &g4.ac, &g4.bd, &g4.ad})
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) (*m)[x][y] = coin(rng) < p ? 1 : 0;
  return g4;
}

}  // namespace apmc
