#pragma once

#include <array>
#include <vector>

namespace apmc {

// Undirected 4-partite graph with n nodes per side; edge matrices for the six
// side pairs, indexed by local (0-based) node indices.
struct FourPartiteGraph {
  int n = 0;
  std::vector<std::vector<char>> ab, bc, cd, ac, bd, ad;

  explicit FourPartiteGraph(int n_per_side = 0) { resize(n_per_side); }

  void resize(int n_per_side) {
    n = n_per_side;
    for (auto* m : {&ab, &bc, &cd, &ac, &bd, &ad})
      m->assign(n, std::vector<char>(n, 0));
  }
};

}  // namespace apmc
