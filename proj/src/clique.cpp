#include "apmc/clique.hpp"

#include "apmc/flow.hpp"

namespace apmc {

EstimateTable estimates(const FourPartiteGraph& g4) {
  int n = g4.n;
  EstimateTable table;
  table.n = n;
  table.value.assign(n, std::vector<int>(n, 0));
  // |B'| = M * M' with M = A-B edges, M' = complemented B-D edges; |C'|
  // analogously with complemented A-C times C-D.
  for (int a = 0; a < n; ++a)
    for (int d = 0; d < n; ++d) {
      int bsum = 0, csum = 0;
      for (int b = 0; b < n; ++b) bsum += g4.ab[a][b] * (1 - g4.bd[b][d]);
      for (int c = 0; c < n; ++c) csum += (1 - g4.ac[a][c]) * g4.cd[c][d];
      table.value[a][d] = bsum + csum;
    }
  return table;
}

MultiDigraph build_h(const FourPartiteGraph& g4) {
  int n = g4.n;
  std::vector<std::pair<int, int>> arcs;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (g4.ab[a][b]) arcs.emplace_back(a, n + b);
  for (int b = 0; b < n; ++b)
    for (int c = 0; c < n; ++c)
      if (g4.bc[b][c]) arcs.emplace_back(n + b, 2 * n + c);
  for (int c = 0; c < n; ++c)
    for (int d = 0; d < n; ++d)
      if (g4.cd[c][d]) arcs.emplace_back(2 * n + c, 3 * n + d);
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c)
      if (!g4.ac[a][c]) arcs.emplace_back(a, 2 * n + c);
  for (int b = 0; b < n; ++b)
    for (int d = 0; d < n; ++d)
      if (!g4.bd[b][d]) arcs.emplace_back(n + b, 3 * n + d);
  return MultiDigraph(4 * n, arcs);
}

VertexConnectivitySolver flow_nc_solver() {
  return [](const MultiDigraph& h, int a, int d) {
    return vertex_connectivity_bounded(h, a, d, 2 * h.vertex_count() + 1);
  };
}

bool decide_4clique_unbounded(const FourPartiteGraph& g4,
                              const VertexConnectivitySolver& solver) {
  EstimateTable est = estimates(g4);
  MultiDigraph h = build_h(g4);
  for (int a = 0; a < g4.n; ++a)
    for (int d = 0; d < g4.n; ++d) {
      if (!g4.ad[a][d]) continue;
      int nc = solver(h, h_node_a(g4, a), h_node_d(g4, d));
      if (nc > est.value[a][d]) return true;
    }
  return false;
}

BoundedBlock build_h_bounded(const FourPartiteGraph& g4, int k, int i, int j) {
  int npad = ((g4.n + k - 1) / k) * k;  // pad with isolated nodes so k | n
  int nb = npad / k;

  BoundedBlock block;
  block.npad = npad;
  block.blocks = nb;
  block.k_nodes_ = k * nb;

  auto in_g = [&](const std::vector<std::vector<char>>& m, int x, int y) {
    return x < g4.n && y < g4.n && m[x][y];
  };
  // A-side originals for this block are A_i = [i*k, (i+1)*k), locally 0..k.
  auto a_orig = [&](int a_local) { return i * k + a_local; };
  auto d_orig = [&](int d_local) { return j * k + d_local; };

  int base_b = k * nb;            // |A'| = k * nb nodes
  int base_c = base_b + npad;     // B block of npad nodes
  int base_d = base_c + npad;     // C block of npad nodes
  int total = base_d + k * nb;    // D' = k * nb copies

  std::vector<std::pair<int, int>> arcs;
  for (int al = 0; al < k; ++al)
    for (int x = 0; x < nb; ++x) {
      int ax = block.a_copy(al, x);
      for (int b = x * k; b < (x + 1) * k; ++b)  // B_x only
        if (in_g(g4.ab, a_orig(al), b)) arcs.emplace_back(ax, base_b + b);
      for (int c = 0; c < npad; ++c)
        if (c < g4.n && a_orig(al) < g4.n && !g4.ac[a_orig(al)][c])
          arcs.emplace_back(ax, base_c + c);
    }
  for (int b = 0; b < npad; ++b)
    for (int c = 0; c < npad; ++c)
      if (in_g(g4.bc, b, c)) arcs.emplace_back(base_b + b, base_c + c);
  for (int dl = 0; dl < k; ++dl)
    for (int y = 0; y < nb; ++y) {
      int dy = base_d + dl * nb + y;
      for (int c = y * k; c < (y + 1) * k; ++c)  // C_y only
        if (in_g(g4.cd, c, d_orig(dl))) arcs.emplace_back(base_c + c, dy);
      for (int b = 0; b < npad; ++b)
        if (b < g4.n && d_orig(dl) < g4.n && !g4.bd[b][d_orig(dl)])
          arcs.emplace_back(base_b + b, dy);
    }
  block.h = MultiDigraph(total, arcs);
  return block;
}

bool decide_4clique_bounded(const FourPartiteGraph& g4, int k,
                            const VertexConnectivitySolver& solver) {
  int npad = ((g4.n + k - 1) / k) * k;
  int nb = npad / k;

  for (int i = 0; i < nb; ++i)
    for (int j = 0; j < nb; ++j) {
      BoundedBlock block = build_h_bounded(g4, k, i, j);
      for (int al = 0; al < k; ++al) {
        int a = i * k + al;
        if (a >= g4.n) continue;
        for (int dl = 0; dl < k; ++dl) {
          int d = j * k + dl;
          if (d >= g4.n || !g4.ad[a][d]) continue;
          // Sum NC(a_x, d_y) over all copies against the blockwise estimate
          // Sum |B' cap B_x| + |C' cap C_y|; a strict excess anywhere
          // witnesses a 4-clique through this edge.
          long nc_sum = 0, est_sum = 0;
          for (int x = 0; x < nb; ++x)
            for (int y = 0; y < nb; ++y) {
              nc_sum += solver(block.h, block.a_copy(al, x), block.d_copy(dl, y));
              int bpart = 0, cpart = 0;
              for (int b = x * k; b < std::min((x + 1) * k, g4.n); ++b)
                bpart += g4.ab[a][b] * (1 - g4.bd[b][d]);
              for (int c = y * k; c < std::min((y + 1) * k, g4.n); ++c)
                cpart += (1 - g4.ac[a][c]) * g4.cd[c][d];
              est_sum += bpart + cpart;
            }
          if (nc_sum > est_sum) return true;
        }
      }
    }
  return false;
}

}  // namespace apmc
