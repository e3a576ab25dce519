#include "apmc/netcoding.hpp"

#include <algorithm>
#include <random>

namespace apmc {

namespace {

inline uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) { return a * b % p; }

uint64_t powmod(uint64_t a, uint64_t e, uint64_t p) {
  uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

uint64_t inv_mod(uint64_t a, uint64_t p) { return powmod(a, p - 2, p); }

}  // namespace

FieldMatrix multiply(const FieldMatrix& x, const FieldMatrix& y) {
  FieldMatrix z(x.rows, y.cols, x.p);
  for (int i = 0; i < x.rows; ++i)
    for (int l = 0; l < x.cols; ++l) {
      uint64_t v = x.at(i, l);
      if (!v) continue;
      for (int j = 0; j < y.cols; ++j)
        z.at(i, j) = (z.at(i, j) + mulmod(v, y.at(l, j), x.p)) % x.p;
    }
  return z;
}

FieldMatrix build_vertex_coefficients(const MultiDigraph& g, uint64_t seed, uint64_t p) {
  int n = g.vertex_count();
  FieldMatrix k(n, n, p);
  std::mt19937_64 rng(seed);
  for (int u = 0; u < n; ++u)
    for (int v : g.out_neighbors(u)) k.at(u, v) = rng() % p;
  return k;
}

std::optional<FieldMatrix> invert_i_minus_k(const FieldMatrix& k) {
  int n = k.rows;
  uint64_t p = k.p;
  FieldMatrix m(n, 2 * n, p);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      uint64_t v = (p - k.at(i, j)) % p;
      if (i == j) v = (v + 1) % p;
      m.at(i, j) = v;
    }
    m.at(i, n + i) = 1;
  }
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (m.at(r, col)) {
        pivot = r;
        break;
      }
    if (pivot < 0) return std::nullopt;
    if (pivot != col)
      for (int j = 0; j < 2 * n; ++j) std::swap(m.at(pivot, j), m.at(col, j));
    uint64_t inv = inv_mod(m.at(col, col), p);
    for (int j = 0; j < 2 * n; ++j) m.at(col, j) = mulmod(m.at(col, j), inv, p);
    for (int r = 0; r < n; ++r) {
      if (r == col || !m.at(r, col)) continue;
      uint64_t f = m.at(r, col);
      for (int j = 0; j < 2 * n; ++j)
        m.at(r, j) = (m.at(r, j) + p - mulmod(f, m.at(col, j), p)) % p;
    }
  }
  FieldMatrix inv(n, n, p);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = m.at(i, n + j);
  return inv;
}

namespace {

int rank_of(FieldMatrix m) {
  int rank = 0;
  uint64_t p = m.p;
  for (int col = 0; col < m.cols && rank < m.rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < m.rows; ++r)
      if (m.at(r, col)) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(pivot, j), m.at(rank, j));
    uint64_t inv = inv_mod(m.at(rank, col), p);
    for (int r = rank + 1; r < m.rows; ++r) {
      if (!m.at(r, col)) continue;
      uint64_t f = mulmod(m.at(r, col), inv, p);
      for (int j = col; j < m.cols; ++j)
        m.at(r, j) = (m.at(r, j) + p - mulmod(f, m.at(rank, j), p)) % p;
    }
    ++rank;
  }
  return rank;
}

}  // namespace

int pair_rank(const FieldMatrix& finv, const MultiDigraph& g, int s, int t) {
  std::vector<int> rows = g.out_neighbors(s);
  std::vector<int> cols = g.in_neighbors(t);
  if (rows.empty() || cols.empty()) return 0;
  FieldMatrix sub(static_cast<int>(rows.size()), static_cast<int>(cols.size()), finv.p);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      sub.at(static_cast<int>(i), static_cast<int>(j)) = finv.at(rows[i], cols[j]);
  return rank_of(std::move(sub));
}

namespace {

// The query graph: arcs subdivided, then one k-wide layer per source (its
// out-arcs rerouted through the layer) and per sink (in-arcs likewise).
struct Gadget {
  MultiDigraph graph;
  std::vector<int> source_of;  // original source id per query, aligned with layers
};

MultiDigraph build_gadget(const MultiDigraph& g, const std::vector<int>& sources,
                          const std::vector<int>& sinks, int k,
                          std::vector<std::vector<int>>& src_layer,
                          std::vector<std::vector<int>>& snk_layer) {
  int n = g.vertex_count();
  int m = g.arc_count();
  std::vector<char> is_source(n, 0), is_sink(n, 0);
  std::vector<int> src_index(n, -1), snk_index(n, -1);
  for (std::size_t i = 0; i < sources.size(); ++i) {
    is_source[sources[i]] = 1;
    src_index[sources[i]] = static_cast<int>(i);
  }
  for (std::size_t i = 0; i < sinks.size(); ++i) {
    is_sink[sinks[i]] = 1;
    snk_index[sinks[i]] = static_cast<int>(i);
  }

  int next = n + m;  // vertices: originals, one per arc, then layers
  src_layer.assign(sources.size(), {});
  for (auto& layer : src_layer)
    for (int i = 0; i < k; ++i) layer.push_back(next++);
  snk_layer.assign(sinks.size(), {});
  for (auto& layer : snk_layer)
    for (int i = 0; i < k; ++i) layer.push_back(next++);

  std::vector<std::pair<int, int>> arcs;
  for (int pos = 0; pos < m; ++pos) {
    const Arc& a = g.arc_at(pos);
    int mid = n + pos;
    // Tail side: source out-arcs leave through the source layer.
    if (is_source[a.tail])
      for (int l : src_layer[src_index[a.tail]]) arcs.emplace_back(l, mid);
    else
      arcs.emplace_back(a.tail, mid);
    // Head side: sink in-arcs arrive through the sink layer.
    if (is_sink[a.head])
      for (int l : snk_layer[snk_index[a.head]]) arcs.emplace_back(mid, l);
    else
      arcs.emplace_back(mid, a.head);
  }
  for (std::size_t i = 0; i < sources.size(); ++i)
    for (int l : src_layer[i]) arcs.emplace_back(sources[i], l);
  for (std::size_t i = 0; i < sinks.size(); ++i)
    for (int l : snk_layer[i]) arcs.emplace_back(l, sinks[i]);
  return MultiDigraph(next, arcs);
}

}  // namespace

ConnectivityReport kstmvc(const MultiDigraph& g, const std::vector<int>& sources,
                          const std::vector<int>& sinks, int k, uint64_t seed,
                          int max_retries, uint64_t p) {
  std::vector<std::vector<int>> src_layer, snk_layer;
  MultiDigraph gadget = build_gadget(g, sources, sinks, k, src_layer, snk_layer);

  ConnectivityReport report;
  report.seed = seed;
  std::optional<FieldMatrix> finv;
  for (int attempt = 0; attempt <= max_retries; ++attempt) {
    FieldMatrix coeff =
        build_vertex_coefficients(gadget, seed + 1000003ull * attempt, p);
    finv = invert_i_minus_k(coeff);
    if (finv) {
      report.singular_retries = attempt;
      break;
    }
  }
  if (!finv) throw SingularError{};

  for (std::size_t si = 0; si < sources.size(); ++si)
    for (std::size_t ti = 0; ti < sinks.size(); ++ti) {
      int s = sources[si], t = sinks[ti];
      if (s == t) continue;
      const auto& rows = src_layer[si];
      const auto& cols = snk_layer[ti];
      FieldMatrix sub(static_cast<int>(rows.size()), static_cast<int>(cols.size()), p);
      for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
          sub.at(static_cast<int>(i), static_cast<int>(j)) = finv->at(rows[i], cols[j]);
      report.values[{s, t}] = std::min(k, rank_of(std::move(sub)));
    }
  return report;
}

ConnectivityReport kapmvc(const MultiDigraph& g, int k, uint64_t seed, int max_retries,
                          uint64_t p) {
  std::vector<int> all(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) all[v] = v;
  return kstmvc(g, all, all, k, seed, max_retries, p);
}

}  // namespace apmc
