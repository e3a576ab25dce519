#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "apmc/graph.hpp"

namespace apmc {

inline constexpr uint64_t kDefaultFieldPrime = 2147483647ull;  // 2^31 - 1

// Dense matrix over GF(p). Entries in [0, p).
struct FieldMatrix {
  int rows = 0, cols = 0;
  uint64_t p = kDefaultFieldPrime;
  std::vector<uint64_t> a;

  FieldMatrix() = default;
  FieldMatrix(int r, int c, uint64_t prime = kDefaultFieldPrime)
      : rows(r), cols(c), p(prime), a(static_cast<std::size_t>(r) * c, 0) {}

  uint64_t& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  uint64_t at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
};

FieldMatrix multiply(const FieldMatrix& x, const FieldMatrix& y);

// n x n coefficient matrix: K[u][v] uniform in GF(p) iff some arc (u,v)
// exists (multiplicity collapses to one coefficient). Seed-deterministic.
FieldMatrix build_vertex_coefficients(const MultiDigraph& g, uint64_t seed,
                                      uint64_t p = kDefaultFieldPrime);

// (I - K)^{-1}; nullopt when singular (caller reseeds).
std::optional<FieldMatrix> invert_i_minus_k(const FieldMatrix& k);

// Rank of the submatrix with rows N^out(s), columns N^in(t).
int pair_rank(const FieldMatrix& finv, const MultiDigraph& g, int s, int t);

struct ConnectivityReport {
  std::map<std::pair<int, int>, int> values;  // min(k, kappa) per (s,t), s != t
  uint64_t seed = 0;
  int singular_retries = 0;
};

struct SingularError : std::runtime_error {
  SingularError() : std::runtime_error("coefficient matrix stayed singular after retries") {}
};

// Degree-reduction gadget: every arc subdivided through a fresh unit vertex (so
// parallel and endpoint-to-endpoint arcs keep unit capacity), then one layer
// of k vertices per source and per sink replacing their incident arcs.
// One inversion answers every pair by a rank query.
ConnectivityReport kstmvc(const MultiDigraph& g, const std::vector<int>& sources,
                          const std::vector<int>& sinks, int k, uint64_t seed,
                          int max_retries = 3, uint64_t p = kDefaultFieldPrime);

ConnectivityReport kapmvc(const MultiDigraph& g, int k, uint64_t seed,
                          int max_retries = 3, uint64_t p = kDefaultFieldPrime);

}  // namespace apmc
