#include <map>

#include "apmc/apmc_iterative.hpp"
#include "apmc/apmc_recursive.hpp"
#include "apmc/cuts.hpp"
#include "apmc/flow.hpp"
#include "apmc/gen.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace apmc;
using test::as_set;
using test::diamond;
using test::path3;

TEST_SUITE_BEGIN("apmc");

namespace {

// k-capped oracle matrix via bounded flow.
std::vector<std::vector<int>> oracle_values(const MultiDigraph& g, int k) {
  int n = g.vertex_count();
  std::vector<std::vector<int>> m(n, std::vector<int>(n, ApmcTable::kDiagonal));
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      if (s != t) m[s][t] = max_flow_bounded(g, s, t, k + 1).value;
  return m;
}

void check_witnesses_valid(const MultiDigraph& g, const ApmcTable& table) {
  int n = g.vertex_count();
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      if (s == t) continue;
      for (const ArcSet& cut : table.at(s, t).cuts) {
        if (cut.empty()) {
          CHECK(!reachable_from(g, s)[t]);
          continue;
        }
        CHECK(!reachable_from(g, s, cut)[t]);
        for (ArcId a : cut) {
          ArcSet sub = set_minus(cut, a);
          CHECK(reachable_from(g, s, sub)[t]);
        }
      }
    }
}

}  // namespace

TEST_CASE("iterative on the path") {
  ApmcTable table = all_pairs_latest_cuts(path3(), 2);
  CHECK(table.value(0, 1) == 1);
  CHECK(table.value(1, 2) == 1);
  CHECK(table.value(0, 2) == 1);
  CHECK(table.value(1, 0) == 0);
  CHECK(table.at(0, 2).cuts == std::vector<ArcSet>{{1}});
}

TEST_CASE("iterative on the diamond") {
  ApmcTable k1 = all_pairs_latest_cuts(diamond(), 1);
  CHECK(k1.value(0, 3) == 2);  // marker k+1 = above k
  ApmcTable k2 = all_pairs_latest_cuts(diamond(), 2);
  CHECK(k2.value(0, 3) == 2);
  CHECK(k2.at(0, 3).cuts == std::vector<ArcSet>{{2, 3}});
}

TEST_CASE("iterative rejects cyclic graphs") {
  CHECK_THROWS_AS(all_pairs_latest_cuts(MultiDigraph(2, {{0, 1}, {1, 0}}), 1),
                  CyclicGraphError);
}

TEST_CASE("iterative on the binary tree gadget") {
  TreeGadget gadget = gen_tree_gadget(3, 5);
  ApmcTable table = all_pairs_latest_cuts(gadget.graph, 4);
  CHECK(table.value(gadget.root, gadget.sink) == 2);
  const CutFamily& fam = table.at(gadget.root, gadget.sink);
  int count4 = 0;
  for (const ArcSet& c : fam.cuts)
    if (c.size() == 4) ++count4;
  CHECK(count4 == 5);
}

TEST_CASE("iterative matches the oracle and brute force") {
  for (uint64_t seed = 0; seed < 60; ++seed) {
    MultiDigraph g = gen_random_dag(8, 13, seed);
    for (int k = 1; k <= 3; ++k) {
      ApmcTable table = all_pairs_latest_cuts(g, k);
      CHECK(table.value_matrix() == oracle_values(g, k));
      check_witnesses_valid(g, table);
      if (g.arc_count() <= 13 && seed % 3 == 0) {
        for (int s = 0; s < 8; ++s)
          for (int t = 0; t < 8; ++t) {
            if (s == t) continue;
            auto brute = enumerate_extremal_cuts_bruteforce(g, s, t, k);
            CHECK(as_set(table.at(s, t).cuts) == as_set(brute.second.cuts));
          }
      }
    }
  }
}

TEST_CASE("iterative is monotone in k") {
  for (uint64_t seed = 0; seed < 10; ++seed) {
    MultiDigraph g = gen_random_dag(8, 14, seed);
    ApmcTable t2 = all_pairs_latest_cuts(g, 2);
    ApmcTable t3 = all_pairs_latest_cuts(g, 3);
    for (int s = 0; s < 8; ++s)
      for (int t = 0; t < 8; ++t) {
        if (s == t) continue;
        std::set<ArcSet> filtered;
        for (const ArcSet& c : t3.at(s, t).cuts)
          if (static_cast<int>(c.size()) <= 2) filtered.insert(c);
        CHECK(as_set(t2.at(s, t).cuts) == filtered);
      }
  }
}

TEST_CASE("iterative survives label permutation") {
  MultiDigraph g = gen_random_dag(7, 12, 5);
  // Relabel vertices by an order-preserving shuffle of arc listing only: the
  // same graph parsed with arcs in a different id order.
  std::vector<std::pair<int, int>> rotated;
  for (int off = 4; off < 4 + g.arc_count(); ++off)
    rotated.emplace_back(g.arc_at(off % g.arc_count()).tail,
                         g.arc_at(off % g.arc_count()).head);
  MultiDigraph h(7, rotated);
  ApmcTable tg = all_pairs_latest_cuts(g, 2);
  ApmcTable th = all_pairs_latest_cuts(h, 2);
  CHECK(tg.value_matrix() == th.value_matrix());
  // Families agree as endpoint multisets.
  for (int s = 0; s < 7; ++s)
    for (int t = 0; t < 7; ++t) {
      if (s == t) continue;
      auto endpoints = [](const MultiDigraph& gg, const std::vector<ArcSet>& cuts) {
        std::multiset<std::multiset<std::pair<int, int>>> out;
        for (const ArcSet& cut : cuts) {
          std::multiset<std::pair<int, int>> one;
          for (const Arc& a : gg.arcs())
            if (contains(cut, a.id)) one.insert({a.tail, a.head});
          out.insert(one);
        }
        return out;
      };
      CHECK(endpoints(g, tg.at(s, t).cuts) == endpoints(h, th.at(s, t).cuts));
    }
}

TEST_CASE("vertex-capacity mode through split_vertices") {
  MultiDigraph split = split_vertices(diamond());
  ApmcTable table = all_pairs_latest_cuts(split, 3);
  CHECK(table.value(split_out(0), split_in(3)) == 2);
  CHECK(table.value(split_out(0), split_in(1)) == 1);
}

TEST_CASE("star product composes families") {
  SuperimposedCode code = SuperimposedCode::kautz_singleton(2, 8);
  auto tensor = [&](const std::vector<ArcSet>& fam, int K) {
    return encode_family(code, K, fam);
  };
  // 1x1 matrices: the product is the tensor of the two entries.
  CodeMatrix x(1, 1, 1, code.q()), y(1, 1, 1, code.q());
  x.at(0, 0) = {CodeMatrix::EntryKind::kTensor, tensor({{3}}, 1).bits};
  y.at(0, 0) = {CodeMatrix::EntryKind::kTensor, tensor({{5, 6}}, 1).bits};
  CodeMatrix z = star_product(x, y);
  REQUIRE(z.at(0, 0).kind == CodeMatrix::EntryKind::kTensor);
  CHECK(z.at(0, 0).bits == tensor({{3}, {5, 6}}, 2).bits);

  // The AND of lifted entries encodes the union family {{3},{5,6}}: covering
  // either member is a solution.
  auto witnesses = decode_witness(TensorCodeword{2, code.q(), z.at(0, 0).bits}, code, 2);
  CHECK(witnesses == std::vector<ArcSet>{{3}, {5, 6}});

  CodeMatrix x2(1, 1, 1, code.q()), y2(1, 1, 1, code.q());
  x2.at(0, 0) = {CodeMatrix::EntryKind::kTensor, tensor({{3}}, 1).bits};
  y2.at(0, 0) = {CodeMatrix::EntryKind::kTensor, tensor({{3}}, 1).bits};
  auto single = decode_witness(
      TensorCodeword{2, code.q(), star_product(x2, y2).at(0, 0).bits}, code, 2);
  CHECK(single == std::vector<ArcSet>{{3}});

  // All-zero row stays all-zero.
  CodeMatrix xz(1, 2, 1, code.q()), yz(2, 1, 1, code.q());
  yz.at(0, 0) = {CodeMatrix::EntryKind::kTensor, tensor({{1}}, 1).bits};
  CodeMatrix zz = star_product(xz, yz);
  CHECK(zz.at(0, 0).kind == CodeMatrix::EntryKind::kZero);
}

TEST_CASE("fix to latest") {
  std::map<std::pair<int, int>, CutFamily> memo;
  auto lookup = [&](const MultiDigraph& g, int k) {
    return [&memo, &g, k](int y, int t) -> const CutFamily& {
      auto key = std::make_pair(y, t);
      auto it = memo.find(key);
      if (it == memo.end()) it = memo.emplace(key, latest_cuts_upto_k(g, y, t, k)).first;
      return it->second;
    };
  };

  MultiDigraph p = path3();
  std::map<std::pair<int, int>, CutFamily> m1;
  CutFamily pf = fix_to_latest(p, 0, 2, {0}, 2, lookup(p, 2));
  CHECK(pf.cuts == std::vector<ArcSet>{{1}});

  memo.clear();
  MultiDigraph d = diamond();
  CutFamily df = fix_to_latest(d, 0, 3, {0, 1}, 2, lookup(d, 2));
  CHECK(df.cuts == std::vector<ArcSet>{{2, 3}});

  memo.clear();
  TreeGadget gadget = gen_tree_gadget(3, 5);
  Cut root = latest_min_cut(gadget.graph, gadget.root, gadget.sink);
  CutFamily tf = fix_to_latest(gadget.graph, gadget.root, gadget.sink, root.arcs, 4,
                               lookup(gadget.graph, 4));
  int count4 = 0;
  for (const ArcSet& c : tf.cuts)
    if (c.size() == 4) ++count4;
  CHECK(count4 == 5);
}

TEST_CASE("recursive equals iterative on fixtures") {
  ApmcTable p_rec = all_pairs_latest_cuts_recursive(path3(), 2);
  ApmcTable p_it = all_pairs_latest_cuts(path3(), 2);
  CHECK(p_rec.value_matrix() == p_it.value_matrix());
  CHECK(p_rec.at(0, 2).cuts == p_it.at(0, 2).cuts);

  ApmcTable d_rec = all_pairs_latest_cuts_recursive(diamond(), 2);
  CHECK(d_rec.value(0, 3) == 2);
  CHECK(d_rec.at(0, 3).cuts == std::vector<ArcSet>{{2, 3}});
}

TEST_CASE("stored family orders agree with the graph-theoretic later order") {
  for (uint64_t seed = 0; seed < 25; ++seed) {
    MultiDigraph g = gen_random_dag(8, 13, seed, 2);
    ApmcTable table = all_pairs_latest_cuts(g, 3);
    for (int s = 0; s < 8; ++s)
      for (int t = 0; t < 8; ++t) {
        if (s == t) continue;
        const CutFamily& fam = table.at(s, t);
        if (fam.is_unreachable_family() || fam.cuts.empty()) continue;
        std::vector<Cut> cuts;
        for (const ArcSet& c : fam.cuts) cuts.push_back(make_cut(g, s, t, c));
        for (std::size_t i = 0; i < cuts.size(); ++i)
          for (std::size_t j = 0; j < cuts.size(); ++j)
            CHECK(fam.ge(i, j) == later_than(cuts[i], cuts[j]));
      }
  }
}

TEST_CASE("iterative families are stable under vertex relabeling") {
  // Relabel vertices with a permutation; arcs keep their ids, so families
  // must be identical as arc-id sets.
  MultiDigraph g = gen_random_dag(7, 12, 21);
  std::vector<int> perm{3, 0, 5, 1, 6, 2, 4};
  std::vector<Arc> relabeled;
  for (const Arc& a : g.arcs()) relabeled.push_back(Arc{a.id, perm[a.tail], perm[a.head]});
  MultiDigraph h = MultiDigraph::from_arcs(7, relabeled);
  ApmcTable tg = all_pairs_latest_cuts(g, 2);
  ApmcTable th = all_pairs_latest_cuts(h, 2);
  for (int s = 0; s < 7; ++s)
    for (int t = 0; t < 7; ++t) {
      if (s == t) continue;
      CHECK(tg.at(s, t).cuts == th.at(perm[s], perm[t]).cuts);
    }
}

TEST_CASE("strict codes mode refuses what the fallback would absorb") {
  // 3 -> 4 -> 5 with the second hop doubled puts a two-member latest family
  // into the right operand ({(3,4)} and the parallel pair), so the star
  // product wants 4 dimensions and blows a tiny tensor guard.
  MultiDigraph g(6, {{0, 3}, {3, 4}, {4, 5}, {4, 5}});
  RecursiveOptions strict;
  strict.strict_codes = true;
  strict.tensor_bit_guard = 1u << 12;
  CHECK_THROWS_AS(all_pairs_latest_cuts_recursive(g, 2, strict), LimitExceededError);
  RecursiveOptions lax;
  lax.tensor_bit_guard = 1u << 12;
  ApmcTable rec = all_pairs_latest_cuts_recursive(g, 2, lax);
  ApmcTable it = all_pairs_latest_cuts(g, 2);
  CHECK(rec.value_matrix() == it.value_matrix());
}

TEST_CASE("recursive equals iterative on random dags") {
  for (uint64_t seed = 0; seed < 50; ++seed) {
    MultiDigraph g = gen_random_dag(9, 14, seed);
    ApmcTable rec = all_pairs_latest_cuts_recursive(g, 2);
    ApmcTable it = all_pairs_latest_cuts(g, 2);
    REQUIRE(rec.value_matrix() == it.value_matrix());
    for (int s = 0; s < 9; ++s)
      for (int t = 0; t < 9; ++t)
        if (s != t) REQUIRE(as_set(rec.at(s, t).cuts) == as_set(it.at(s, t).cuts));
  }
}

TEST_SUITE_END();
