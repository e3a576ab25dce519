#include <functional>
#include <map>
#include <random>
#include <set>

#include "apmc/cuts.hpp"
#include "apmc/gen.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace apmc;
using test::as_set;
using test::diamond;
using test::path3;

TEST_SUITE_BEGIN("cuts");

TEST_CASE("sides") {
  auto [s1, t1] = sides(path3(), 0, 2, {0});
  CHECK(s1 == std::vector<int>{0});
  CHECK(t1 == std::vector<int>{1, 2});

  auto [s2, t2] = sides(path3(), 0, 2, {1});
  CHECK(s2 == std::vector<int>{0, 1});
  CHECK(t2 == std::vector<int>{2});

  // s->v, v->t, s->t; removing {(s,t),(s,v)} isolates s while v still reaches t.
  MultiDigraph g(3, {{0, 1}, {1, 2}, {0, 2}});
  auto [s3, t3] = sides(g, 0, 2, {0, 2});
  CHECK(s3 == std::vector<int>{0});
  CHECK(t3 == std::vector<int>{1, 2});

  CHECK_THROWS_AS(sides(path3(), 0, 2, ArcSet{}), NotACutError);
}

TEST_CASE("later order reproduces the non-minimal asymmetry") {
  // Path 0 -> 1 -> 2 -> 3. M1 = {(0,1)}, M2 = {(1,2)} minimal; M3 =
  // {(0,1),(2,3)} is a cut but not minimal.
  MultiDigraph g(4, {{0, 1}, {1, 2}, {2, 3}});
  Cut m1 = make_cut(g, 0, 3, {0});
  Cut m2 = make_cut(g, 0, 3, {1});
  Cut m3 = make_cut(g, 0, 3, {0, 2});

  CHECK(later_than(m1, m1));  // reflexive
  Cut p_early = make_cut(path3(), 0, 2, {0});
  Cut p_late = make_cut(path3(), 0, 2, {1});
  CHECK(later_than(p_late, p_early));
  CHECK(!later_than(p_early, p_late));

  // M3 < M2 yet not(M2 >= M3); M1 not< M3 yet M3 > M1, and M1 <= M3, M3 >= M1.
  CHECK(earlier_than(m3, m2));
  CHECK(m3.source_side != m2.source_side);
  CHECK(!later_than(m2, m3));
  CHECK(!(earlier_than(m1, m3) && m1.source_side != m3.source_side));
  CHECK(strictly_later(m3, m1));
  CHECK(earlier_than(m1, m3));
  CHECK(later_than(m3, m1));
  CHECK(!is_minimal_cut(g, 0, 3, m3.arcs));
  CHECK(is_minimal_cut(g, 0, 3, m1.arcs));
  CHECK(is_minimal_cut(g, 0, 3, m2.arcs));
}

TEST_CASE("latest/earliest classification on a two-layer instance") {
  // s -> u1,u2; u1 -> v1; u2 -> v2; v1,v2 -> t.
  MultiDigraph g(6, {{0, 1}, {0, 2}, {1, 3}, {2, 4}, {3, 5}, {4, 5}});
  ArcSet m1{0, 1}, m2{2, 3}, m3{4, 5};
  CHECK(is_earliest_cut(g, 0, 5, m1));
  CHECK(!is_latest_cut(g, 0, 5, m1));
  CHECK(!is_earliest_cut(g, 0, 5, m2));
  CHECK(!is_latest_cut(g, 0, 5, m2));
  CHECK(is_latest_cut(g, 0, 5, m3));
  CHECK(!is_earliest_cut(g, 0, 5, m3));

  CHECK(is_latest_cut(path3(), 0, 2, {1}));
  CHECK(!is_latest_cut(path3(), 0, 2, {0}));
}

TEST_CASE("arc replacement") {
  Cut m = make_cut(path3(), 0, 2, {0});
  auto rep = arc_replacement(path3(), 0, 2, m, 0);
  REQUIRE(rep.has_value());
  CHECK(rep->arcs == ArcSet{1});

  Cut late = make_cut(path3(), 0, 2, {1});
  CHECK(!arc_replacement(path3(), 0, 2, late, 1).has_value());

  // Depth-2 tree gadget, min-cut at the root. Replacing (s,u) pushes the cut
  // below u while (s,v) stays.
  TreeGadget gadget = gen_tree_gadget(2, 5);
  const MultiDigraph& tg = gadget.graph;
  Cut root = latest_min_cut(tg, gadget.root, gadget.sink);
  CHECK(root.arcs == ArcSet{0, 1});
  auto pushed = arc_replacement(tg, gadget.root, gadget.sink, root, 0);
  REQUIRE(pushed.has_value());
  // Arcs out of u = vertex 1 are ids 2,3; (s,v) keeps id 1.
  CHECK(pushed->arcs == ArcSet{1, 2, 3});
}

TEST_CASE("latest cuts up to k on fixtures") {
  CutFamily path_fam = latest_cuts_upto_k(path3(), 0, 2, 2);
  CHECK(path_fam.cuts == std::vector<ArcSet>{{1}});

  CutFamily dia = latest_cuts_upto_k(diamond(), 0, 3, 2);
  CHECK(dia.cuts == std::vector<ArcSet>{{2, 3}});

  CutFamily none = latest_cuts_upto_k(diamond(), 0, 3, 1);
  CHECK(none.cuts.empty());

  CutFamily unreachable = latest_cuts_upto_k(MultiDigraph(3, {{1, 0}}), 0, 2, 2);
  CHECK(unreachable.cuts == std::vector<ArcSet>{{}});
}

TEST_CASE("catalan-tight binary tree gadget") {
  TreeGadget gadget = gen_tree_gadget(3, 5);
  const MultiDigraph& g = gadget.graph;
  // Exactly C_{k-1} latest k-cuts for k = 2,3,4: 1, 2, 5.
  CutFamily fam = latest_cuts_upto_k(g, gadget.root, gadget.sink, 4);
  int count2 = 0, count3 = 0, count4 = 0;
  for (const ArcSet& c : fam.cuts) {
    if (c.size() == 2) ++count2;
    if (c.size() == 3) ++count3;
    if (c.size() == 4) ++count4;
  }
  CHECK(count2 == 1);
  CHECK(count3 == 2);
  CHECK(count4 == 5);
  CHECK(fam.cuts.size() == 8);
  CHECK(fam.cuts.size() <= (1u << (2 * 4)));  // 4^k
}

TEST_CASE("earliest cuts mirror under reversal") {
  CutFamily fam = earliest_cuts_upto_k(diamond(), 0, 3, 2);
  CHECK(fam.cuts == std::vector<ArcSet>{{0, 1}});
  CHECK(fam.kind == CutKind::kEarliest);
}

TEST_CASE("closure equals brute force on random instances") {
  int checked = 0;
  for (uint64_t seed = 0; seed < 60; ++seed) {
    MultiDigraph g = seed % 2 ? gen_random_dag(7, 11, seed) : gen_random_digraph(7, 11, seed);
    for (int k = 1; k <= 3; ++k) {
      int s = static_cast<int>(seed % 7), t = static_cast<int>((seed + 4) % 7);
      if (s == t) continue;
      auto [be, bl] = enumerate_extremal_cuts_bruteforce(g, s, t, k);
      CutFamily closure = latest_cuts_upto_k(g, s, t, k);
      CHECK(as_set(closure.cuts) == as_set(bl.cuts));
      CHECK(as_set(earliest_cuts_upto_k(g, s, t, k).cuts) == as_set(be.cuts));
      // Per-size counts stay within the Catalan numbers, the whole family
      // within 4^k.
      if (!closure.is_unreachable_family()) {
        const int catalan[4] = {1, 1, 2, 5};
        std::map<std::size_t, int> by_size;
        for (const ArcSet& c : closure.cuts) by_size[c.size()]++;
        for (auto [size, count] : by_size)
          CHECK(count <= catalan[size - 1]);
        CHECK(closure.cuts.size() <= (std::size_t{1} << (2 * k)));
      }
      ++checked;
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("immediately-later cuts are arc replacements") {
  for (uint64_t seed = 0; seed < 25; ++seed) {
    MultiDigraph g = gen_random_dag(6, 10, seed, 2);
    int s = static_cast<int>(seed % 6), t = static_cast<int>((seed + 5) % 6);
    if (s == t || !reachable_from(g, s)[t]) continue;
    CutFamily fam = latest_cuts_upto_k(g, s, t, 3);
    if (fam.cuts.size() < 2 || fam.is_unreachable_family()) continue;
    std::vector<Cut> cuts;
    for (const ArcSet& c : fam.cuts) cuts.push_back(make_cut(g, s, t, c));
    for (std::size_t i = 0; i < cuts.size(); ++i)
      for (std::size_t j = 0; j < cuts.size(); ++j) {
        if (i == j || !strictly_later(cuts[j], cuts[i])) continue;
        bool immediate = true;
        for (std::size_t l = 0; l < cuts.size() && immediate; ++l)
          if (l != i && l != j && strictly_later(cuts[j], cuts[l]) &&
              strictly_later(cuts[l], cuts[i]))
            immediate = false;
        if (!immediate) continue;
        for (ArcId a : cuts[i].arcs) {
          if (contains(cuts[j].arcs, a)) continue;
          auto rep = arc_replacement(g, s, t, cuts[i], a);
          REQUIRE(rep.has_value());
          CHECK(rep->arcs == cuts[j].arcs);
        }
      }
  }
}

TEST_CASE("split covering") {
  MultiDigraph p = path3();
  auto order = topological_order(p);
  ArcSplit split = arc_split_prefix(p, order, 1, CrossArcs::kToA1);
  REQUIRE(split.a1 == ArcSet{0});
  SplitFamilies fams = split_families(p, 0, 2, split, 2);

  CHECK(check_split_covering(p, 0, 2, split, {0}, fams));
  CHECK(!check_split_covering(p, 0, 2, split, {}, fams));

  // Vacuous instance: no vertex is both reachable in a1 and reaching in a2.
  MultiDigraph blocked(2, std::vector<std::pair<int, int>>{});
  SplitFamilies vac = split_families(blocked, 0, 1, ArcSplit{{}, {}}, 2);
  CHECK(check_split_covering(blocked, 0, 1, ArcSplit{{}, {}}, {}, vac));
}

TEST_CASE("split-covering sets are cuts and some min-cut is split-covering") {
  std::mt19937_64 rng(7);
  for (uint64_t seed = 0; seed < 25; ++seed) {
    MultiDigraph g = gen_random_dag(6, 9, seed);
    auto order = topological_order(g);
    ArcSplit split = arc_split_prefix(g, order, 3, CrossArcs::kToA1);
    int s = 0, t = 5;
    if (!reachable_from(g, s)[t]) continue;
    int k = g.arc_count();
    if (k > 9) k = 9;
    SplitFamilies fams = split_families(g, s, t, split, k);

    // Random supersets of arcs that pass the check must disconnect.
    for (int trial = 0; trial < 20; ++trial) {
      ArcSet m;
      for (const Arc& a : g.arcs())
        if (rng() % 2) m.push_back(a.id);
      canonicalize(m);
      if (check_split_covering(g, s, t, split, m, fams))
        CHECK(!reachable_from(g, s, m)[t]);
    }

    // Some min-cut is split-covering with extremal parts of size <= k.
    int mc = max_flow_bounded(g, s, t, g.arc_count() + 1).value;
    if (mc == 0 || mc > 3) continue;
    bool found = false;
    std::vector<ArcId> ids;
    for (const Arc& a : g.arcs()) ids.push_back(a.id);
    std::function<void(std::size_t, ArcSet&)> go = [&](std::size_t start, ArcSet& cur) {
      if (found) return;
      if (static_cast<int>(cur.size()) == mc) {
        if (!reachable_from(g, s, cur)[t] && check_split_covering(g, s, t, split, cur, fams))
          found = true;
        return;
      }
      for (std::size_t i = start; i < ids.size(); ++i) {
        cur.push_back(ids[i]);
        go(i + 1, cur);
        cur.pop_back();
      }
    };
    ArcSet cur;
    go(0, cur);
    CHECK(found);
  }
}

TEST_CASE("every latest cut is late-covering w.r.t. arcs out of s") {
  for (uint64_t seed = 0; seed < 25; ++seed) {
    MultiDigraph g = gen_random_dag(6, 10, seed);
    int s = 0, t = 5;
    if (!reachable_from(g, s)[t]) continue;
    CutFamily fam = latest_cuts_upto_k(g, s, t, 3);
    if (fam.is_unreachable_family()) continue;
    // C: arcs (s,v) with v reaching t that do exist.
    auto reach_t = reaching_to(g, t);
    for (const ArcSet& m : fam.cuts) {
      for (int pos : g.out(s)) {
        const Arc& a = g.arc_at(pos);
        if (!reach_t[a.head]) continue;
        if (contains(m, a.id)) continue;
        // Some y-t latest cut must be inside m.
        bool covered = false;
        CutFamily sub = latest_cuts_upto_k(g, a.head, t, 3);
        for (const ArcSet& option : sub.cuts)
          if (is_subset(option, m)) covered = true;
        CHECK(covered);
      }
    }
  }
}

TEST_SUITE_END();
