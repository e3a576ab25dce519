#include <random>

#include "apmc/witness.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace apmc;
using test::as_set;

TEST_SUITE_BEGIN("witness");

namespace {

// A three-family instance whose only solution is {2,4}; also exercised
// through the code-decoding route in the codes suite.
WsInstance fixture_instance() {
  WsInstance inst;
  inst.k = 2;
  inst.families = {{{2}, {1, 5}}, {{1, 3}, {4}}, {{4}, {2, 4}}};
  return inst;
}

WsInstance random_instance(std::mt19937_64& rng) {
  WsInstance inst;
  inst.k = 1 + static_cast<int>(rng() % 3);
  int c = 1 + static_cast<int>(rng() % 5);
  for (int i = 0; i < c; ++i) {
    int members = 1 + static_cast<int>(rng() % 4);
    std::vector<ArcSet> family;
    for (int j = 0; j < members; ++j) {
      ArcSet f;
      int len = 1 + static_cast<int>(rng() % inst.k);
      for (int l = 0; l < len; ++l) f.push_back(static_cast<int>(rng() % 10));
      canonicalize(f);
      family.push_back(f);
    }
    inst.families.push_back(family);
  }
  return inst;
}

}  // namespace

TEST_CASE("pruning solves the fixture instance") {
  auto out = solve_ws_pruning(fixture_instance());
  CHECK(out == std::vector<ArcSet>{{2, 4}});
  CHECK(solve_ws_bruteforce(fixture_instance()) == out);
}

TEST_CASE("single singleton family") {
  WsInstance inst;
  inst.k = 1;
  inst.families = {{{7}}};
  CHECK(solve_ws_pruning(inst) == std::vector<ArcSet>{{7}});
}

TEST_CASE("two families compose") {
  WsInstance inst;
  inst.k = 2;
  inst.families = {{{1}, {2}}, {{3}}};
  auto out = solve_ws_pruning(inst);
  CHECK(as_set(out) == std::set<ArcSet>{{1, 3}, {2, 3}});
  CHECK(solve_ws_bruteforce(inst) == out);
}

TEST_CASE("empty member short-circuits its family") {
  WsInstance inst;
  inst.k = 1;
  inst.families = {{{}, {1, 2, 3}}, {{5}}};
  CHECK(solve_ws_pruning(inst) == std::vector<ArcSet>{{5}});
}

TEST_CASE("no families yields the empty witness") {
  WsInstance inst;
  inst.k = 2;
  CHECK(solve_ws_pruning(inst) == std::vector<ArcSet>{{}});
}

TEST_CASE("pruning equals brute force on random instances") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 500; ++trial) {
    WsInstance inst = random_instance(rng);
    auto a = solve_ws_pruning(inst);
    auto b = solve_ws_bruteforce(inst);
    REQUIRE(a == b);
    // Output count bound K^k with K the largest family size.
    std::size_t big = 1;
    for (const auto& f : inst.families) big = std::max(big, f.size());
    std::size_t bound = 1;
    for (int i = 0; i < inst.k; ++i) bound *= big;
    CHECK(a.size() <= bound);
    // Cover and minimality of each output.
    for (const ArcSet& w : a) {
      for (const auto& family : inst.families) {
        bool covered = false;
        for (const ArcSet& member : family)
          if (is_subset(member, w)) covered = true;
        CHECK(covered);
      }
      for (ArcId x : w) {
        ArcSet sub = set_minus(w, x);
        bool still = true;
        for (const auto& family : inst.families) {
          bool covered = false;
          for (const ArcSet& member : family)
            if (is_subset(member, sub)) covered = true;
          if (!covered) still = false;
        }
        CHECK(!still);
      }
    }
  }
}

TEST_CASE("filter latest keeps the dominating cut") {
  // Diamond at source 0: candidates include earliest, latest and the two
  // mixed minimal 2-cuts; only {2,3} survives.
  OrderedFamily f1 = family_with_minimum({0}, {{2}}, {{1}});
  OrderedFamily f2 = family_with_minimum({1}, {{3}}, {{1}});
  std::vector<ArcSet> candidates{{0, 1}, {2, 3}, {0, 3}, {1, 2}};
  CutFamily fam = filter_latest(candidates, {f1, f2}, 2);
  CHECK(fam.cuts == std::vector<ArcSet>{{2, 3}});

  CutFamily single = filter_latest({{5}}, {family_with_minimum({5}, {}, {})}, 1);
  CHECK(single.cuts == std::vector<ArcSet>{{5}});

  // Path: {(v,t)} is later than {(s,v)} at equal size.
  OrderedFamily pf = family_with_minimum({0}, {{1}}, {{1}});
  CutFamily path_fam = filter_latest({{0}, {1}}, {pf}, 2);
  CHECK(path_fam.cuts == std::vector<ArcSet>{{1}});
}

TEST_CASE("filter latest rejects non-covering candidates") {
  OrderedFamily f = family_with_minimum({0}, {}, {});
  CHECK_THROWS_AS(filter_latest({{4}}, {f}, 1), OrderUndefinedError);
}

TEST_SUITE_END();
