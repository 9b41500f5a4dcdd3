#include <set>

#include "doctest.h"
#include "parkfn/forest.hpp"

using namespace parkfn;

namespace {

constexpr int R1 = RootedForest::root_ref(1);
constexpr int R2 = RootedForest::root_ref(2);
constexpr int R3 = RootedForest::root_ref(3);
constexpr int R4 = RootedForest::root_ref(4);

// f_i = 01 04 4 01 2 03 5 2 4
RootedForest worked_forest() {
  return RootedForest(9, 12, {R1, R4, 4, R1, 2, R3, 5, 2, 4});
}

// 0 -> {4,6,7}, 4 -> 5, 5 -> {3,8}, 8 -> 1, 7 -> 2, 2 -> 9
RootedTree left_tree() {
  return RootedTree(9, 9, {8, 7, 5, R1, 4, R1, R1, 5, 2});
}

}  // namespace

TEST_CASE("forest construction rejects malformed maps") {
  CHECK_THROWS_AS(RootedForest(2, 2, {1, R1}), MalformedForest);   // self loop
  CHECK_THROWS_AS(RootedForest(2, 2, {2, 1}), MalformedForest);    // 2-cycle
  CHECK_THROWS_AS(RootedForest(2, 2, {R2, R1}), MalformedForest);  // root 02 absent
  CHECK_THROWS_AS(RootedForest(2, 2, {3, R1}), MalformedForest);   // label out of range
  CHECK_THROWS_AS(RootedForest(2, 2, {R1}), MalformedForest);      // missing vertex
  CHECK_NOTHROW(RootedForest(2, 3, {R2, R1}));
}

TEST_CASE("BFS order, worked examples") {
  BfsOrder order = bfs_order(worked_forest());
  CHECK(order.vertices == std::vector<int>{R1, R2, R3, R4, 1, 4, 6, 2, 3, 9, 5, 8, 7});
  CHECK(order.stripped == std::vector<int>{1, 4, 6, 2, 3, 9, 5, 8, 7});
  CHECK(order.rank == std::vector<int>{1, 4, 5, 2, 7, 3, 9, 8, 6});

  BfsOrder tiny = bfs_order(RootedForest(1, 1, {R1}));
  CHECK(tiny.vertices == std::vector<int>{R1, 1});

  BfsOrder left = bfs_order(left_tree());
  CHECK(left.vertices == std::vector<int>{R1, 4, 6, 7, 5, 2, 3, 8, 9, 1});
}

TEST_CASE("forest specification and sigma") {
  RootedForest f = worked_forest();
  CHECK(forest_spec(f).counts == std::vector<int>{2, 0, 1, 1, 0, 2, 0, 2, 0, 0, 1, 0});
  CHECK(sigma(f).perm == std::vector<int>{1, 4, 5, 2, 7, 3, 9, 8, 6});

  // path 0 -> 1 -> 2 -> ... -> m: all-ones specification, identity sigma
  const int m = 5;
  std::vector<int> parent{R1, 1, 2, 3, 4};
  RootedForest path(m, m, parent);
  CHECK(forest_spec(path).counts == std::vector<int>{1, 1, 1, 1, 1});
  CHECK(sigma(path).perm == std::vector<int>{1, 2, 3, 4, 5});
  CHECK(phi(path).prefs() == std::vector<int>{1, 2, 3, 4, 5});
}

TEST_CASE("phi, worked examples") {
  CHECK(phi(worked_forest()).prefs() == std::vector<int>{1, 4, 6, 1, 8, 3, 11, 8, 6});
  CHECK(phi(left_tree()).prefs() == std::vector<int>{8, 4, 5, 1, 2, 1, 1, 5, 6});
}

TEST_CASE("phi_inv, worked example and errors") {
  ParkingFunction worked(PFParams{9, 12}, {1, 4, 6, 1, 8, 3, 11, 8, 6});
  CHECK(phi_inv(worked) == worked_forest());
  CHECK_THROWS_AS(ParkingFunction(PFParams{2, 2}, {2, 2}), NotAParkingFunction);
}

TEST_CASE("degree statistics") {
  CHECK(deg_root_total(left_tree()) == 3);
  CHECK(deg_parent_of_1(left_tree()) == 1);
  // roots 01,02,03,04 have children {1,4}, {}, {6}, {2}; slev of the phi image
  // agrees: #{entries <= 4} of (1,4,6,1,8,3,11,8,6) is 4
  CHECK(deg_root_total(worked_forest()) == 4);
  CHECK(deg_parent_of_1(worked_forest()) == 2);

  const int m = 4;
  RootedTree star(m, m, {R1, R1, R1, R1});
  CHECK(deg_root_total(star) == m);
  CHECK(deg_parent_of_1(star) == m);
}

TEST_CASE("forest enumeration counts") {
  CHECK(count_forests(1, 1) == 1);
  CHECK(count_forests(2, 2) == 3);
  CHECK(count_forests(3, 5) == 108);
  for (int m = 1; m <= 4; ++m) {
    for (int n = m; n <= 5; ++n) {
      CHECK(count_forests(m, n) == pf_count_formula(m, n));
    }
  }
  CHECK_THROWS_AS(count_forests(8, 8, 1000), SizeCapExceeded);
}

TEST_CASE("phi round trip and the independent enumerator agree") {
  for (auto [m, n] : std::vector<std::pair<int, int>>{{3, 4}, {4, 4}, {2, 5}}) {
    std::set<std::vector<int>> via_forests;
    for_each_forest(m, n, [&](const RootedForest& f) {
      ParkingFunction pf = phi(f);
      CHECK(phi_inv(pf) == f);
      via_forests.insert(pf.prefs());
    });
    std::set<std::vector<int>> via_pfs;
    PFParams p{m, n};
    for_each_pf(p, [&](std::span<const int> t) {
      ParkingFunction pf(p, std::vector<int>(t.begin(), t.end()));
      RootedForest f = phi_inv(pf);
      CHECK(phi(f) == pf);
      via_pfs.insert(pf.prefs());
    });
    CHECK(via_forests == via_pfs);
    CHECK(via_forests.size() == static_cast<std::size_t>(pf_count_formula(m, n)));
  }
}

TEST_CASE("statistic transport under phi") {
  // per instance: #pi_i = child count of the parent of i, #j = child count of
  // root j, hence slev = deg(0) and lel = deg(p)
  for (auto [m, n] : std::vector<std::pair<int, int>>{{3, 4}, {4, 4}, {4, 6}, {5, 6}}) {
    for_each_forest(m, n, [&](const RootedForest& f) {
      ParkingFunction pf = phi(f);
      for (int i = 1; i <= m; ++i) {
        CHECK(stat_count(pf, pf.pref(i)) == child_count(f, f.parent(i)));
      }
      for (int j = 1; j <= n - m + 1; ++j) {
        CHECK(stat_count(pf, j) == child_count(f, RootedForest::root_ref(j)));
      }
      CHECK(stat_slev(pf) == deg_root_total(f));
      CHECK(stat_lel(pf) == deg_parent_of_1(f));
    });
  }
}

TEST_CASE("rooted forest baseline count b*a^(a-b-1)") {
  // forests on [a] with b given root labels, as F(m, n) with m = a-b, n = a-1
  for (int a = 2; a <= 6; ++a) {
    for (int b = 1; b < a; ++b) {
      int m = a - b, n = a - 1;
      CHECK(count_forests(m, n) == BigInt(b) * int_pow(a, a - b - 1));
    }
  }
}
