#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <set>
#include <vector>

#include "baxter/errors.hpp"
#include "baxter/walks.hpp"
#include "doctest.h"

using namespace baxter;

TEST_CASE("binary walk accessors") {
  BinaryWalk w{{0, -1}, "ENN"};
  CHECK(w.length() == 3);
  CHECK(w.east_count() == 1);
  CHECK(w.north_count() == 2);
  CHECK(w.end() == LatticePoint{1, 1});
  auto pts = w.points();
  REQUIRE(pts.size() == 4);
  CHECK(pts[0] == LatticePoint{0, -1});
  CHECK(pts[1] == LatticePoint{1, -1});
  CHECK(pts[2] == LatticePoint{1, 0});
  CHECK(pts[3] == LatticePoint{1, 1});
  CHECK_THROWS_AS(validate_steps("EXN"), format_error);
  CHECK_NOTHROW(validate_steps(""));
}

TEST_CASE("vertex disjointness") {
  // parallel walks one diagonal apart never meet
  CHECK(vertex_disjoint(BinaryWalk{{0, 0}, "EN"}, BinaryWalk{{1, -1}, "EN"}));
  // sharing an interior lattice point
  CHECK_FALSE(vertex_disjoint(BinaryWalk{{0, 0}, "EN"}, BinaryWalk{{1, -1}, "NE"}));
  // sharing only an endpoint still counts as a meeting
  CHECK_FALSE(vertex_disjoint(BinaryWalk{{0, 0}, "E"}, BinaryWalk{{1, 0}, ""}));
  CHECK(vertex_disjoint(BinaryWalk{{0, 0}, "E"}, BinaryWalk{{1, 1}, ""}));
  CHECK_FALSE(vertex_disjoint(BinaryWalk{{0, 0}, "E"}, BinaryWalk{{0, 0}, "N"}));
}

TEST_CASE("walk count on frozen examples") {
  CHECK(walk_count({0, 0}, {2, 1}) == 3);
  CHECK(walk_count({0, 0}, {0, 0}) == 1);
  CHECK(walk_count({0, 0}, {-1, 5}) == 0);
  CHECK(walk_count({0, 0}, {5, -1}) == 0);
  CHECK(walk_count({-1, 1}, {-1, 2}) == 1);
}

TEST_CASE("walk count agrees with explicit enumeration and the lattice recurrence") {
  for (int dx = 0; dx <= 5; ++dx) {
    for (int dy = 0; dy <= 5; ++dy) {
      LatticePoint a{-2, 3};
      LatticePoint b{a.x + dx, a.y + dy};
      auto words = all_walk_words(a, b);
      CHECK(walk_count(a, b) == BigInt(words.size()));
      CHECK(std::is_sorted(words.begin(), words.end()));
      CHECK(std::set<std::string>(words.begin(), words.end()).size() == words.size());
      if (dx > 0 && dy > 0)
        CHECK(walk_count(a, b) ==
              walk_count(a, {b.x - 1, b.y}) + walk_count(a, {b.x, b.y - 1}));
    }
  }
  auto diag = all_walk_words({0, 0}, {1, 1});
  REQUIRE(diag.size() == 2);
  CHECK(diag[0] == "EN");
  CHECK(diag[1] == "NE");
}

TEST_CASE("compositions are lexicographic and complete") {
  auto c = compositions(2, 2);
  REQUIRE(c.size() == 3);
  CHECK(c[0] == std::vector<int>{0, 2});
  CHECK(c[1] == std::vector<int>{1, 1});
  CHECK(c[2] == std::vector<int>{2, 0});
  CHECK(compositions(0, 1) == std::vector<std::vector<int>>{{0}});
  CHECK(compositions(0, 3).size() == 1);
  CHECK(compositions(4, 3).size() == 15);  // C(4+2, 2)
}

TEST_CASE("three-walk determinant on frozen examples") {
  std::array<LatticePoint, 3> starts = theorem1_starts();
  CHECK(starts[0] == LatticePoint{-1, 1});
  CHECK(starts[1] == LatticePoint{0, 0});
  CHECK(starts[2] == LatticePoint{0, -1});

  // entries [[1,1,0],[0,1,0],[0,1,1]], determinant 1
  std::array<LatticePoint, 3> ends = {{{-1, 2}, {0, 1}, {1, -1}}};
  CHECK(lgv_count_3(starts, ends) == 1);

  // coincident start/end configuration: only the empty triple
  std::array<LatticePoint, 3> same = starts;
  CHECK(lgv_count_3(starts, same) == 1);

  // unreachable ends give zero
  std::array<LatticePoint, 3> below = {{{-1, 0}, {0, -1}, {0, -2}}};
  CHECK(lgv_count_3(starts, below) == 0);
}

TEST_CASE("disjoint triple enumeration matches the determinant") {
  std::array<LatticePoint, 3> starts = theorem1_starts();

  std::array<LatticePoint, 3> ends = {{{-1, 2}, {0, 1}, {1, -1}}};
  auto triples = enumerate_disjoint_triples(starts, ends);
  REQUIRE(triples.size() == 1);
  CHECK(triples[0][0].steps == "N");
  CHECK(triples[0][1].steps == "N");
  CHECK(triples[0][2].steps == "E");

  std::array<LatticePoint, 3> tiny = {{{-1, 1}, {0, 0}, {1, -1}}};
  auto tiny_triples = enumerate_disjoint_triples(starts, tiny);
  REQUIRE(tiny_triples.size() == 1);
  CHECK(tiny_triples[0][0].steps.empty());
  CHECK(tiny_triples[0][1].steps.empty());
  CHECK(tiny_triples[0][2].steps == "E");

  std::array<LatticePoint, 3> below = {{{-1, 0}, {0, -1}, {0, -2}}};
  CHECK(enumerate_disjoint_triples(starts, below).empty());

  // every triple returned must be pairwise vertex disjoint with the right ends
  std::array<LatticePoint, 3> wide = {{{0, 3}, {1, 2}, {2, -1}}};
  auto all = enumerate_disjoint_triples(starts, wide);
  CHECK(BigInt(all.size()) == lgv_count_3(starts, wide));
  for (const auto& t : all) {
    for (int i = 0; i < 3; ++i) {
      CHECK(t[i].start == starts[i]);
      CHECK(t[i].end() == wide[i]);
      for (int j = i + 1; j < 3; ++j) CHECK(vertex_disjoint(t[i], t[j]));
    }
  }
}

TEST_CASE("enumeration respects the step capacity bound") {
  std::array<LatticePoint, 3> starts = theorem1_starts();
  std::array<LatticePoint, 3> far = {{{3, 5}, {4, 4}, {5, 2}}};
  CHECK_THROWS_AS(enumerate_disjoint_triples(starts, far, 10), capacity_error);
  CHECK_NOTHROW(enumerate_disjoint_triples(starts, far, 24));
  CHECK_THROWS_AS(enumerate_theorem1_tuples({4, 0, 0, 0}, 5), capacity_error);
}

TEST_CASE("tuple counts on frozen examples") {
  CHECK(theorem1_tuple_count({1, 0, 0, 1}) == 1);
  CHECK(theorem1_tuple_count({1, 0, 1, 1}) == 2);
  CHECK(theorem1_tuple_count({1, 1, 1, 0}) == 1);
  CHECK(theorem1_tuple_count({1, 0, 0, 0}) == 0);
  CHECK(theorem1_tuple_count({1, 2, 0, 0}) == 0);
  CHECK(theorem1_tuple_count({0, 0, 3, 0}) == 0);
}

TEST_CASE("tuple enumeration on frozen examples") {
  auto two = enumerate_theorem1_tuples({1, 0, 1, 1});
  REQUIRE(two.size() == 2);
  std::set<std::vector<int>> weights;
  for (const auto& t : two) {
    CHECK(t.w1.steps == "N");
    CHECK(t.w2.steps == "N");
    CHECK(t.w3.steps == "E");
    weights.insert(t.s);
  }
  CHECK(weights == std::set<std::vector<int>>{{0, 1}, {1, 0}});

  auto one = enumerate_theorem1_tuples({1, 0, 0, 1});
  REQUIRE(one.size() == 1);
  CHECK(one[0].s == std::vector<int>{0, 0});
  CHECK(one[0].w1.steps.empty());
  CHECK(one[0].w2.steps.empty());
  CHECK(one[0].w3.steps == "E");

  CHECK(enumerate_theorem1_tuples({1, 2, 0, 0}).empty());

  for (int m = 2; m <= 6; ++m)
    for (int n = 1; 2 * n <= m; ++n)
      for (int k = 0; k <= n; ++k)
        for (int r = 0; k + r <= n; ++r) {
          ParameterProfile q{n, k, m - 2 * n, r};
          if (!profile_feasible(q)) continue;
          CHECK(BigInt(enumerate_theorem1_tuples(q).size()) ==
                theorem1_tuple_count(q));
        }
}

TEST_CASE("class membership checks") {
  // a tuple for the size-3 profile (1,0,1,1): a=1, b=1
  BinaryWalk w1{{-1, 1}, "N"}, w2{{0, 0}, "N"}, w3{{0, -1}, "E"};
  std::vector<int> s = {0, 1};
  CHECK(is_class_e(w1, w2, w3, s));
  CHECK(class_e_violation(w1, w2, w3, s).empty());
  ClassETuple t = make_class_e(w1, w2, w3, s);
  CHECK(t.a() == 1);
  CHECK(t.b() == 1);

  BinaryWalk east1{{-1, 1}, "E"};  // east counts differ and w1 hits w2's end
  CHECK_FALSE(is_class_e(east1, w2, w3, s));
  CHECK_FALSE(class_e_violation(east1, w2, w3, s).empty());
  CHECK_THROWS_AS(make_class_e(east1, w2, w3, s), contract_error);

  CHECK_FALSE(is_class_e(w1, w2, w3, {1}));     // needs a+1 = 2 entries
  CHECK_FALSE(is_class_e(w1, w2, w3, {0, 2}));  // entries must sum to b = 1

  // touching walks are excluded even with matching counts
  BinaryWalk w2_touch{{0, 0}, "E"};
  BinaryWalk w3_touch{{0, -1}, "NE"};
  CHECK_FALSE(is_class_e(east1, w2_touch, w3_touch, {0}));
}
