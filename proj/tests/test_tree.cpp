#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "support/reference.hpp"
#include "treelap/invariants.hpp"
#include "treelap/tree.hpp"

using treelap::Tree;

TEST_SUITE("tree") {

TEST_CASE("make_tree accepts a valid tree and sorts adjacency") {
  Tree t = treelap::make_tree(4, {{2, 0}, {3, 1}, {1, 0}});
  CHECK(t.n == 4);
  CHECK(t.adjacency[0] == std::vector<int>{1, 2});
  CHECK(t.adjacency[1] == std::vector<int>{0, 3});
  CHECK(t.degree(0) == 2);
  CHECK(t.edges() == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 3}});
}

TEST_CASE("make_tree rejects non-trees") {
  CHECK_THROWS_AS(treelap::make_tree(0, {}), std::invalid_argument);
  CHECK_THROWS_AS(treelap::make_tree(3, {{0, 1}}), std::invalid_argument);  // too few edges
  CHECK_THROWS_AS(treelap::make_tree(2, {{0, 1}, {0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(treelap::make_tree(3, {{0, 1}, {1, 3}}), std::invalid_argument);  // id range
  CHECK_THROWS_AS(treelap::make_tree(2, {{0, 0}}), std::invalid_argument);  // self-loop
  CHECK_THROWS_WITH_AS(treelap::make_tree(4, {{0, 1}, {1, 2}, {2, 0}}),
                       doctest::Contains("cycle"), std::invalid_argument);
}

TEST_CASE("parse_edge_list handles comments and 1-based ids") {
  Tree t = treelap::parse_edge_list("# header\n1 2\n2 3  # tail comment\n\n2 4\n");
  CHECK(t.n == 4);
  // shifted down to 0-based: edges 0-1, 1-2, 1-3
  CHECK(t.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {1, 3}});

  Tree z = treelap::parse_edge_list("0 1\n1 2\n");
  CHECK(z.n == 3);
  CHECK(z.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
}

TEST_CASE("parse_edge_list reports the offending line") {
  CHECK_THROWS_WITH_AS(treelap::parse_edge_list("0 1\n1 2\n2\n"),
                       doctest::Contains("line 3"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(treelap::parse_edge_list("0 1\na b\n"), doctest::Contains("line 2"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(treelap::parse_edge_list("0 1 2\n"), doctest::Contains("line 1"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(treelap::parse_edge_list("0 1\n1 2\n2 0\n3 0\n"),
                       doctest::Contains("line 3"), std::invalid_argument);  // closes a cycle
  CHECK_THROWS_WITH_AS(treelap::parse_edge_list("1 1\n"), doctest::Contains("self-loop"),
                       std::invalid_argument);
  CHECK_THROWS_AS(treelap::parse_edge_list(""), std::invalid_argument);
  CHECK_THROWS_AS(treelap::parse_edge_list("# only comments\n"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(treelap::parse_edge_list("0 2\n"), doctest::Contains("missing"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(treelap::parse_edge_list("0 1\n2 3\n"), doctest::Contains("disconnected"),
                       std::invalid_argument);
  CHECK_THROWS_AS(treelap::parse_edge_list("2 3\n"), std::invalid_argument);  // ids start at 2
  CHECK_THROWS_AS(treelap::parse_edge_list("0 -1\n"), std::invalid_argument);
}

TEST_CASE("to_edge_list round trip") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Tree t = treelap::random_tree(9, seed);
    Tree back = treelap::parse_edge_list(treelap::to_edge_list(t));
    CHECK(back.adjacency == t.adjacency);
  }
}

TEST_CASE("path and star generators") {
  Tree p5 = treelap::generate_path(5);
  CHECK(p5.n == 5);
  CHECK(treelap::diameter(p5) == 4);
  CHECK(treelap::leaf_count(p5) == 2);

  Tree s6 = treelap::generate_star(6);
  CHECK(s6.degree(0) == 5);
  CHECK(treelap::diameter(s6) == 2);
  CHECK(treelap::leaf_count(s6) == 5);

  CHECK(treelap::generate_path(1).n == 1);
  CHECK(treelap::generate_star(2).edges().size() == 1);
  CHECK_THROWS_AS(treelap::generate_path(0), std::invalid_argument);
}

TEST_CASE("caterpillar generator") {
  Tree t = treelap::generate_caterpillar({2, 0, 1});
  CHECK(t.n == 6);
  CHECK(treelap::leaf_count(t) == 3);
  CHECK(treelap::diameter(t) == 4);
  CHECK(t.degree(0) == 3);  // spine neighbor plus two leaves
  CHECK(t.degree(1) == 2);

  // degenerate shapes are still fine
  CHECK(treelap::generate_caterpillar({0, 0}).n == 2);
  CHECK(treelap::diameter(treelap::generate_caterpillar({3})) == 2);  // a star
  CHECK_THROWS_AS(treelap::generate_caterpillar({}), std::invalid_argument);
  CHECK_THROWS_AS(treelap::generate_caterpillar({1, -1}), std::invalid_argument);
}

TEST_CASE("diameter-4 generator") {
  Tree t = treelap::generate_diameter4(0, {1, 1});
  CHECK(t.n == 5);
  CHECK(treelap::diameter(t) == 4);

  Tree u = treelap::generate_diameter4(2, {3, 1});
  CHECK(u.n == 9);
  CHECK(u.degree(0) == 4);  // two root leaves plus two branch vertices
  CHECK(treelap::diameter(u) == 4);
  CHECK(treelap::leaf_count(u) == 6);

  CHECK_THROWS_AS(treelap::generate_diameter4(0, {3}), std::invalid_argument);
  CHECK_THROWS_AS(treelap::generate_diameter4(-1, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(treelap::generate_diameter4(0, {1, 0}), std::invalid_argument);
}

TEST_CASE("random_tree is deterministic per seed and uniform over shapes") {
  Tree a = treelap::random_tree(10, 7);
  Tree b = treelap::random_tree(10, 7);
  CHECK(a.adjacency == b.adjacency);

  bool saw_different = false;
  for (std::uint64_t seed = 0; seed < 10 && !saw_different; ++seed)
    saw_different = treelap::random_tree(10, seed).adjacency != a.adjacency;
  CHECK(saw_different);

  // n = 4 has exactly two shapes; both should appear over a few seeds
  bool saw_path = false, saw_star = false;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Tree t = treelap::random_tree(4, seed);
    (treelap::max_degree(t) == 3 ? saw_star : saw_path) = true;
  }
  CHECK(saw_path);
  CHECK(saw_star);

  CHECK(treelap::random_tree(1, 0).n == 1);
  CHECK(treelap::random_tree(2, 0).edges().size() == 1);
}

TEST_CASE("golden fixture wiring") {
  Tree t = testref::golden_tree5();
  CHECK(t.n == 5);
  // 1-based labels shift down: v3 -> 2 with degree 3, v5 -> 4 with degree 2
  CHECK(t.degree(2) == 3);
  CHECK(t.degree(4) == 2);
  CHECK(treelap::diameter(t) == 3);
  CHECK(treelap::leaf_count(t) == 3);
}

}  // TEST_SUITE
