#include <doctest.h>

#include "support/reference.hpp"
#include "treelap/enumerate.hpp"
#include "treelap/invariants.hpp"
#include "treelap/tree.hpp"

using treelap::QQ;
using treelap::Tree;

TEST_SUITE("invariants") {

TEST_CASE("known families") {
  for (int n = 1; n <= 12; ++n) {
    Tree p = treelap::generate_path(n);
    CHECK(treelap::diameter(p) == n - 1);
    CHECK(treelap::leaf_count(p) == (n >= 2 ? 2 : 0));
    CHECK(treelap::domination_number(p) == (n + 2) / 3);
    CHECK(treelap::independence_number(p) == (n + 1) / 2);

    if (n >= 2) {
      Tree s = treelap::generate_star(n);
      CHECK(treelap::diameter(s) == (n >= 3 ? 2 : 1));
      CHECK(treelap::max_degree(s) == n - 1);
      CHECK(treelap::domination_number(s) == 1);
      CHECK(treelap::independence_number(s) == (n >= 2 ? n - 1 : 1));
    }
  }
}

TEST_CASE("golden fixture invariants") {
  Tree t = testref::golden_tree5();
  CHECK(treelap::diameter(t) == 3);
  CHECK(treelap::leaf_count(t) == 3);
  CHECK(treelap::max_degree(t) == 3);
  CHECK(treelap::domination_number(t) == 2);
  CHECK(treelap::independence_number(t) == 3);
}

TEST_CASE("domination and independence match brute force on every small tree") {
  for (int n = 1; n <= 9; ++n) {
    treelap::for_each_free_tree(n, [&](const Tree& t) {
      CHECK(treelap::domination_number(t) == testref::brute_domination(t));
      CHECK(treelap::independence_number(t) == testref::brute_independence(t));
    });
  }
}

TEST_CASE("domination and independence match brute force on random trees") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    Tree t = treelap::random_tree(10 + static_cast<int>(seed % 6), seed * 7 + 3);
    CHECK(treelap::domination_number(t) == testref::brute_domination(t));
    CHECK(treelap::independence_number(t) == testref::brute_independence(t));
  }
}

TEST_CASE("invariants() bundles the individual functions") {
  Tree t = treelap::random_tree(11, 19);
  auto inv = treelap::invariants(t);
  CHECK(inv.n == t.n);
  CHECK(inv.leaf_count == treelap::leaf_count(t));
  CHECK(inv.diameter == treelap::diameter(t));
  CHECK(inv.max_degree == treelap::max_degree(t));
  CHECK(inv.gamma == treelap::domination_number(t));
  CHECK(inv.beta0 == treelap::independence_number(t));
  CHECK(inv.avg_degree == QQ(2 * (t.n - 1), t.n));
}

TEST_CASE("single vertex") {
  Tree t = treelap::make_tree(1, {});
  CHECK(treelap::diameter(t) == 0);
  CHECK(treelap::leaf_count(t) == 0);  // a leaf has degree exactly 1
  CHECK(treelap::max_degree(t) == 0);
  CHECK(treelap::domination_number(t) == 1);
  CHECK(treelap::independence_number(t) == 1);
}

}  // TEST_SUITE
