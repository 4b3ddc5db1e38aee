#include <doctest.h>

#include <set>
#include <stdexcept>

#include "support/reference.hpp"
#include "treelap/canonical.hpp"
#include "treelap/enumerate.hpp"
#include "treelap/invariants.hpp"

using treelap::Tree;

TEST_SUITE("enumerate") {

TEST_CASE("counts match Otter's formula") {
  for (int n = 1; n <= 14; ++n) {
    long count = 0;
    treelap::for_each_free_tree(n, [&](const Tree&) { ++count; });
    CHECK(count == testref::free_tree_count_formula(n));
  }
}

TEST_CASE("counts match exhaustive labeled enumeration") {
  for (int n = 1; n <= 8; ++n)
    CHECK(static_cast<long>(treelap::enumerate_free_trees(n).size()) ==
          testref::distinct_trees_by_labeled_enumeration(n, 1));
}

TEST_CASE("each class appears exactly once") {
  for (int n = 4; n <= 10; ++n) {
    std::set<std::string> keys;
    long total = 0;
    treelap::for_each_free_tree(n, [&](const Tree& t) {
      ++total;
      REQUIRE(t.n == n);
      keys.insert(testref::ahu_key(t));
    });
    CHECK(static_cast<long>(keys.size()) == total);
  }
}

TEST_CASE("enumeration runs from the path to the star") {
  for (int n : {5, 8, 11}) {
    treelap::FreeTreeEnumerator en(n);
    auto first = en.next();
    REQUIRE(first.has_value());
    CHECK(treelap::diameter(*first) == n - 1);
    Tree last = *first;
    while (auto t = en.next()) last = *t;
    CHECK(treelap::max_degree(last) == n - 1);
  }
}

TEST_CASE("current_layout mirrors the last tree") {
  treelap::FreeTreeEnumerator en(5);
  auto first = en.next();
  REQUIRE(first.has_value());
  CHECK(en.current_layout() == std::vector<int>{0, 1, 2, 1, 2});
  treelap::CanonicalCode layout;
  layout.levels = en.current_layout();
  CHECK(testref::ahu_key(treelap::tree_from_code(layout)) == testref::ahu_key(*first));
}

TEST_CASE("tiny orders") {
  treelap::FreeTreeEnumerator one(1);
  auto t1 = one.next();
  REQUIRE(t1.has_value());
  CHECK(t1->n == 1);
  CHECK_FALSE(one.next().has_value());

  treelap::FreeTreeEnumerator two(2);
  CHECK(two.next()->edges() == std::vector<std::pair<int, int>>{{0, 1}});
  CHECK_FALSE(two.next().has_value());
}

TEST_CASE("order limits") {
  CHECK_THROWS_AS(treelap::FreeTreeEnumerator(0), std::invalid_argument);
  CHECK_THROWS_AS(treelap::FreeTreeEnumerator(21), std::invalid_argument);
  CHECK_NOTHROW(treelap::FreeTreeEnumerator(20));
}

}  // TEST_SUITE
