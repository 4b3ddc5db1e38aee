#pragma once

#include <cstdint>
#include <vector>

#include "treelap/tree.hpp"

namespace treelap {

struct RootedTree {
  Tree base;
  int root = 0;
  std::vector<int> parent;                  // -1 for the root
  std::vector<std::vector<int>> children;
  std::vector<int> order;                   // post-order: children before parents
  std::vector<int> pos_in_order;            // inverse of order

  int n() const { return base.n; }
};

RootedTree root_at(const Tree& t, int root);

// Same orientation but with every child list permuted by a seeded shuffle.
// The post-order is rebuilt from the shuffled lists.
RootedTree root_at_shuffled(const Tree& t, int root, std::uint64_t seed);

}  // namespace treelap
