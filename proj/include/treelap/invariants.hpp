#pragma once

#include "treelap/rational.hpp"
#include "treelap/tree.hpp"

namespace treelap {

struct InvariantSet {
  int n = 0;
  int leaf_count = 0;
  int diameter = 0;
  int max_degree = 0;
  long gamma = 0;   // domination number
  long beta0 = 0;   // independence number
  QQ avg_degree;    // 2 - 2/n
};

int diameter(const Tree& t);
int leaf_count(const Tree& t);
int max_degree(const Tree& t);
long domination_number(const Tree& t);
long independence_number(const Tree& t);

InvariantSet invariants(const Tree& t);

}  // namespace treelap
