#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "treelap/tree.hpp"

namespace treelap {

inline constexpr int kEnumerateMaxOrder = 20;

// Isomorphism-free generation of all free trees on n vertices by successor
// stepping through canonical level sequences (the constant-amortized-time
// scheme of Wright, Richmond, Odlyzko and McKay). Yields each class once,
// in a fixed deterministic order.
class FreeTreeEnumerator {
 public:
  explicit FreeTreeEnumerator(int n);  // throws std::invalid_argument if out of range

  // Returns the next tree, or nullopt when exhausted.
  std::optional<Tree> next();

  // Level sequence of the tree most recently returned by next().
  const std::vector<int>& current_layout() const { return layout_; }

 private:
  int n_;
  bool done_ = false;
  bool first_ = true;
  std::vector<int> layout_;
};

std::vector<Tree> enumerate_free_trees(int n);

void for_each_free_tree(int n, const std::function<void(const Tree&)>& fn);

}  // namespace treelap
