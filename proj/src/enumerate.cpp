#include "treelap/enumerate.hpp"

#include <algorithm>
#include <stdexcept>

#include "treelap/canonical.hpp"

namespace treelap {

namespace {

struct Split {
  std::vector<int> left;  // first subtree of the root, levels shifted down
  std::vector<int> rest;  // the tree with that subtree removed
};

Split split_tree(const std::vector<int>& layout) {
  size_t m = layout.size();
  bool one_found = false;
  for (size_t i = 0; i < layout.size(); ++i) {
    if (layout[i] == 1) {
      if (one_found) {
        m = i;
        break;
      }
      one_found = true;
    }
  }
  Split s;
  s.left.reserve(m - 1);
  for (size_t i = 1; i < m; ++i) s.left.push_back(layout[i] - 1);
  s.rest.reserve(layout.size() - m + 1);
  s.rest.push_back(0);
  for (size_t i = m; i < layout.size(); ++i) s.rest.push_back(layout[i]);
  return s;
}

// Beyer-Hedetniemi successor of a rooted level sequence; empty when p
// reaches the root. p < 0 means "find the last entry above 1".
std::optional<std::vector<int>> next_rooted_tree(const std::vector<int>& predecessor, int p) {
  if (p < 0) {
    p = static_cast<int>(predecessor.size()) - 1;
    while (predecessor[p] == 1) --p;
  }
  if (p == 0) return std::nullopt;
  int q = p - 1;
  while (predecessor[q] != predecessor[p] - 1) --q;
  std::vector<int> result = predecessor;
  for (size_t i = p; i < result.size(); ++i) result[i] = result[i - p + q];
  return result;
}

// One step of the free-tree successor: returns the candidate itself when it
// is a valid free-tree representative, otherwise jumps past the subtrees
// that can no longer be completed validly.
std::vector<int> next_tree(const std::vector<int>& candidate) {
  Split s = split_tree(candidate);
  int left_height = *std::max_element(s.left.begin(), s.left.end());
  int rest_height = *std::max_element(s.rest.begin(), s.rest.end());
  bool valid = rest_height >= left_height;
  if (valid && rest_height == left_height) {
    if (s.left.size() > s.rest.size())
      valid = false;
    else if (s.left.size() == s.rest.size() && s.left > s.rest)
      valid = false;
  }
  if (valid) return candidate;

  int p = static_cast<int>(s.left.size());
  auto next = next_rooted_tree(candidate, p);
  std::vector<int> result = std::move(*next);
  if (candidate[p] > 2) {
    Split ns = split_tree(result);
    int new_left_height = *std::max_element(ns.left.begin(), ns.left.end());
    int suffix_len = new_left_height + 1;
    for (int i = 0; i < suffix_len; ++i)
      result[result.size() - suffix_len + i] = i + 1;
  }
  return result;
}

}  // namespace

FreeTreeEnumerator::FreeTreeEnumerator(int n) : n_(n) {
  if (n < 1 || n > kEnumerateMaxOrder)
    throw std::invalid_argument("order must be between 1 and " +
                                std::to_string(kEnumerateMaxOrder));
  if (n == 1) return;
  // start from the path rooted at its center
  for (int i = 0; i <= n / 2; ++i) layout_.push_back(i);
  for (int i = 1; i < (n + 1) / 2; ++i) layout_.push_back(i);
}

std::optional<Tree> FreeTreeEnumerator::next() {
  if (done_) return std::nullopt;
  if (n_ == 1) {
    done_ = true;
    layout_ = {0};
    return make_tree(1, {});
  }
  if (!first_) {
    auto succ = next_rooted_tree(layout_, -1);
    if (!succ) {
      done_ = true;
      return std::nullopt;
    }
    layout_ = std::move(*succ);
  }
  first_ = false;
  layout_ = next_tree(layout_);
  CanonicalCode code;
  code.levels = layout_;
  return tree_from_code(code);
}

std::vector<Tree> enumerate_free_trees(int n) {
  std::vector<Tree> out;
  FreeTreeEnumerator en(n);
  while (auto t = en.next()) out.push_back(std::move(*t));
  return out;
}

void for_each_free_tree(int n, const std::function<void(const Tree&)>& fn) {
  FreeTreeEnumerator en(n);
  while (auto t = en.next()) fn(*t);
}

}  // namespace treelap
