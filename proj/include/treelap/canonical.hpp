#pragma once

#include <string>
#include <vector>

#include "treelap/tree.hpp"

namespace treelap {

// Canonical form of a free tree: root at the centroid and take the
// lexicographically maximal level sequence (depths in preorder, root depth 0).
// A bicentroidal tree is encoded from whichever centroid gives the smaller
// sequence, so isomorphic trees always share one code.
struct CanonicalCode {
  std::vector<int> levels;

  std::string str() const;                  // comma-separated levels
  bool operator==(const CanonicalCode&) const = default;
  bool operator<(const CanonicalCode& o) const { return levels < o.levels; }
};

std::vector<int> centroids(const Tree& t);  // one or two vertices

CanonicalCode canonical_code(const Tree& t);

CanonicalCode parse_canonical_code(const std::string& s);

// Rebuilds a tree from a level sequence (vertex ids in preorder).
Tree tree_from_code(const CanonicalCode& code);

}  // namespace treelap
