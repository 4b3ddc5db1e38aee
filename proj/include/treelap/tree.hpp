#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace treelap {

// Undirected tree on vertices 0..n-1. Adjacency lists are kept sorted so that
// identical trees always produce identical traversals.
struct Tree {
  int n = 0;
  std::vector<std::vector<int>> adjacency;

  int degree(int v) const { return static_cast<int>(adjacency[v].size()); }
  std::vector<std::pair<int, int>> edges() const;
};

// Builds a Tree from an edge list over ids 0..n-1, validating the tree
// invariants (n-1 edges, no self-loops or duplicates, connected).
Tree make_tree(int n, const std::vector<std::pair<int, int>>& edges);

// Parses line-oriented "u v" pairs; '#' starts a comment. Ids may be 0-based
// or 1-based; 1-based input is shifted down. Throws std::invalid_argument
// with a line number on malformed input and on non-tree edge sets.
Tree parse_edge_list(std::string_view text);

std::string to_edge_list(const Tree& t);

Tree generate_path(int n);
Tree generate_star(int n);

// Spine vertices form a path; spine_leaves[i] extra leaves hang off spine
// vertex i. Every non-leaf lies on the spine, so the result is a caterpillar.
Tree generate_caterpillar(const std::vector<int>& spine_leaves);

// Root with p leaves plus r internal neighbors carrying s[i] >= 1 leaves each
// (r = s.size() >= 2), giving diameter exactly 4.
Tree generate_diameter4(int p, const std::vector<int>& s);

// Uniform labeled tree via Prufer decoding; fixed seeded generator, so the
// same (n, seed) yields the same tree on every platform.
Tree random_tree(int n, std::uint64_t seed);

}  // namespace treelap
