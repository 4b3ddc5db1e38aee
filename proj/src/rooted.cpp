#include "treelap/rooted.hpp"

#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

namespace treelap {

namespace {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  std::uint64_t rem = (std::numeric_limits<std::uint64_t>::max() % n + 1) % n;
  for (;;) {
    std::uint64_t x = rng();
    if (rem == 0 || x <= std::numeric_limits<std::uint64_t>::max() - rem) return x % n;
  }
}

void build_order(RootedTree& rt) {
  int n = rt.base.n;
  rt.order.clear();
  rt.order.reserve(n);
  rt.pos_in_order.assign(n, -1);
  // iterative post-order; child lists are visited in stored order
  std::vector<std::pair<int, size_t>> stack;
  stack.emplace_back(rt.root, 0);
  while (!stack.empty()) {
    auto& [v, next_child] = stack.back();
    if (next_child < rt.children[v].size()) {
      int c = rt.children[v][next_child++];
      stack.emplace_back(c, 0);
    } else {
      rt.order.push_back(v);
      stack.pop_back();
    }
  }
  for (int i = 0; i < n; ++i) rt.pos_in_order[rt.order[i]] = i;
}

RootedTree orient(const Tree& t, int root) {
  if (root < 0 || root >= t.n) throw std::invalid_argument("root out of range");
  RootedTree rt;
  rt.base = t;
  rt.root = root;
  rt.parent.assign(t.n, -1);
  rt.children.assign(t.n, {});
  std::vector<int> stack{root};
  std::vector<char> seen(t.n, 0);
  seen[root] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : t.adjacency[v]) {
      if (seen[w]) continue;
      seen[w] = 1;
      rt.parent[w] = v;
      rt.children[v].push_back(w);  // ascending, since adjacency is sorted
      stack.push_back(w);
    }
  }
  return rt;
}

}  // namespace

RootedTree root_at(const Tree& t, int root) {
  RootedTree rt = orient(t, root);
  build_order(rt);
  return rt;
}

RootedTree root_at_shuffled(const Tree& t, int root, std::uint64_t seed) {
  RootedTree rt = orient(t, root);
  std::mt19937_64 rng(seed);
  for (auto& kids : rt.children) {
    for (size_t i = kids.size(); i > 1; --i) {
      size_t j = uniform_below(rng, i);
      std::swap(kids[i - 1], kids[j]);
    }
  }
  build_order(rt);
  return rt;
}

}  // namespace treelap
