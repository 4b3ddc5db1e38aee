#include "treelap/canonical.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace treelap {

namespace {

// Level sequence of the subtree at v, canonical form: child blocks sorted in
// descending lexicographic order, which maximizes the concatenation.
std::vector<int> canon_levels(const Tree& t, int v, int parent, int depth) {
  std::vector<std::vector<int>> blocks;
  for (int w : t.adjacency[v])
    if (w != parent) blocks.push_back(canon_levels(t, w, v, depth + 1));
  std::sort(blocks.begin(), blocks.end(), std::greater<>());
  std::vector<int> out{depth};
  for (const auto& b : blocks) out.insert(out.end(), b.begin(), b.end());
  return out;
}

int subtree_size(const Tree& t, int v, int parent) {
  int size = 1;
  for (int w : t.adjacency[v])
    if (w != parent) size += subtree_size(t, w, v);
  return size;
}

}  // namespace

std::string CanonicalCode::str() const {
  std::string out;
  for (size_t i = 0; i < levels.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(levels[i]);
  }
  return out;
}

std::vector<int> centroids(const Tree& t) {
  int n = t.n;
  if (n == 1) return {0};
  // subtree sizes from root 0, then the max-component criterion
  std::vector<int> size(n, 1), parent(n, -1), order;
  order.reserve(n);
  std::vector<int> stack{0};
  std::vector<char> seen(n, 0);
  seen[0] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (int w : t.adjacency[v])
      if (!seen[w]) {
        seen[w] = 1;
        parent[w] = v;
        stack.push_back(w);
      }
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    if (parent[*it] != -1) size[parent[*it]] += size[*it];
  std::vector<int> result;
  for (int v = 0; v < n; ++v) {
    int biggest = n - size[v];  // the component through v's parent
    for (int w : t.adjacency[v])
      if (parent[w] == v) biggest = std::max(biggest, size[w]);
    if (biggest <= n / 2) result.push_back(v);
  }
  return result;
}

CanonicalCode canonical_code(const Tree& t) {
  auto cents = centroids(t);
  CanonicalCode best;
  for (size_t i = 0; i < cents.size(); ++i) {
    CanonicalCode code{canon_levels(t, cents[i], -1, 0)};
    if (i == 0 || code.levels < best.levels) best = std::move(code);
  }
  return best;
}

CanonicalCode parse_canonicalcode_impl(const std::string& s) {
  CanonicalCode code;
  if (s.empty()) throw std::invalid_argument("empty level sequence");
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t comma = s.find(',', pos);
    std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    try {
      size_t used;
      int level = std::stoi(tok, &used);
      if (used != tok.size() || level < 0) throw std::invalid_argument(tok);
      code.levels.push_back(level);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad level token '" + tok + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return code;
}

CanonicalCode parse_canonical_code(const std::string& s) {
  CanonicalCode code = parse_canonicalcode_impl(s);
  // tree_from_code validates the structure
  tree_from_code(code);
  return code;
}

Tree tree_from_code(const CanonicalCode& code) {
  const auto& levels = code.levels;
  int n = static_cast<int>(levels.size());
  if (n == 0) throw std::invalid_argument("empty level sequence");
  if (levels[0] != 0) throw std::invalid_argument("level sequence must start at 0");
  std::vector<std::pair<int, int>> edges;
  std::vector<int> path{0};  // current root-to-vertex path, indexed by depth
  for (int i = 1; i < n; ++i) {
    int l = levels[i];
    if (l < 1 || l > static_cast<int>(path.size()))
      throw std::invalid_argument("level jump at position " + std::to_string(i));
    edges.emplace_back(path[l - 1], i);
    path.resize(l);
    path.push_back(i);
  }
  return make_tree(n, edges);
}

}  // namespace treelap
