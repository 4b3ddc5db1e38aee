#include "treelap/tree.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

namespace treelap {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

[[noreturn]] void fail_at(int line, const std::string& msg) {
  fail("line " + std::to_string(line) + ": " + msg);
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  // 2^64 mod n; rejection keeps the draw exactly uniform
  std::uint64_t rem = (std::numeric_limits<std::uint64_t>::max() % n + 1) % n;
  for (;;) {
    std::uint64_t x = rng();
    if (rem == 0 || x <= std::numeric_limits<std::uint64_t>::max() - rem) return x % n;
  }
}

}  // namespace

std::vector<std::pair<int, int>> Tree::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(n > 0 ? n - 1 : 0);
  for (int u = 0; u < n; ++u)
    for (int v : adjacency[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Tree make_tree(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 1) fail("vertex count must be at least 1");
  if (static_cast<int>(edges.size()) != n - 1)
    fail("a tree on " + std::to_string(n) + " vertices needs " + std::to_string(n - 1) +
         " edges, got " + std::to_string(edges.size()));
  Tree t;
  t.n = n;
  t.adjacency.assign(n, {});
  std::set<std::pair<int, int>> seen;
  UnionFind uf(n);
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) fail("vertex id out of range");
    if (u == v) fail("self-loop at vertex " + std::to_string(u));
    auto key = std::minmax(u, v);
    if (!seen.insert(key).second)
      fail("duplicate edge " + std::to_string(key.first) + "-" + std::to_string(key.second));
    if (!uf.unite(u, v)) fail("cycle detected");
    t.adjacency[u].push_back(v);
    t.adjacency[v].push_back(u);
  }
  for (int v = 1; v < n; ++v)
    if (uf.find(v) != uf.find(0)) fail("disconnected");
  for (auto& nbrs : t.adjacency) std::sort(nbrs.begin(), nbrs.end());
  return t;
}

Tree parse_edge_list(std::string_view text) {
  struct RawEdge {
    long u, v;
    int line;
  };
  std::vector<RawEdge> raw;
  int line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string tok_u, tok_v, extra;
    if (!(ls >> tok_u)) continue;  // blank or comment-only line
    if (!(ls >> tok_v)) fail_at(line_no, "expected two vertex ids");
    if (ls >> extra) fail_at(line_no, "bad token '" + extra + "'");
    long u, v;
    try {
      size_t pos;
      u = std::stol(tok_u, &pos);
      if (pos != tok_u.size()) throw std::invalid_argument(tok_u);
      v = std::stol(tok_v, &pos);
      if (pos != tok_v.size()) throw std::invalid_argument(tok_v);
    } catch (const std::exception&) {
      fail_at(line_no, "bad token '" + tok_u + " " + tok_v + "'");
    }
    if (u < 0 || v < 0) fail_at(line_no, "negative vertex id");
    raw.push_back({u, v, line_no});
  }
  if (raw.empty()) fail("no edges");

  long min_id = raw[0].u, max_id = raw[0].u;
  for (const auto& e : raw) {
    min_id = std::min({min_id, e.u, e.v});
    max_id = std::max({max_id, e.u, e.v});
  }
  if (min_id > 1) fail("vertex ids must start at 0 or 1");
  long base = min_id;  // 0- or 1-based input, normalized to 0-based
  long n = max_id - base + 1;
  if (n > 1'000'000) fail("vertex id range too large");

  std::vector<char> present(n, 0);
  for (const auto& e : raw) {
    present[e.u - base] = 1;
    present[e.v - base] = 1;
  }
  for (long v = 0; v < n; ++v)
    if (!present[v]) fail("vertex ids not contiguous: missing " + std::to_string(v + base));
  if (static_cast<long>(raw.size()) != n - 1) {
    // pick the most descriptive error: a surplus edge closes a cycle and is
    // reported with its line below; a deficit means disconnection
    if (static_cast<long>(raw.size()) < n - 1) fail("disconnected");
  }

  Tree t;
  t.n = static_cast<int>(n);
  t.adjacency.assign(t.n, {});
  std::set<std::pair<int, int>> seen;
  UnionFind uf(t.n);
  for (const auto& e : raw) {
    int u = static_cast<int>(e.u - base);
    int v = static_cast<int>(e.v - base);
    if (u == v) fail_at(e.line, "self-loop " + std::to_string(e.u) + "-" + std::to_string(e.v));
    auto key = std::minmax(u, v);
    if (!seen.insert(key).second)
      fail_at(e.line, "duplicate edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
    if (!uf.unite(u, v)) fail_at(e.line, "cycle detected");
    t.adjacency[u].push_back(v);
    t.adjacency[v].push_back(u);
  }
  for (int v = 1; v < t.n; ++v)
    if (uf.find(v) != uf.find(0)) fail("disconnected");
  for (auto& nbrs : t.adjacency) std::sort(nbrs.begin(), nbrs.end());
  return t;
}

std::string to_edge_list(const Tree& t) {
  std::string out;
  for (auto [u, v] : t.edges()) {
    out += std::to_string(u);
    out += ' ';
    out += std::to_string(v);
    out += '\n';
  }
  return out;
}

Tree generate_path(int n) {
  if (n < 1) fail("path needs at least 1 vertex");
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  return make_tree(n, edges);
}

Tree generate_star(int n) {
  if (n < 1) fail("star needs at least 1 vertex");
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
  return make_tree(n, edges);
}

Tree generate_caterpillar(const std::vector<int>& spine_leaves) {
  int s = static_cast<int>(spine_leaves.size());
  if (s < 1) fail("caterpillar needs at least 1 spine vertex");
  for (int c : spine_leaves)
    if (c < 0) fail("negative leaf count");
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < s; ++v) edges.emplace_back(v - 1, v);
  int next = s;
  for (int v = 0; v < s; ++v)
    for (int k = 0; k < spine_leaves[v]; ++k) edges.emplace_back(v, next++);
  return make_tree(next, edges);
}

Tree generate_diameter4(int p, const std::vector<int>& s) {
  int r = static_cast<int>(s.size());
  if (r < 2) fail("diameter-4 tree needs at least 2 internal branches");
  if (p < 0) fail("negative root leaf count");
  for (int si : s)
    if (si < 1) fail("each internal branch needs at least 1 leaf");
  std::vector<std::pair<int, int>> edges;
  int next = 1;
  for (int k = 0; k < p; ++k) edges.emplace_back(0, next++);
  std::vector<int> internal(r);
  for (int i = 0; i < r; ++i) {
    internal[i] = next++;
    edges.emplace_back(0, internal[i]);
  }
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < s[i]; ++k) edges.emplace_back(internal[i], next++);
  return make_tree(next, edges);
}

Tree random_tree(int n, std::uint64_t seed) {
  if (n < 1) fail("tree needs at least 1 vertex");
  if (n == 1) return make_tree(1, {});
  if (n == 2) return make_tree(2, {{0, 1}});
  std::mt19937_64 rng(seed);
  std::vector<int> prufer(n - 2);
  for (int& x : prufer) x = static_cast<int>(uniform_below(rng, n));

  std::vector<int> degree(n, 1);
  for (int v : prufer) degree[v]++;
  int ptr = 0;
  while (degree[ptr] != 1) ptr++;
  int leaf = ptr;
  std::vector<std::pair<int, int>> edges;
  for (int v : prufer) {
    edges.emplace_back(leaf, v);
    if (--degree[v] == 1 && v < ptr) {
      leaf = v;
    } else {
      ptr++;
      while (degree[ptr] != 1) ptr++;
      leaf = ptr;
    }
  }
  edges.emplace_back(leaf, n - 1);
  return make_tree(n, edges);
}

}  // namespace treelap
