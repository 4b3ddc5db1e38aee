#include "treelap/invariants.hpp"

#include <algorithm>
#include <queue>
#include <vector>

#include "treelap/rooted.hpp"

namespace treelap {

namespace {

std::pair<int, int> farthest_from(const Tree& t, int start) {
  std::vector<int> dist(t.n, -1);
  std::queue<int> q;
  q.push(start);
  dist[start] = 0;
  int best = start;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    if (dist[v] > dist[best]) best = v;
    for (int w : t.adjacency[v])
      if (dist[w] == -1) {
        dist[w] = dist[v] + 1;
        q.push(w);
      }
  }
  return {best, dist[best]};
}

}  // namespace

int diameter(const Tree& t) {
  auto [far, ignored] = farthest_from(t, 0);
  return farthest_from(t, far).second;
}

int leaf_count(const Tree& t) {
  int count = 0;
  for (int v = 0; v < t.n; ++v)
    if (t.degree(v) == 1) ++count;
  return count;
}

int max_degree(const Tree& t) {
  int best = 0;
  for (int v = 0; v < t.n; ++v) best = std::max(best, t.degree(v));
  return best;
}

long domination_number(const Tree& t) {
  const long INF = t.n + 1;
  RootedTree rt = root_at(t, t.n - 1);
  // states: vertex in the set / dominated by a child / waiting for its parent
  std::vector<long> in_set(t.n), dominated(t.n), undominated(t.n);
  for (int v : rt.order) {
    if (rt.children[v].empty()) {
      in_set[v] = 1;
      dominated[v] = INF;
      undominated[v] = 0;
      continue;
    }
    long take = 1, base = 0, penalty = INF;
    for (int c : rt.children[v]) {
      take += std::min({in_set[c], dominated[c], undominated[c]});
      long covered = std::min(in_set[c], dominated[c]);
      base += covered;
      penalty = std::min(penalty, in_set[c] - covered);
    }
    in_set[v] = take;
    undominated[v] = std::min(base, INF);
    dominated[v] = std::min(base + penalty, INF);  // at least one child in the set
  }
  int r = rt.root;
  return std::min(in_set[r], dominated[r]);
}

long independence_number(const Tree& t) {
  RootedTree rt = root_at(t, t.n - 1);
  std::vector<long> take(t.n), skip(t.n);
  for (int v : rt.order) {
    take[v] = 1;
    skip[v] = 0;
    for (int c : rt.children[v]) {
      take[v] += skip[c];
      skip[v] += std::max(take[c], skip[c]);
    }
  }
  int r = rt.root;
  return std::max(take[r], skip[r]);
}

InvariantSet invariants(const Tree& t) {
  InvariantSet s;
  s.n = t.n;
  s.leaf_count = leaf_count(t);
  s.diameter = diameter(t);
  s.max_degree = max_degree(t);
  s.gamma = domination_number(t);
  s.beta0 = independence_number(t);
  s.avg_degree = QQ(2 * (t.n - 1), t.n);
  s.avg_degree.canonicalize();
  return s;
}

}  // namespace treelap
