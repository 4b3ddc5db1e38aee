#include "treelap/oracle/dense.hpp"

#include <stdexcept>

namespace treelap::oracle {

namespace {

void check_edge(const SimpleGraph& g, int u, int v) {
  if (u < 0 || u >= g.n || v < 0 || v >= g.n)
    throw std::invalid_argument("edge endpoint out of range");
  if (u == v) throw std::invalid_argument("self-loop");
}

}  // namespace

SimpleGraph complete_graph(int n) {
  SimpleGraph g;
  g.n = n;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.edges.emplace_back(u, v);
  return g;
}

SimpleGraph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  SimpleGraph g;
  g.n = n;
  for (int v = 0; v < n; ++v) g.edges.emplace_back(v, (v + 1) % n);
  return g;
}

SimpleGraph graph_from_tree(const Tree& t) {
  SimpleGraph g;
  g.n = t.n;
  g.edges = t.edges();
  return g;
}

SimpleGraph disjoint_union(const SimpleGraph& a, const SimpleGraph& b) {
  SimpleGraph g;
  g.n = a.n + b.n;
  g.edges = a.edges;
  for (auto [u, v] : b.edges) g.edges.emplace_back(u + a.n, v + a.n);
  return g;
}

MatZZ adjacency_matrix(const SimpleGraph& g) {
  MatZZ m = MatZZ::Zero(g.n, g.n);
  for (auto [u, v] : g.edges) {
    check_edge(g, u, v);
    m(u, v) = 1;
    m(v, u) = 1;
  }
  return m;
}

MatZZ laplacian_matrix(const SimpleGraph& g) {
  MatZZ m = MatZZ::Zero(g.n, g.n);
  for (auto [u, v] : g.edges) {
    check_edge(g, u, v);
    m(u, v) -= 1;
    m(v, u) -= 1;
    m(u, u) += 1;
    m(v, v) += 1;
  }
  return m;
}

MatZZ adjacency_matrix(const Tree& t) { return adjacency_matrix(graph_from_tree(t)); }

MatZZ laplacian_matrix(const Tree& t) { return laplacian_matrix(graph_from_tree(t)); }

MatD to_double(const MatZZ& m) {
  MatD out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).get_d();
  return out;
}

}  // namespace treelap::oracle
