#include "treelap/diagonalize.hpp"

namespace treelap {

namespace {

DiagResult run(const RootedTree& rt, const QQ& x, MatrixKind kind) {
  int n = rt.n();
  DiagResult res;
  res.matrix_kind = kind;
  res.shift = x;

  std::vector<QQ> d(n);
  for (int v = 0; v < n; ++v) {
    if (kind == MatrixKind::adjacency)
      d[v] = x;
    else
      d[v] = QQ(rt.base.degree(v)) + x;
  }

  std::vector<char> severed(n, 0);  // severed[v]: edge to parent(v) removed
  for (int idx = 0; idx < n; ++idx) {
    int v = rt.order[idx];
    int zero_child = -1;
    for (int c : rt.children[v]) {
      if (severed[c] || sgn(d[c]) != 0) continue;
      if (zero_child == -1 || rt.pos_in_order[c] < rt.pos_in_order[zero_child])
        zero_child = c;
    }
    if (zero_child != -1) {
      d[v] = QQ(-1, 2);
      d[zero_child] = 2;
      if (rt.parent[v] != -1) severed[v] = 1;
    } else {
      // leaves have no children, so their value is left untouched
      for (int c : rt.children[v])
        if (!severed[c]) d[v] -= 1 / d[c];
    }
  }

  res.values.resize(n);
  for (int idx = 0; idx < n; ++idx) res.values[idx] = d[rt.order[idx]];
  for (const QQ& val : res.values) {
    int s = sgn(val);
    if (s > 0)
      ++res.n_pos;
    else if (s < 0)
      ++res.n_neg;
    else
      ++res.n_zero;
  }
  return res;
}

InertiaTriple triple_from(const DiagResult& r) {
  return {r.n_pos, r.n_neg, r.n_zero};
}

}  // namespace

DiagResult diagonalize_adjacency(const RootedTree& rt, const QQ& x) {
  return run(rt, x, MatrixKind::adjacency);
}

DiagResult diagonalize_laplacian(const RootedTree& rt, const QQ& x) {
  return run(rt, x, MatrixKind::laplacian);
}

InertiaTriple count_adjacency(const RootedTree& rt, const QQ& alpha) {
  return triple_from(diagonalize_adjacency(rt, -alpha));
}

InertiaTriple count_laplacian(const RootedTree& rt, const QQ& alpha) {
  return triple_from(diagonalize_laplacian(rt, -alpha));
}

InertiaTriple count_adjacency(const Tree& t, const QQ& alpha) {
  return count_adjacency(root_at(t, t.n - 1), alpha);
}

InertiaTriple count_laplacian(const Tree& t, const QQ& alpha) {
  return count_laplacian(root_at(t, t.n - 1), alpha);
}

}  // namespace treelap
