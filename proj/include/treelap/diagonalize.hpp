#pragma once

#include <vector>

#include "treelap/rational.hpp"
#include "treelap/rooted.hpp"

namespace treelap {

enum class MatrixKind { adjacency, laplacian };

struct InertiaTriple {
  long greater = 0;
  long less = 0;
  long multiplicity = 0;

  bool operator==(const InertiaTriple&) const = default;
};

struct DiagResult {
  std::vector<QQ> values;  // indexed by position in rt.order
  long n_pos = 0;
  long n_neg = 0;
  long n_zero = 0;
  MatrixKind matrix_kind = MatrixKind::adjacency;
  QQ shift;

  // d(v) for a vertex id of the underlying tree.
  const QQ& value_of(const RootedTree& rt, int v) const {
    return values[rt.pos_in_order[v]];
  }
};

// Congruence diagonalization of A + xI. Processes vertices child-first:
// leaves keep their value; a vertex with all-nonzero children subtracts
// sum(1/d(child)); a zero child forces d(v) := -1/2, d(child) := 2 and cuts
// the edge to v's parent. Runs on a working copy; rt is untouched.
DiagResult diagonalize_adjacency(const RootedTree& rt, const QQ& x);

// Same loop for L + xI; initialization is d(v) := deg(v) + x.
DiagResult diagonalize_laplacian(const RootedTree& rt, const QQ& x);

// Sylvester counts: eigenvalues of A (resp. L) greater than / less than /
// equal to alpha, via a diagonalization with shift -alpha.
InertiaTriple count_adjacency(const Tree& t, const QQ& alpha);
InertiaTriple count_laplacian(const Tree& t, const QQ& alpha);

InertiaTriple count_adjacency(const RootedTree& rt, const QQ& alpha);
InertiaTriple count_laplacian(const RootedTree& rt, const QQ& alpha);

}  // namespace treelap
