#pragma once

#include <vector>

#include "treelap/diagonalize.hpp"
#include "treelap/rational.hpp"
#include "treelap/tree.hpp"

namespace treelap {

struct IntervalCount {
  QQ a, b;
  long count = 0;
  MatrixKind matrix_kind = MatrixKind::laplacian;
};

struct LocalizedEigenvalue {
  QQ lo, hi;
  long multiplicity = 1;
  bool exact = false;  // lo == hi, eigenvalue hit by a probe
};

struct EnergyReport {
  QQ le_direct;
  QQ le_sigma;
  long sigma = 0;
  QQ tolerance;
};

inline QQ average_degree(int n) {
  QQ d(2 * (n - 1), n);
  d.canonicalize();  // the two-argument ctor does not reduce
  return d;
}

// Eigenvalues in the half-open interval [a, b).
IntervalCount m_interval(const Tree& t, const QQ& a, const QQ& b, MatrixKind kind);

// Laplacian eigenvalues below the average degree 2 - 2/n. Requires n >= 2.
long m_below_average(const Tree& t);

struct ConjectureResult {
  bool holds = false;
  long m = 0;
  long threshold = 0;
};

// holds iff m_below_average >= ceil(n/2). Requires n >= 2.
ConjectureResult check_conjecture(const Tree& t);

// Brackets all n Laplacian eigenvalues. Integer points are probed first,
// so every rational eigenvalue (necessarily an integer) is reported exactly;
// the rest are bisected down to width <= tol with dyadic endpoints.
std::vector<LocalizedEigenvalue> localize_laplacian(const Tree& t, const QQ& tol);

inline QQ default_energy_tol() { return pow2(-40); }

EnergyReport laplacian_energy(const Tree& t, const QQ& tol);

}  // namespace treelap
