#pragma once

#include <string>
#include <vector>

#include "treelap/oracle/dense.hpp"
#include "treelap/oracle/polynomial.hpp"

namespace treelap::oracle {

inline constexpr int kExactMaxOrder = 64;
inline constexpr int kFloatMaxOrder = 512;

// Exact char poly det(lambda*I - m) by Faddeev-LeVerrier; monic, degree n.
IntPolynomial char_poly(const MatZZ& m);

// Cyclic Jacobi; eigenvalues sorted descending, accurate to ~tol * ||m||.
// Throws std::runtime_error if sweeps fail to converge.
std::vector<double> dense_eigs(const MatD& m, double tol);

// Exact determinant by fraction-free Bareiss elimination.
ZZ bareiss_determinant(MatZZ m);

// Kirchhoff count: any cofactor of the Laplacian. 0 for disconnected input.
ZZ spanning_tree_count(const SimpleGraph& g);

struct CheckReport {
  bool ok = true;
  std::vector<std::string> failures;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      failures.push_back(what);
    }
  }
};

// Verifies the classical adjacency char-poly coefficient identities
// (a1 = 0, a2 = -m, a3 = -2t) and the matching power sums.
CheckReport coefficient_identities(const SimpleGraph& g);

}  // namespace treelap::oracle
