#include "treelap/oracle/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace treelap::oracle {

namespace {

ZZ divexact(const ZZ& a, const ZZ& b) {
  ZZ q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

ZZ trace(const MatZZ& m) {
  ZZ t = 0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

long triangle_count(const SimpleGraph& g) {
  MatZZ a = adjacency_matrix(g);
  long t = 0;
  for (int i = 0; i < g.n; ++i)
    for (int j = i + 1; j < g.n; ++j)
      for (int k = j + 1; k < g.n; ++k)
        if (a(i, j) == 1 && a(j, k) == 1 && a(i, k) == 1) ++t;
  return t;
}

}  // namespace

IntPolynomial char_poly(const MatZZ& m) {
  int n = static_cast<int>(m.rows());
  if (m.cols() != n) throw std::invalid_argument("matrix not square");
  if (n > kExactMaxOrder) throw std::invalid_argument("matrix too large for the exact path");
  std::vector<ZZ> coeffs(n + 1);
  coeffs[n] = 1;
  if (n == 0) return IntPolynomial{std::move(coeffs)};

  // Faddeev-LeVerrier: M_k = m (M_{k-1} + c_{n-k+1} I), c_{n-k} = -tr(M_k)/k
  MatZZ mk = m;
  ZZ ck = -trace(mk);
  coeffs[n - 1] = ck;
  for (int k = 2; k <= n; ++k) {
    MatZZ shifted = mk;
    for (int i = 0; i < n; ++i) shifted(i, i) += ck;
    mk = m * shifted;
    ck = divexact(-trace(mk), k);
    coeffs[n - k] = ck;
  }
  return IntPolynomial{std::move(coeffs)};
}

ZZ bareiss_determinant(MatZZ m) {
  int n = static_cast<int>(m.rows());
  if (m.cols() != n) throw std::invalid_argument("matrix not square");
  if (n == 0) return 1;
  ZZ prev = 1;
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (sgn(m(k, k)) == 0) {
      int pivot = -1;
      for (int i = k + 1; i < n; ++i)
        if (sgn(m(i, k)) != 0) {
          pivot = i;
          break;
        }
      if (pivot == -1) return 0;
      m.row(k).swap(m.row(pivot));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m(i, j) = divexact(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
    prev = m(k, k);
  }
  ZZ det = m(n - 1, n - 1);
  return sign < 0 ? ZZ(-det) : det;
}

ZZ spanning_tree_count(const SimpleGraph& g) {
  if (g.n < 1) throw std::invalid_argument("empty graph");
  if (g.n > kExactMaxOrder) throw std::invalid_argument("graph too large for the exact path");
  if (g.n == 1) return 1;
  MatZZ lap = laplacian_matrix(g);
  MatZZ minor = lap.block(1, 1, g.n - 1, g.n - 1);
  return bareiss_determinant(std::move(minor));
}

std::vector<double> dense_eigs(const MatD& m, double tol) {
  int n = static_cast<int>(m.rows());
  if (m.cols() != n) throw std::invalid_argument("matrix not square");
  if (n > kFloatMaxOrder) throw std::invalid_argument("matrix too large for the float path");
  if (n == 0) return {};
  MatD a = (m + m.transpose()) / 2.0;
  double scale = a.norm();
  if (scale == 0.0) return std::vector<double>(n, 0.0);

  auto off_norm = [&]() {
    double s = 0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) s += 2 * a(p, q) * a(p, q);
    return std::sqrt(s);
  };

  const int max_sweeps = 100;
  int sweep = 0;
  while (off_norm() > tol * scale) {
    if (++sweep > max_sweeps) throw std::runtime_error("Jacobi iteration did not converge");
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        double apq = a(p, q);
        if (apq == 0.0) continue;
        double theta = (a(q, q) - a(p, p)) / (2 * apq);
        double t;
        if (std::abs(theta) > 1e153) {
          t = 1 / (2 * theta);
        } else {
          t = 1 / (std::abs(theta) + std::sqrt(theta * theta + 1));
          if (theta < 0) t = -t;
        }
        double c = 1 / std::sqrt(t * t + 1);
        double s = t * c;
        for (int i = 0; i < n; ++i) {
          double aip = a(i, p), aiq = a(i, q);
          a(i, p) = c * aip - s * aiq;
          a(i, q) = s * aip + c * aiq;
        }
        for (int i = 0; i < n; ++i) {
          double api = a(p, i), aqi = a(q, i);
          a(p, i) = c * api - s * aqi;
          a(q, i) = s * api + c * aqi;
        }
      }
    }
  }
  std::vector<double> eigs(n);
  for (int i = 0; i < n; ++i) eigs[i] = a(i, i);
  std::sort(eigs.begin(), eigs.end(), std::greater<>());
  return eigs;
}

CheckReport coefficient_identities(const SimpleGraph& g) {
  CheckReport report;
  int n = g.n;
  if (n > kExactMaxOrder) throw std::invalid_argument("graph too large for the exact path");
  long m = static_cast<long>(g.edges.size());
  long t = triangle_count(g);
  IntPolynomial p = char_poly(adjacency_matrix(g));
  auto a_k = [&](int k) -> ZZ { return k <= n ? p.coeffs[n - k] : ZZ(0); };

  if (n >= 1) report.require(a_k(1) == 0, "a1 = 0");
  if (n >= 2) report.require(a_k(2) == -m, "a2 = -m");
  if (n >= 3) report.require(a_k(3) == -2 * t, "a3 = -2t");

  // Newton power sums from the coefficients
  ZZ a1 = a_k(1), a2 = a_k(2), a3 = a_k(3);
  ZZ p1 = -a1;
  ZZ p2 = a1 * a1 - 2 * a2;
  ZZ p3 = -a1 * a1 * a1 + 3 * a1 * a2 - 3 * a3;
  report.require(p1 == 0, "sum of eigenvalues = 0");
  report.require(p2 == 2 * m, "sum of squared eigenvalues = 2m");
  if (n >= 3) report.require(p3 == 6 * t, "sum of cubed eigenvalues = 6t");

  // float path agrees on the same sums
  std::vector<double> eigs = dense_eigs(to_double(adjacency_matrix(g)), 1e-12);
  double s1 = 0, s2 = 0, s3 = 0;
  for (double e : eigs) {
    s1 += e;
    s2 += e * e;
    s3 += e * e * e;
  }
  double tol = 1e-6 * (1 + 2.0 * m);
  report.require(std::abs(s1) <= tol, "float sum of eigenvalues = 0");
  report.require(std::abs(s2 - 2.0 * m) <= tol, "float sum of squares = 2m");
  report.require(std::abs(s3 - 6.0 * t) <= tol, "float sum of cubes = 6t");
  return report;
}

}  // namespace treelap::oracle
