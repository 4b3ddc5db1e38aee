#pragma once

#include <utility>
#include <vector>

#include "treelap/rational.hpp"

namespace treelap::oracle {

// Integer polynomial, ascending coefficients, no trailing zeros.
// The zero polynomial has an empty coefficient vector and degree -1.
struct IntPolynomial {
  std::vector<ZZ> coeffs;

  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<ZZ> c) : coeffs(std::move(c)) { normalize(); }

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool is_zero() const { return coeffs.empty(); }
  const ZZ& lc() const { return coeffs.back(); }
  void normalize();

  bool operator==(const IntPolynomial&) const = default;
};

IntPolynomial derivative(const IntPolynomial& p);
ZZ content(const IntPolynomial& p);
IntPolynomial primitive_part(const IntPolynomial& p);
IntPolynomial mul(const IntPolynomial& a, const IntPolynomial& b);

// Exact division; throws std::invalid_argument if b does not divide a.
IntPolynomial div_exact(const IntPolynomial& a, const IntPolynomial& b);

// Primitive gcd via a pseudo-remainder sequence; result has positive lc.
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

// Sign of p(x) for rational x, computed without leaving the integers.
int sign_at(const IntPolynomial& p, const QQ& x);

// Squarefree decomposition (Yun): returns (factor, multiplicity) pairs with
// squarefree, pairwise coprime factors whose weighted product is p up to a
// constant.
std::vector<std::pair<IntPolynomial, int>> squarefree_decomposition(const IntPolynomial& p);

// Number of distinct real roots of p in (a, b]. Internally replaces p by its
// squarefree part, so multiple roots count once.
long sturm_count(const IntPolynomial& p, const QQ& a, const QQ& b);

struct RootCounts {
  long greater = 0;
  long less = 0;
  long multiplicity = 0;

  bool operator==(const RootCounts&) const = default;
};

// Exact real-root location counts, with multiplicity, for a polynomial whose
// roots are all real (characteristic polynomials of symmetric matrices).
// Builds the squarefree factors and their Sturm chains once, then answers
// point queries.
class RootCounter {
 public:
  explicit RootCounter(const IntPolynomial& p);

  RootCounts count(const QQ& alpha) const;
  long distinct_roots() const { return distinct_; }

 private:
  struct Factor {
    int multiplicity;
    std::vector<IntPolynomial> chain;  // Sturm chain of the squarefree factor
    long var_at_minus_inf;
    long var_at_plus_inf;
  };
  std::vector<Factor> factors_;
  long distinct_ = 0;
};

}  // namespace treelap::oracle
