#include "treelap/spectral.hpp"

#include <stdexcept>

#include "treelap/rooted.hpp"

namespace treelap {

namespace {

InertiaTriple probe(const RootedTree& rt, const QQ& alpha, MatrixKind kind) {
  return kind == MatrixKind::adjacency ? count_adjacency(rt, alpha)
                                       : count_laplacian(rt, alpha);
}

// Open interval (lo, hi) known to hold `count` eigenvalues; `less_lo` is the
// number of eigenvalues below lo. Neither endpoint is an eigenvalue.
void bisect(const RootedTree& rt, const QQ& lo, const QQ& hi, long count, long less_lo,
            const QQ& tol, std::vector<LocalizedEigenvalue>& out) {
  if (hi - lo <= tol) {
    out.push_back({lo, hi, count, false});
    return;
  }
  QQ mid = (lo + hi) / 2;  // endpoints stay dyadic
  InertiaTriple at_mid = count_laplacian(rt, mid);
  long in_left = at_mid.less - less_lo;
  long in_right = count - in_left - at_mid.multiplicity;
  if (in_left > 0) bisect(rt, lo, mid, in_left, less_lo, tol, out);
  if (at_mid.multiplicity > 0) out.push_back({mid, mid, at_mid.multiplicity, true});
  if (in_right > 0)
    bisect(rt, mid, hi, in_right, at_mid.less + at_mid.multiplicity, tol, out);
}

}  // namespace

IntervalCount m_interval(const Tree& t, const QQ& a, const QQ& b, MatrixKind kind) {
  if (a > b) throw std::invalid_argument("interval bounds out of order");
  IntervalCount ic;
  ic.a = a;
  ic.b = b;
  ic.matrix_kind = kind;
  if (a == b) return ic;
  RootedTree rt = root_at(t, t.n - 1);
  ic.count = probe(rt, b, kind).less - probe(rt, a, kind).less;
  return ic;
}

long m_below_average(const Tree& t) {
  if (t.n < 2) throw std::invalid_argument("order must be at least 2");
  return m_interval(t, 0, average_degree(t.n), MatrixKind::laplacian).count;
}

ConjectureResult check_conjecture(const Tree& t) {
  ConjectureResult r;
  r.m = m_below_average(t);
  r.threshold = (t.n + 1) / 2;
  r.holds = r.m >= r.threshold;
  return r;
}

std::vector<LocalizedEigenvalue> localize_laplacian(const Tree& t, const QQ& tol) {
  if (sgn(tol) <= 0) throw std::invalid_argument("tolerance must be positive");
  int n = t.n;
  RootedTree rt = root_at(t, n - 1);
  std::vector<LocalizedEigenvalue> out;
  // integer probes first: every rational Laplacian eigenvalue is an integer
  // (the characteristic polynomial is monic with integer coefficients), so
  // these are exactly the candidates for exact hits
  std::vector<InertiaTriple> at(n + 2);
  for (int k = 0; k <= n + 1; ++k) at[k] = count_laplacian(rt, k);
  for (int k = 0; k <= n; ++k) {
    if (at[k].multiplicity > 0) out.push_back({k, k, at[k].multiplicity, true});
    long gap = at[k + 1].less - at[k].less - at[k].multiplicity;
    if (gap > 0)
      bisect(rt, k, k + 1, gap, at[k].less + at[k].multiplicity, tol, out);
  }
  return out;
}

EnergyReport laplacian_energy(const Tree& t, const QQ& tol) {
  EnergyReport rep;
  rep.tolerance = tol;
  auto brackets = localize_laplacian(t, tol);
  QQ dbar = average_degree(t.n);

  for (const auto& b : brackets) {
    QQ mid = (b.lo + b.hi) / 2;
    rep.le_direct += b.multiplicity * abs(mid - dbar);
  }

  InertiaTriple at_avg = count_laplacian(t, dbar);
  rep.sigma = at_avg.greater + at_avg.multiplicity;

  // top-sigma eigenvalues; brackets are sorted ascending
  long remaining = rep.sigma;
  QQ top_sum;
  for (auto it = brackets.rbegin(); it != brackets.rend() && remaining > 0; ++it) {
    long take = std::min(remaining, it->multiplicity);
    top_sum += take * ((it->lo + it->hi) / 2);
    remaining -= take;
  }
  rep.le_sigma = 2 * top_sum - 2 * rep.sigma * dbar;
  return rep;
}

}  // namespace treelap
