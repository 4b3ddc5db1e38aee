#include "treelap/oracle/polynomial.hpp"

#include <stdexcept>

namespace treelap::oracle {

namespace {

ZZ zz_gcd(const ZZ& a, const ZZ& b) {
  ZZ g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

ZZ divexact(const ZZ& a, const ZZ& b) {
  ZZ q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Pseudo-remainder: lc(g)^(deg f - deg g + 1) * f = q*g + r. Returns r.
IntPolynomial prem(const IntPolynomial& f, const IntPolynomial& g) {
  int dg = g.degree();
  int e = f.degree() - dg + 1;
  const ZZ& lcg = g.lc();
  std::vector<ZZ> r = f.coeffs;
  while (true) {
    int dr = static_cast<int>(r.size()) - 1;
    while (dr >= 0 && sgn(r[dr]) == 0) --dr;
    r.resize(dr + 1);
    if (dr < dg) break;
    ZZ lr = r[dr];
    int shift = dr - dg;
    for (int j = 0; j < dr; ++j) {
      r[j] *= lcg;
      if (j >= shift) r[j] -= lr * g.coeffs[j - shift];
    }
    r.resize(dr);  // leading term cancels
    --e;
  }
  IntPolynomial out{std::move(r)};
  if (e > 0 && !out.is_zero()) {
    ZZ scale = 1;
    for (int i = 0; i < e; ++i) scale *= lcg;
    for (ZZ& c : out.coeffs) c *= scale;
  }
  return out;
}

// Keeps every stored element a positive multiple of the true Sturm element.
std::vector<IntPolynomial> sturm_chain(const IntPolynomial& squarefree) {
  std::vector<IntPolynomial> chain;
  chain.push_back(primitive_part(squarefree));
  IntPolynomial d = primitive_part(derivative(squarefree));
  if (d.is_zero()) return chain;  // degree 0
  chain.push_back(d);
  while (true) {
    const IntPolynomial& f = chain[chain.size() - 2];
    const IntPolynomial& g = chain.back();
    if (g.degree() < 1) break;
    IntPolynomial r = prem(f, g);
    if (r.is_zero()) break;
    int e = f.degree() - g.degree() + 1;
    int mult_sign = (sgn(g.lc()) < 0 && e % 2 == 1) ? -1 : 1;
    // next element is -true_remainder; flip so the stored sign is right
    if (mult_sign == 1) {
      for (ZZ& c : r.coeffs) c = -c;
    }
    chain.push_back(primitive_part(r));
  }
  return chain;
}

int sign_at_inf(const IntPolynomial& p, bool plus) {
  if (p.is_zero()) return 0;
  int s = sgn(p.lc());
  if (!plus && p.degree() % 2 == 1) s = -s;
  return s;
}

long variations_at_inf(const std::vector<IntPolynomial>& chain, bool plus) {
  long var = 0;
  int prev = 0;
  for (const auto& p : chain) {
    int s = sign_at_inf(p, plus);
    if (s != 0) {
      if (prev != 0 && s != prev) ++var;
      prev = s;
    }
  }
  return var;
}

long variations_at(const std::vector<IntPolynomial>& chain, const QQ& x) {
  long var = 0;
  int prev = 0;
  for (const auto& p : chain) {
    int s = sign_at(p, x);
    if (s != 0) {
      if (prev != 0 && s != prev) ++var;
      prev = s;
    }
  }
  return var;
}

IntPolynomial sub(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<ZZ> c(std::max(a.coeffs.size(), b.coeffs.size()), ZZ(0));
  for (size_t i = 0; i < a.coeffs.size(); ++i) c[i] += a.coeffs[i];
  for (size_t i = 0; i < b.coeffs.size(); ++i) c[i] -= b.coeffs[i];
  return IntPolynomial{std::move(c)};
}

IntPolynomial squarefree_part(const IntPolynomial& p) {
  IntPolynomial f = primitive_part(p);
  if (f.degree() < 1) return f;
  IntPolynomial g = gcd(f, derivative(f));
  if (g.degree() < 1) return f;
  return div_exact(f, g);
}

}  // namespace

void IntPolynomial::normalize() {
  while (!coeffs.empty() && sgn(coeffs.back()) == 0) coeffs.pop_back();
}

IntPolynomial derivative(const IntPolynomial& p) {
  std::vector<ZZ> c;
  for (size_t k = 1; k < p.coeffs.size(); ++k) c.push_back(ZZ(static_cast<long>(k)) * p.coeffs[k]);
  return IntPolynomial{std::move(c)};
}

ZZ content(const IntPolynomial& p) {
  ZZ g = 0;
  for (const ZZ& c : p.coeffs) g = zz_gcd(g, c);
  return g;
}

IntPolynomial primitive_part(const IntPolynomial& p) {
  if (p.is_zero()) return p;
  ZZ c = content(p);
  IntPolynomial out = p;
  if (c != 1)
    for (ZZ& k : out.coeffs) k = divexact(k, c);
  return out;
}

IntPolynomial mul(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<ZZ> c(a.coeffs.size() + b.coeffs.size() - 1, ZZ(0));
  for (size_t i = 0; i < a.coeffs.size(); ++i)
    for (size_t j = 0; j < b.coeffs.size(); ++j) c[i + j] += a.coeffs[i] * b.coeffs[j];
  return IntPolynomial{std::move(c)};
}

IntPolynomial div_exact(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw std::invalid_argument("inexact polynomial division");
  std::vector<ZZ> r = a.coeffs;
  std::vector<ZZ> q(a.degree() - b.degree() + 1, ZZ(0));
  const ZZ& lcb = b.lc();
  for (int k = static_cast<int>(q.size()) - 1; k >= 0; --k) {
    const ZZ& top = r[k + b.degree()];
    if (sgn(top) != 0) {
      if (!mpz_divisible_p(top.get_mpz_t(), lcb.get_mpz_t()))
        throw std::invalid_argument("inexact polynomial division");
      q[k] = divexact(top, lcb);
      for (int j = 0; j <= b.degree(); ++j) r[k + j] -= q[k] * b.coeffs[j];
    }
  }
  for (const ZZ& c : r)
    if (sgn(c) != 0) throw std::invalid_argument("inexact polynomial division");
  return IntPolynomial{std::move(q)};
}

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial f = primitive_part(a);
  IntPolynomial g = primitive_part(b);
  if (f.degree() < g.degree()) std::swap(f, g);
  while (!g.is_zero()) {
    IntPolynomial r = g.degree() == 0 ? IntPolynomial{} : prem(f, g);
    f = std::move(g);
    g = primitive_part(r);
  }
  if (!f.is_zero() && sgn(f.lc()) < 0)
    for (ZZ& c : f.coeffs) c = -c;
  return f;
}

int sign_at(const IntPolynomial& p, const QQ& x) {
  if (p.is_zero()) return 0;
  const ZZ& num = x.get_num();
  const ZZ& den = x.get_den();
  int d = p.degree();
  // homogeneous Horner: sign of sum c_k num^k den^(d-k)
  ZZ acc = p.coeffs[d];
  ZZ dp = 1;
  for (int k = d - 1; k >= 0; --k) {
    dp *= den;
    acc = acc * num + p.coeffs[k] * dp;
  }
  return sgn(acc);
}

std::vector<std::pair<IntPolynomial, int>> squarefree_decomposition(const IntPolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("zero polynomial");
  std::vector<std::pair<IntPolynomial, int>> out;
  IntPolynomial f = primitive_part(p);
  if (f.degree() < 1) return out;
  if (sgn(f.lc()) < 0)
    for (ZZ& c : f.coeffs) c = -c;

  IntPolynomial g = gcd(f, derivative(f));
  if (g.degree() < 1) {
    out.emplace_back(f, 1);
    return out;
  }
  IntPolynomial b = div_exact(f, g);
  IntPolynomial d = sub(div_exact(derivative(f), g), derivative(b));
  int i = 1;
  while (b.degree() > 0) {
    IntPolynomial a = gcd(b, d);
    if (a.degree() > 0) out.emplace_back(a, i);
    b = div_exact(b, a);
    d = sub(div_exact(d, a), derivative(b));
    ++i;
  }
  return out;
}

long sturm_count(const IntPolynomial& p, const QQ& a, const QQ& b) {
  if (p.is_zero()) throw std::invalid_argument("zero polynomial");
  if (a > b) throw std::invalid_argument("interval bounds out of order");
  if (a == b) return 0;
  IntPolynomial sf = squarefree_part(p);
  if (sf.degree() < 1) return 0;
  auto chain = sturm_chain(sf);
  return variations_at(chain, a) - variations_at(chain, b);
}

RootCounter::RootCounter(const IntPolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("zero polynomial");
  for (auto& [factor, mult] : squarefree_decomposition(p)) {
    Factor f;
    f.multiplicity = mult;
    f.chain = sturm_chain(factor);
    f.var_at_minus_inf = variations_at_inf(f.chain, false);
    f.var_at_plus_inf = variations_at_inf(f.chain, true);
    if (f.var_at_minus_inf - f.var_at_plus_inf != factor.degree())
      throw std::invalid_argument("polynomial has non-real roots");
    distinct_ += factor.degree();
    factors_.push_back(std::move(f));
  }
}

RootCounts RootCounter::count(const QQ& alpha) const {
  RootCounts out;
  for (const auto& f : factors_) {
    const IntPolynomial& sf = f.chain.front();
    long deg = sf.degree();
    long leq = f.var_at_minus_inf - variations_at(f.chain, alpha);  // roots in (-inf, alpha]
    long is_root = sign_at(sf, alpha) == 0 ? 1 : 0;
    out.less += f.multiplicity * (leq - is_root);
    out.greater += f.multiplicity * (deg - leq);
    out.multiplicity += f.multiplicity * is_root;
  }
  return out;
}

}  // namespace treelap::oracle
