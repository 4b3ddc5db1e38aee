#include "treelap/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace treelap {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

QQ parse_rational(std::string_view text) {
  std::string s(text);
  // trim surrounding whitespace
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  if (s.empty()) throw std::invalid_argument("empty rational literal");

  bool neg = false;
  std::string body = s;
  if (body[0] == '+' || body[0] == '-') {
    neg = body[0] == '-';
    body.erase(body.begin());
  }
  if (body.empty()) throw std::invalid_argument("bad rational literal: " + s);

  QQ value;
  if (auto caret = body.find('^'); caret != std::string::npos) {
    // power-of-two literal, e.g. 2^-40
    std::string base = body.substr(0, caret);
    std::string exp = body.substr(caret + 1);
    bool eneg = false;
    if (!exp.empty() && (exp[0] == '+' || exp[0] == '-')) {
      eneg = exp[0] == '-';
      exp.erase(exp.begin());
    }
    if (base != "2" || !all_digits(exp) || exp.size() > 9)
      throw std::invalid_argument("bad rational literal: " + s);
    value = pow2((eneg ? -1 : 1) * std::stoi(exp));
  } else if (auto slash = body.find('/'); slash != std::string::npos) {
    std::string num = body.substr(0, slash);
    std::string den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw std::invalid_argument("bad rational literal: " + s);
    QQ q(num + "/" + den);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    q.canonicalize();
    value = q;
  } else if (auto dot = body.find('.'); dot != std::string::npos) {
    std::string intpart = body.substr(0, dot);
    std::string frac = body.substr(dot + 1);
    if (intpart.empty()) intpart = "0";
    if (!all_digits(intpart) || !all_digits(frac))
      throw std::invalid_argument("bad rational literal: " + s);
    ZZ scale = 1;
    for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
    ZZ numer = ZZ(intpart) * scale + (frac.empty() ? ZZ(0) : ZZ(frac));
    value = QQ(numer, scale);
    value.canonicalize();
  } else {
    if (!all_digits(body)) throw std::invalid_argument("bad rational literal: " + s);
    value = QQ(ZZ(body));
  }
  if (neg) value = -value;
  return value;
}

std::string rational_to_string(const QQ& x) { return x.get_str(); }

std::string rational_to_decimal(const QQ& x, int digits) {
  ZZ scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  ZZ num = abs(x.get_num()) * scale;
  const ZZ& den = x.get_den();
  ZZ q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (2 * r >= den) q += 1;  // round half away from zero (operating on |x|)
  ZZ ipart, fpart;
  mpz_fdiv_qr(ipart.get_mpz_t(), fpart.get_mpz_t(), q.get_mpz_t(), scale.get_mpz_t());
  std::string frac = fpart.get_str();
  if (frac.size() < static_cast<std::size_t>(digits))
    frac.insert(frac.begin(), digits - frac.size(), '0');
  std::string out;
  if (sgn(x) < 0 && (ipart != 0 || fpart != 0)) out += "-";
  out += ipart.get_str();
  if (digits > 0) out += "." + frac;
  return out;
}

QQ pow2(int e) {
  ZZ p = 1;
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(e < 0 ? -e : e));
  return e >= 0 ? QQ(p) : QQ(1, p);
}

}  // namespace treelap
