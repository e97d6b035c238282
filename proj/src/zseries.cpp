#include "enriques/zseries.hpp"

namespace enriques {

ZSeries ZSeries::one(long trunc) {
  ZSeries r(trunc);
  if (trunc > 0) r.set(0, rat(1));
  return r;
}

Rational ZSeries::coeff(long e) const {
  if (e >= trunc_) throw TruncationError("z-coefficient past truncation (z_trunc)");
  auto it = coeffs_.find(e);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void ZSeries::set(long e, const Rational& c) {
  if (e >= trunc_) return;
  if (is_zero(c))
    coeffs_.erase(e);
  else
    coeffs_[e] = c;
}

ZSeries zs_add(const ZSeries& a, const ZSeries& b) {
  ZSeries r(std::min(a.trunc(), b.trunc()));
  for (const auto& [e, c] : a.coeffs()) r.set(e, c);
  for (const auto& [e, c] : b.coeffs())
    if (e < r.trunc()) r.set(e, r.coeff(e) + c);
  return r;
}

ZSeries zs_sub(const ZSeries& a, const ZSeries& b) {
  return zs_add(a, zs_scalar_mul(rat(-1), b));
}

ZSeries zs_scalar_mul(const Rational& c, const ZSeries& a) {
  ZSeries r(a.trunc());
  if (is_zero(c)) return r;
  for (const auto& [e, v] : a.coeffs()) r.set(e, c * v);
  return r;
}

ZSeries zs_mul(const ZSeries& a, const ZSeries& b) {
  long t = std::min(a.trunc() + b.lowest(), b.trunc() + a.lowest());
  ZSeries r(t);
  for (const auto& [ea, ca] : a.coeffs())
    for (const auto& [eb, cb] : b.coeffs()) {
      long e = ea + eb;
      if (e >= t) break;
      r.set(e, r.coeff(e) + ca * cb);
    }
  return r;
}

ZSeries zs_invert(const ZSeries& a) {
  if (a.is_zero()) throw std::domain_error("not invertible: zero z-series");
  long e0 = a.lowest();
  Rational c0 = a.coeff(e0);
  long ut = a.trunc() - e0;
  std::map<long, Rational> u;
  for (const auto& [e, c] : a.coeffs())
    if (e != e0) u[e - e0] = c / c0;
  std::map<long, Rational> v;
  v[0] = rat(1);
  for (long n = 1; n < ut; ++n) {
    Rational s(0);
    for (const auto& [j, uj] : u) {
      if (j > n) break;
      auto it = v.find(n - j);
      if (it != v.end()) s += uj * it->second;
    }
    if (!is_zero(s)) v[n] = -s;
  }
  ZSeries r(a.trunc() - 2 * e0);
  for (const auto& [e, c] : v) r.set(e - e0, c / c0);
  return r;
}

bool zs_agree(const ZSeries& a, const ZSeries& b) {
  long t = std::min(a.trunc(), b.trunc());
  for (const auto& [e, c] : a.coeffs())
    if (e < t && c != b.coeff(e)) return false;
  for (const auto& [e, c] : b.coeffs())
    if (e < t && c != a.coeff(e)) return false;
  return true;
}

ZSeries plaurent_to_zseries(const PLaurent& c, long z_trunc) {
  ZSeries r(z_trunc);
  for (const auto& [n, v] : c.coeffs()) {
    // v * exp(n z) = v * sum_k n^k z^k / k!
    Rational term = v;
    for (long k = 0; k < z_trunc; ++k) {
      if (!is_zero(term)) r.set(k, r.coeff(k) + term);
      term = term * rat(n) / rat(k + 1);
      if (n == 0) break;
    }
  }
  return r;
}

ZSeries token_minus_zexpansion(long z_trunc) {
  // 2 sinh(z/2) = sum_{j>=0} 2 (z/2)^{2j+1} / (2j+1)!
  ZSeries s(z_trunc + 4);
  Rational term(1);  // 2 * (1/2)^{2j+1} / (2j+1)! at j=0 is 1
  long e = 1;
  while (e < s.trunc()) {
    s.set(e, term);
    // next: multiply by (1/2)^2 / ((2j+2)(2j+3))
    term /= rat(4 * (e + 1) * (e + 2));
    e += 2;
  }
  return zs_invert(zs_mul(s, s));
}

ZSeries token_plus_zexpansion(long z_trunc) {
  // 2 cosh(z/2) = sum_{j>=0} 2 (z/2)^{2j} / (2j)!
  ZSeries c(z_trunc + 2);
  Rational term(2);
  long e = 0;
  while (e < c.trunc()) {
    c.set(e, term);
    term /= rat(4 * (e + 1) * (e + 2));
    e += 2;
  }
  return zs_invert(zs_mul(c, c));
}

ZSeries pole_tokens_to_zseries(const PoleTokens& t, long z_trunc) {
  ZSeries r(z_trunc);
  if (!is_zero(t.c_minus))
    r = zs_add(r, zs_scalar_mul(t.c_minus, token_minus_zexpansion(z_trunc)));
  if (!is_zero(t.c_plus))
    r = zs_add(r, zs_scalar_mul(t.c_plus, token_plus_zexpansion(z_trunc)));
  return r;
}

std::map<long, Rational> zseries_extract_genus(const ZSeries& f) {
  std::map<long, Rational> out;
  for (const auto& [e, c] : f.coeffs()) {
    if (e % 2 != 0 || e < -2) throw std::domain_error("not a genus expansion");
    long g = e / 2 + 1;
    out[g] = (g % 2 == 0 ? -c : c);  // (-1)^{g-1}
  }
  return out;
}

}  // namespace enriques
