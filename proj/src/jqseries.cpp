#include "enriques/jqseries.hpp"

#include <numeric>

namespace enriques {

JQSeries::JQSeries(long exp_denom, long trunc) : exp_denom_(exp_denom), trunc_(trunc) {
  if (exp_denom <= 0) throw std::domain_error("exp_denom must be positive");
}

JQSeries JQSeries::zero(long trunc, long exp_denom) { return JQSeries(exp_denom, trunc); }

JQSeries JQSeries::one(long trunc) {
  JQSeries r(1, trunc);
  if (trunc > 0) r.set(0, PLaurent::constant(rat(1)));
  return r;
}

JQSeries JQSeries::from_qseries(const QSeries& a) {
  JQSeries r(a.exp_denom(), a.trunc());
  for (const auto& [e, c] : a.coeffs()) r.set(e, PLaurent::constant(c));
  return r;
}

JQSeries JQSeries::monomial(const PLaurent& c, long scaled_exp, long exp_denom, long trunc) {
  JQSeries r(exp_denom, trunc);
  if (scaled_exp < trunc) r.set(scaled_exp, c);
  return r;
}

PLaurent JQSeries::coeff(long scaled_exp) const {
  if (scaled_exp >= trunc_)
    throw TruncationError("coefficient request past series truncation (trunc)");
  auto it = coeffs_.find(scaled_exp);
  return it == coeffs_.end() ? PLaurent() : it->second;
}

void JQSeries::set(long scaled_exp, const PLaurent& c) {
  if (scaled_exp >= trunc_) return;
  if (c.is_zero())
    coeffs_.erase(scaled_exp);
  else
    coeffs_[scaled_exp] = c;
}

JQSeries JQSeries::normalized() const {
  long g = exp_denom_;
  for (const auto& [e, c] : coeffs_) g = std::gcd(g, e < 0 ? -e : e);
  if (g <= 1) return *this;
  JQSeries r(exp_denom_ / g, (trunc_ + g - 1) / g);
  for (const auto& [e, c] : coeffs_) r.set(e / g, c);
  return r;
}

JQSeries JQSeries::with_exp_denom(long d) const {
  if (d % exp_denom_ != 0) throw std::domain_error("with_exp_denom: not a multiple");
  long f = d / exp_denom_;
  if (f == 1) return *this;
  JQSeries r(d, trunc_ * f);
  for (const auto& [e, c] : coeffs_) r.set(e * f, c);
  return r;
}

JQSeries JQSeries::truncated(long new_trunc_scaled) const {
  JQSeries r(exp_denom_, std::min(trunc_, new_trunc_scaled));
  for (const auto& [e, c] : coeffs_) r.set(e, c);
  return r;
}

namespace {
void merge_grids(JQSeries& a, JQSeries& b) {
  long l = std::lcm(a.exp_denom(), b.exp_denom());
  a = a.with_exp_denom(l);
  b = b.with_exp_denom(l);
}
}  // namespace

JQSeries jq_add(const JQSeries& a0, const JQSeries& b0) {
  JQSeries a = a0, b = b0;
  merge_grids(a, b);
  JQSeries r(a.exp_denom(), std::min(a.trunc(), b.trunc()));
  for (const auto& [e, c] : a.coeffs()) r.set(e, c);
  for (const auto& [e, c] : b.coeffs()) {
    if (e >= r.trunc()) continue;
    r.set(e, pl_add(r.coeff(e), c));
  }
  return r.normalized();
}

JQSeries jq_sub(const JQSeries& a, const JQSeries& b) {
  return jq_add(a, jq_scalar_mul(rat(-1), b));
}

JQSeries jq_scalar_mul(const Rational& c, const JQSeries& a) {
  JQSeries r(a.exp_denom(), a.trunc());
  if (is_zero(c)) return r;
  for (const auto& [e, v] : a.coeffs()) r.set(e, pl_scalar_mul(c, v));
  return r;
}

JQSeries jq_mul(const JQSeries& a0, const JQSeries& b0) {
  JQSeries a = a0, b = b0;
  merge_grids(a, b);
  long t = std::min(a.trunc() + b.lowest(), b.trunc() + a.lowest());
  JQSeries r(a.exp_denom(), t);
  std::map<long, PLaurent> acc;
  for (const auto& [ea, ca] : a.coeffs()) {
    for (const auto& [eb, cb] : b.coeffs()) {
      long e = ea + eb;
      if (e >= t) break;
      auto& slot = acc[e];
      for (const auto& [pa, va] : ca.coeffs())
        for (const auto& [pb, vb] : cb.coeffs()) slot.add_to(pa + pb, va * vb);
    }
  }
  for (auto& [e, c] : acc) r.set(e, c);
  return r.normalized();
}

JQSeries jq_mul_q(const JQSeries& a, const QSeries& b) {
  return jq_mul(a, JQSeries::from_qseries(b));
}

JQSeries jq_invert(const JQSeries& a) {
  if (a.is_zero()) throw std::domain_error("not invertible: zero series");
  long e0 = a.lowest();
  PLaurent c0 = a.coeff(e0);
  if (c0.coeffs().size() != 1)
    throw std::domain_error("not invertible: leading PLaurent is not a monomial");
  long p0 = c0.coeffs().begin()->first;
  Rational v0 = c0.coeffs().begin()->second;
  PLaurent c0inv = PLaurent::monomial(Rational(1) / v0, -p0);
  long ut = a.trunc() - e0;
  std::map<long, PLaurent> u;
  for (const auto& [e, c] : a.coeffs())
    if (e != e0) u[e - e0] = pl_mul(c, c0inv);
  std::map<long, PLaurent> v;
  v[0] = PLaurent::constant(rat(1));
  for (long n = 1; n < ut; ++n) {
    PLaurent s;
    for (const auto& [j, uj] : u) {
      if (j > n) break;
      auto it = v.find(n - j);
      if (it != v.end()) s = pl_add(s, pl_mul(uj, it->second));
    }
    if (!s.is_zero()) v[n] = pl_neg(s);
  }
  JQSeries r(a.exp_denom(), a.trunc() - 2 * e0);
  for (const auto& [e, c] : v) r.set(e - e0, pl_mul(c, c0inv));
  return r.normalized();
}

JQSeries jq_scale_q(const JQSeries& a, long n) {
  if (n <= 0) throw std::domain_error("jq_scale_q: scale must be positive");
  JQSeries r(a.exp_denom(), a.trunc() * n);
  for (const auto& [e, c] : a.coeffs()) r.set(e * n, c);
  return r.normalized();
}

JQSeries jq_scale_p(const JQSeries& a, long k) {
  JQSeries r(a.exp_denom(), a.trunc());
  for (const auto& [e, c] : a.coeffs()) r.set(e, c.scale_p(k));
  return r;
}

bool jq_agree(const JQSeries& a0, const JQSeries& b0) {
  JQSeries a = a0, b = b0;
  merge_grids(a, b);
  long t = std::min(a.trunc(), b.trunc());
  for (const auto& [e, c] : a.coeffs())
    if (e < t && !(c == b.coeff(e))) return false;
  for (const auto& [e, c] : b.coeffs())
    if (e < t && !(c == a.coeff(e))) return false;
  return true;
}

QSeries jq_eval_p_one(const JQSeries& a) {
  QSeries r(a.exp_denom(), a.trunc());
  for (const auto& [e, c] : a.coeffs()) r.set(e, pl_eval_one(c));
  return r.normalized();
}

}  // namespace enriques
