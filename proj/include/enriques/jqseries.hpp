#pragma once

#include <map>

#include "enriques/plaurent.hpp"
#include "enriques/qseries.hpp"

namespace enriques {

// q-series with PLaurent coefficients: two-variable (p, q) generating
// functions. Truncation semantics as QSeries; p-support is exact.
class JQSeries {
 public:
  JQSeries() : exp_denom_(1), trunc_(0) {}
  JQSeries(long exp_denom, long trunc);

  static JQSeries zero(long trunc, long exp_denom = 1);
  static JQSeries one(long trunc);
  static JQSeries from_qseries(const QSeries& a);
  static JQSeries monomial(const PLaurent& c, long scaled_exp, long exp_denom, long trunc);

  long exp_denom() const { return exp_denom_; }
  long trunc() const { return trunc_; }
  const std::map<long, PLaurent>& coeffs() const { return coeffs_; }
  PLaurent coeff(long scaled_exp) const;
  void set(long scaled_exp, const PLaurent& c);
  long lowest() const { return coeffs_.empty() ? trunc_ : coeffs_.begin()->first; }
  bool is_zero() const { return coeffs_.empty(); }

  JQSeries normalized() const;
  JQSeries with_exp_denom(long d) const;
  JQSeries truncated(long new_trunc_scaled) const;

  bool operator==(const JQSeries& other) const = default;

 private:
  long exp_denom_;
  long trunc_;
  std::map<long, PLaurent> coeffs_;
};

JQSeries jq_add(const JQSeries& a, const JQSeries& b);
JQSeries jq_sub(const JQSeries& a, const JQSeries& b);
JQSeries jq_mul(const JQSeries& a, const JQSeries& b);
JQSeries jq_scalar_mul(const Rational& c, const JQSeries& a);
JQSeries jq_mul_q(const JQSeries& a, const QSeries& b);
// Inverse; the lowest q-coefficient must be a unit PLaurent (a single
// monomial), which is the case for all library uses.
JQSeries jq_invert(const JQSeries& a);
JQSeries jq_scale_q(const JQSeries& a, long n);
JQSeries jq_scale_p(const JQSeries& a, long k);
bool jq_agree(const JQSeries& a, const JQSeries& b);

// Specialize p -> 1.
QSeries jq_eval_p_one(const JQSeries& a);

}  // namespace enriques
