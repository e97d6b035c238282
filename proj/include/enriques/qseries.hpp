#pragma once

#include <map>
#include <string>

#include "enriques/rational.hpp"

namespace enriques {

// Truncated formal series in q with exact rational coefficients and
// rational exponents n / exp_denom (scaled integers). Coefficients are
// defined for every scaled exponent < trunc; absent keys below trunc are
// exact zeros. Negative exponents (Laurent tails) are allowed.
//
// Values are immutable after construction through the arithmetic API;
// set() is for builders only.
class QSeries {
 public:
  QSeries() : exp_denom_(1), trunc_(0) {}
  QSeries(long exp_denom, long trunc);

  static QSeries zero(long trunc, long exp_denom = 1);
  static QSeries one(long trunc);
  // c * q^(num/den), defined up to (not including) q^(trunc in scaled units of den').
  static QSeries monomial(const Rational& c, long num, long den, long trunc_scaled);

  long exp_denom() const { return exp_denom_; }
  long trunc() const { return trunc_; }
  const std::map<long, Rational>& coeffs() const { return coeffs_; }

  bool known(long scaled_exp) const { return scaled_exp < trunc_; }
  // Coefficient at scaled exponent; throws TruncationError past trunc.
  Rational coeff(long scaled_exp) const;
  // Coefficient at exponent num/den (0 if not on the exponent grid).
  Rational coeff_q(long num, long den = 1) const;

  void set(long scaled_exp, const Rational& c);

  // Smallest stored exponent, or trunc for the zero series.
  long lowest() const { return coeffs_.empty() ? trunc_ : coeffs_.begin()->first; }

  bool is_zero() const { return coeffs_.empty(); }

  // Divide exp_denom by gcd(exp_denom, keys); sound because all
  // coefficients below trunc are computed.
  QSeries normalized() const;
  QSeries with_exp_denom(long d) const;  // d must be a multiple of exp_denom
  QSeries truncated(long new_trunc_scaled) const;

  bool operator==(const QSeries& other) const = default;

 private:
  long exp_denom_;
  long trunc_;  // scaled units
  std::map<long, Rational> coeffs_;
};

QSeries qs_add(const QSeries& a, const QSeries& b);
QSeries qs_sub(const QSeries& a, const QSeries& b);
QSeries qs_neg(const QSeries& a);
QSeries qs_mul(const QSeries& a, const QSeries& b);
QSeries qs_scalar_mul(const Rational& c, const QSeries& a);

// Multiplicative inverse; the lowest-order coefficient must be nonzero
// ("not invertible" otherwise). Laurent leading exponents shift.
QSeries qs_invert(const QSeries& a);

// exp requires constant term 0 and no negative exponents; log requires
// constant term 1 and no negative exponents.
QSeries qs_exp(const QSeries& a);
QSeries qs_log(const QSeries& a);

// q -> q^N reindexing.
QSeries qs_scale_q(const QSeries& a, long n);

QSeries qs_pow(const QSeries& a, long e);  // e may be negative

// Equality of all coefficients on the common window (min trunc after
// exponent-grid merge). This is the comparison used by identity checks.
bool qs_agree(const QSeries& a, const QSeries& b);

std::string qs_to_string(const QSeries& a, int max_terms = 12);

}  // namespace enriques
