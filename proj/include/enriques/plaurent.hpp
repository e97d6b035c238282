#pragma once

#include <map>
#include <string>

#include "enriques/rational.hpp"

namespace enriques {

// Finite-support Laurent polynomial in the elliptic variable p.
class PLaurent {
 public:
  PLaurent() = default;
  static PLaurent constant(const Rational& c);
  static PLaurent monomial(const Rational& c, long e);
  // c * (p^e + p^{-e}) for e > 0, or c for e = 0.
  static PLaurent symmetric_pair(const Rational& c, long e);

  const std::map<long, Rational>& coeffs() const { return coeffs_; }
  Rational coeff(long e) const;
  void set(long e, const Rational& c);
  void add_to(long e, const Rational& c);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_symmetric() const;  // c(r) == c(-r) for all r
  long min_exp() const { return coeffs_.empty() ? 0 : coeffs_.begin()->first; }
  long max_exp() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }

  // p -> p^k reindexing (k may be negative, giving the p -> 1/p flip).
  PLaurent scale_p(long k) const;

  bool operator==(const PLaurent& other) const = default;

 private:
  std::map<long, Rational> coeffs_;
};

PLaurent pl_add(const PLaurent& a, const PLaurent& b);
PLaurent pl_sub(const PLaurent& a, const PLaurent& b);
PLaurent pl_neg(const PLaurent& a);
PLaurent pl_mul(const PLaurent& a, const PLaurent& b);
PLaurent pl_scalar_mul(const Rational& c, const PLaurent& a);

// Exact division; throws std::domain_error if the remainder is nonzero.
PLaurent pl_div_exact(const PLaurent& num, const PLaurent& den);

// Specialize p -> 1 (sum of coefficients).
Rational pl_eval_one(const PLaurent& a);

std::string pl_to_string(const PLaurent& a);

// Tagged rational-function summands that are never expanded in p:
//   c_minus * p/(1-p)^2  +  c_plus * p/(1+p)^2.
// The first is the designated polar part of 1/Theta^2 at q^0; both arise
// when a dt-source has a nonzero rank-0 sector.
struct PoleTokens {
  Rational c_minus{0};
  Rational c_plus{0};
  bool is_zero() const { return enriques::is_zero(c_minus) && enriques::is_zero(c_plus); }
  bool operator==(const PoleTokens&) const = default;
};

}  // namespace enriques
