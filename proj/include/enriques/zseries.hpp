#pragma once

#include <map>

#include "enriques/plaurent.hpp"
#include "enriques/rational.hpp"

namespace enriques {

// Truncated Laurent series in z with bounded pole order. All library uses
// have floor >= -2 (the genus-0 slot sits at z^{-2}).
class ZSeries {
 public:
  ZSeries() : trunc_(0) {}
  explicit ZSeries(long trunc) : trunc_(trunc) {}

  static ZSeries zero(long trunc) { return ZSeries(trunc); }
  static ZSeries one(long trunc);

  long trunc() const { return trunc_; }
  const std::map<long, Rational>& coeffs() const { return coeffs_; }
  Rational coeff(long e) const;
  void set(long e, const Rational& c);
  long lowest() const { return coeffs_.empty() ? trunc_ : coeffs_.begin()->first; }
  bool is_zero() const { return coeffs_.empty(); }

  bool operator==(const ZSeries& other) const = default;

 private:
  long trunc_;
  std::map<long, Rational> coeffs_;
};

ZSeries zs_add(const ZSeries& a, const ZSeries& b);
ZSeries zs_sub(const ZSeries& a, const ZSeries& b);
ZSeries zs_mul(const ZSeries& a, const ZSeries& b);
ZSeries zs_scalar_mul(const Rational& c, const ZSeries& a);
ZSeries zs_invert(const ZSeries& a);
bool zs_agree(const ZSeries& a, const ZSeries& b);

// p^n -> sum_k n^k z^k / k!, truncated below z_trunc. Linear and
// multiplicative; symmetric input yields an even series.
ZSeries plaurent_to_zseries(const PLaurent& c, long z_trunc);

// z-expansions of the two pole tokens:
//   p/(1-p)^2 |_{p=e^z} = 1/(4 sinh^2(z/2)) = z^{-2} - 1/12 + ...
//   p/(1+p)^2 |_{p=e^z} = 1/(4 cosh^2(z/2)) = 1/4 - ...
ZSeries token_minus_zexpansion(long z_trunc);
ZSeries token_plus_zexpansion(long z_trunc);
ZSeries pole_tokens_to_zseries(const PoleTokens& t, long z_trunc);

// Reads off g -> (-1)^{g-1} [f]_{z^{2g-2}}. Input must be supported on
// even exponents >= -2 ("not a genus expansion" otherwise).
std::map<long, Rational> zseries_extract_genus(const ZSeries& f);

}  // namespace enriques
