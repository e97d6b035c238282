#include "enriques/theta.hpp"

#include "enriques/modular.hpp"

namespace enriques {

namespace {

// 1 - p^{ep} q^{eq}
JQSeries one_minus(long ep, long eq, long trunc) {
  JQSeries f = JQSeries::one(trunc);
  if (eq < trunc) f.set(eq, PLaurent::monomial(rat(-1), ep));
  return f;
}

JQSeries theta_core_product(long trunc) {
  JQSeries core = JQSeries::one(trunc);
  for (long m = 1; m < trunc; ++m) {
    core = jq_mul(core, one_minus(1, m, trunc));
    core = jq_mul(core, one_minus(-1, m, trunc));
  }
  QSeries e2 = qs_pow(euler_product(trunc), -2);
  return jq_mul_q(core, e2);
}

JQSeries theta_core_sum(long trunc) {
  // Theta * eta^3 = (p^{1/2} - p^{-1/2}) q^{1/8}
  //                 * sum_{j>=0} (-1)^j (sum_{|i|<=j} p^i) q^{j(j+1)/2},
  // so core = [that sum] / (prod (1-q^n))^3.
  JQSeries s(1, trunc);
  for (long j = 0;; ++j) {
    long e = j * (j + 1) / 2;
    if (e >= trunc) break;
    PLaurent row;
    for (long i = -j; i <= j; ++i) row.set(i, rat(j % 2 == 0 ? 1 : -1));
    s.set(e, row);
  }
  QSeries e3 = qs_pow(euler_product(trunc), -3);
  return jq_mul_q(s, e3);
}

}  // namespace

Theta theta(long qtrunc) {
  JQSeries prod = theta_core_product(qtrunc);
  JQSeries sum = theta_core_sum(qtrunc);
  if (!jq_agree(prod, sum))
    throw std::logic_error("theta: triple product and half-integer sum disagree");
  return Theta{prod};
}

JQSeries theta_sq(long qtrunc) {
  JQSeries core = theta(qtrunc).core;
  JQSeries sq = jq_mul(core, core);
  PLaurent pref;  // p - 2 + p^{-1}
  pref.set(1, rat(1));
  pref.set(0, rat(-2));
  pref.set(-1, rat(1));
  return jq_mul(JQSeries::monomial(pref, 0, 1, qtrunc), sq);
}

InvThetaSq inv_theta_sq(long qtrunc) {
  JQSeries core = theta(qtrunc).core;
  JQSeries v = jq_invert(jq_mul(core, core));  // 1 + sum_{n>=1} c_n q^n
  // 1/Theta^2 = [p/(1-p)^2] * v; for n >= 1 the combination
  // p * c_n / (1-p)^2 is a Laurent polynomial.
  PLaurent den;  // (1-p)^2
  den.set(0, rat(1));
  den.set(1, rat(-2));
  den.set(2, rat(1));
  JQSeries regular(v.exp_denom(), v.trunc());
  for (const auto& [e, c] : v.coeffs()) {
    if (e == 0) continue;
    regular.set(e, pl_div_exact(pl_mul(PLaurent::monomial(rat(1), 1), c), den));
  }
  // closed double sum, integer q-exponents
  JQSeries closed(1, qtrunc);
  for (long r = 1; r * r < qtrunc; ++r) {
    closed.set(r * r, pl_add(closed.coeff(r * r), PLaurent::constant(rat(2 * r))));
    for (long n = 1; r * n + r * r < qtrunc; ++n) {
      long e = r * n + r * r;
      closed.set(e, pl_add(closed.coeff(e), PLaurent::symmetric_pair(rat(2 * r + n), n)));
    }
  }
  if (!jq_agree(regular, closed))
    throw std::logic_error("inv_theta_sq: series inversion and closed sum disagree");
  for (const auto& [e, c] : regular.coeffs())
    if (!c.is_symmetric()) throw std::logic_error("inv_theta_sq: asymmetric coefficient");
  return InvThetaSq{regular, PoleTokens{rat(1), rat(0)}};
}

JQSeries km_kernel(long qtrunc) {
  // direct omega-product
  JQSeries prod = JQSeries::one(qtrunc);
  for (long m = 1; 2 * m < qtrunc; ++m) {
    JQSeries f = one_minus(1, 2 * m, qtrunc);
    prod = jq_mul(prod, jq_mul(f, f));
    JQSeries g = one_minus(-1, 2 * m, qtrunc);
    prod = jq_mul(prod, jq_mul(g, g));
  }
  for (long m = 1; m < qtrunc; ++m) {
    JQSeries f = jq_invert(one_minus(1, m, qtrunc));
    prod = jq_mul(prod, jq_mul(f, f));
    JQSeries g = jq_invert(one_minus(-1, m, qtrunc));
    prod = jq_mul(prod, jq_mul(g, g));
  }
  QSeries e1 = euler_product(qtrunc);
  QSeries e2 = euler_product((qtrunc + 1) / 2);
  QSeries qfactor = qs_mul(qs_pow(qs_scale_q(e2, 2), 4), qs_pow(e1, -12));
  prod = jq_mul_q(prod, qfactor);

  // theta-quotient form
  JQSeries core = theta(qtrunc).core;
  JQSeries core2 = theta((qtrunc + 1) / 2).core;
  JQSeries quot = jq_mul(jq_mul(jq_scale_q(core2, 2), jq_scale_q(core2, 2)),
                         jq_invert(jq_mul(core, core)));
  QSeries eta_factor = qs_mul(qs_pow(qs_scale_q(e2, 2), 8), qs_pow(e1, -16));
  quot = jq_mul_q(quot, eta_factor);
  if (!jq_agree(prod, quot))
    throw std::logic_error("km_kernel: product form and theta-quotient form disagree");

  // closed double sum (after multiplying by eta^12)
  JQSeries shifted = jq_mul_q(prod, eta_pow(12, 1, qtrunc));
  JQSeries closed(2, 2 * qtrunc);  // exponents in (1/2) Z
  for (long r = 1; r * r < 2 * qtrunc; r += 2) {
    closed.set(r * r, pl_add(closed.coeff(r * r), PLaurent::constant(rat(r))));
    for (long n = 1; 2 * r * n + r * r < 2 * qtrunc; ++n) {
      long e = 2 * r * n + r * r;  // rn + r^2/2 in halves
      closed.set(e, pl_add(closed.coeff(e), PLaurent::symmetric_pair(rat(n + r), n)));
    }
  }
  if (!jq_agree(shifted, closed))
    throw std::logic_error("km_kernel: omega product and closed double sum disagree");
  return prod;
}

JQSeries km_kernel_shifted(long qtrunc) {
  return jq_mul_q(km_kernel(qtrunc), eta_pow(12, 1, qtrunc));
}

}  // namespace enriques
