#pragma once

#include "enriques/jqseries.hpp"

namespace enriques {

// The renormalized odd Jacobi theta function is tracked as
//   Theta(z, tau) = (p^{1/2} - p^{-1/2}) * core(p, q)
// where core has integer p- and q-exponents. Only even powers of Theta are
// exposed publicly, so all public objects live in integer p-exponents.
struct Theta {
  JQSeries core;
};

// Builds core by the triple product and independently from the half-integer
// exponential sum (divided by eta^3); the two constructions are compared
// coefficientwise and a mismatch is a consistency failure (std::logic_error).
Theta theta(long qtrunc);

// Theta^2 = (p - 2 + p^{-1}) * core^2.
JQSeries theta_sq(long qtrunc);

// 1/Theta^2. The q^0 coefficient is the designated polar part
// p/(1-p)^2 (= 1/(p^{1/2}-p^{-1/2})^2), kept as a token; the q^n (n >= 1)
// coefficients are symmetric Laurent polynomials. Built by series inversion
// of Theta^2 and asserted equal to the closed double sum
//   sum_{r>=1} ( 2r q^{r^2} + sum_{n>=1} (2r+n)(p^n+p^{-n}) q^{rn+r^2} ).
struct InvThetaSq {
  JQSeries regular;   // the q^n, n >= 1 part
  PoleTokens q0_polar;
};
InvThetaSq inv_theta_sq(long qtrunc);

// The omega-product
//   prod_m (1-pq^{2m})^2 (1-p^{-1}q^{2m})^2 (1-q^{2m})^4
//        / ((1-pq^m)^2 (1-p^{-1}q^m)^2 (1-q^m)^12),
// asserted equal to Theta(z,2tau)^2/Theta(z,tau)^2 * eta(2tau)^8/eta(tau)^16
// and, after multiplying by eta(tau)^12, to the closed double sum
//   sum_{odd r>=1} ( r q^{r^2/2} + sum_{n>=1} (n+r)(p^n+p^{-n}) q^{rn+r^2/2} ).
JQSeries km_kernel(long qtrunc);

// km_kernel * eta^12: the half-integer-exponent avatar
// q^{1/2} + 2(p+p^{-1})q^{3/2} + 3(p^2+p^{-2})q^{5/2} + ...
JQSeries km_kernel_shifted(long qtrunc);

}  // namespace enriques
