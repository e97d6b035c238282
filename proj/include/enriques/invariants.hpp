#pragma once

#include <map>
#include <memory>
#include <utility>

#include "enriques/lattice.hpp"
#include "enriques/theta.hpp"

namespace enriques {

// ---------------------------------------------------------------------------
// omega tables

// omega_g(n) = (-1)^{g-1} [km_kernel]_{z^{2g-2} q^n} (z-form) and
// omega(r, n) = [km_kernel]_{p^r q^n} (p-form), both held exactly.
struct OmegaTable {
  long max_g = 0;
  long max_n = -1;
  std::map<std::pair<long, long>, Rational> z_form;
  std::map<std::pair<long, long>, Rational> p_form;

  // 0 for n < 0 (effectivity); TruncationError past max_n; std::domain_error
  // for g beyond the z-truncation (never silently 0).
  Rational omega(long g, long n) const;
  Rational omega_p(long r, long n) const;
};

OmegaTable omega_table(long max_g, long max_n);

// Cached shared tables; grown monotonically, handed out as shared_ptr so
// concurrent readers keep a stable snapshot.
std::shared_ptr<const JQSeries> cached_km_kernel(long qtrunc);
std::shared_ptr<const OmegaTable> cached_omega(long max_g, long max_n);

// a(n): prod (1+q^n)^8/(1-q^n)^8 = 1 + 16q + 144q^2 + 960q^3 + 5264q^4 + ...
QSeries a_coeffs(long max_n);
Rational a_value(long n);  // 0 for n < 0

// Goettsche: sum e(Hilb^n Y) q^n = prod (1-q^n)^{-12}; e(Hilb^x) = 0 for
// x negative or fractional.
QSeries hilb_euler(long max_n);
Rational hilb_value(const Rational& x);

// b(x) = [eta^{-12}]_{q^x} = e(Hilb^{x + 1/2}); supported on x in -1/2 + Z>=0.
Rational b_coeff(const Rational& x);

// ---------------------------------------------------------------------------
// Gromov-Witten side

// N_{g,beta} = 2 sum_{odd k | beta} k^{2g-3} omega_g(beta^2 / 2k^2).
Rational km_N(long g, const CurveClass& beta);
Rational NQ(long g, const CurveClass& beta);       // 4 N_{g,beta}
Rational n_small(long g, const CurveClass& beta);  // 8 omega_g(beta^2/2)

// (beta,beta) N_{1,beta} = 8 sum_{beta1+beta2=beta, effective} (beta1,beta2)
// N_{1,beta1} N_{1,beta2}, by full splitting enumeration. norm_bound must
// cover 2 k1 d1 for every sub-box corner, else an error is raised.
bool genus1_recursion_check(const CurveClass& beta, long norm_bound);

// Appendix C: 0 for odd d, N_{g,df} for even d; d >= 1 required.
Rational torsion_N_minus(long g, long d);

// ---------------------------------------------------------------------------
// Sheaf side

Rational dt_closed(const MukaiVector& v);  // 8 b(v.v / 2); 0 on even squares
Rational DT_closed(const MukaiVector& v);  // sum_{odd k | v} k^{-2} dt(v/k)
Rational VW_closed(const MukaiVector& v);  // DT/4, asserted against the Hilbert-scheme form

// f_KM(beta) = [km_kernel]_{q^{beta^2/2}} (0 for negative square); asserted
// equal to the eta^{-12} double sum it expands into.
PLaurent f_KM(const CurveClass& beta);

// dt-values feeding f_PT. The closed form is the default; an injected
// table exercises the uniqueness ("Sudoku") direction. Queries have r >= 1;
// the rank-0 sector enters only through its pole tokens
// (sum_{n>0} n dt(0,beta,n) p^n for a constant-in-n sector c is the token
// c * p/(1-p)^2).
struct DtSource {
  virtual ~DtSource() = default;
  virtual Rational dt(const MukaiVector& v) const = 0;
  virtual PoleTokens r0_tokens(const CurveClass& beta) const;
};

struct ClosedFormDtSource final : DtSource {
  Rational dt(const MukaiVector& v) const override { return dt_closed(v); }
};

struct FPTResult {
  PLaurent part;
  PoleTokens tokens;
  bool operator==(const FPTResult&) const = default;
};

// (1/8) of the stable-pairs local contribution
//   sum_{n,r>0} (-1)^{r-1} (n+r) dt(r,beta,n) (p^n + p^{-n})
//   - sum_{n>0} n dt(0,beta,n) p^n
//   + sum_{r>0} (-1)^{r-1} r dt(r,beta,0),
// finite by the support bound beta^2 - r^2 - 2rn >= -1. With the closed-form
// source this equals f_KM(beta) with vanishing tokens.
FPTResult f_PT(const CurveClass& beta, const DtSource& src);
FPTResult f_PT(const CurveClass& beta);

// Substitute p = e^z and extract g -> (-1)^{g-1} [.]_{z^{2g-2}}.
// Asymmetric input is an error.
std::map<long, Rational> gwpt_bridge(const PLaurent& f, long z_trunc);
std::map<long, Rational> gwpt_bridge(const FPTResult& f, long z_trunc);

// log PT(Q) on the slice: the q^{Ks+Df} coefficient is
// sum_{odd j | (K,D)} (1/j) f_PT((K/j)s + (D/j)f)(p^j).
std::map<std::pair<long, long>, FPTResult> toda_log_PT(long k_max, long d_max);

// ---------------------------------------------------------------------------
// The Klemm-Marino quasi-Jacobi series

// F^KM_{g,ell}: for ell = 1 the product 8 Theta_E8 * sum_n omega_g(n) q^n;
// for ell > 1 the Hecke lift at weight 2g-2. Both are compared against the
// direct odd-divisor definition
//   [q^d zeta^alpha] = sum_{odd k | (ell,d,alpha)} 8 k^{2g-3}
//                      omega_g((2 ell d - |alpha|^2) / (2k^2))
// and a mismatch raises a consistency failure.
E8QSeries F_KM_series(long g, long ell, long trunc, long norm_bound);

// The direct-path coefficient by itself (used for dependence sweeps).
Rational F_KM_coefficient(long g, long ell, long d, const E8Vec& alpha);

// Z^VW_{r,0}(q) = sum_n VW(r,0,n) q^{-2n-r}, complete below q^qtrunc.
QSeries vw_rank_series(long r, long qtrunc);

// Table row kinds exported by the CLI.
enum class InvariantKind { GW_N, GW_n, DT, dt, VW, PT_f };

}  // namespace enriques
