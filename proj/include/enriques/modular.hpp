#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "enriques/qseries.hpp"

namespace enriques {

// B_0, B_1, B_2, ... with B_1 = -1/2; computed by the convolution
// recursion and cached.
Rational bernoulli(long k);

// G_k(q) = -B_k/(2k) + sum_n sum_{d|n} d^{k-1} q^n for even k >= 2.
// Odd k returns the zero series (the paper's convention G_k = 0).
QSeries eisenstein_G(long k, long qtrunc);

// eta(scale * tau)^e, complete below q^qtrunc. Exponents live on the
// (1/24)-grid and are normalized away when integral.
QSeries eta_pow(long e, long scale, long qtrunc);

QSeries eta(long qtrunc);
QSeries delta(long qtrunc);        // eta^24
QSeries euler_product(long qtrunc);  // prod_{n>=1} (1 - q^n)

// F_2 = G_2(q) - 2 G_2(q^2) = 1/24 + sum_n (sum_{odd d|n} d) q^n.
// Built both ways and asserted equal.
QSeries F2(long qtrunc);

// eta^16(2 tau) / eta^8(tau) = q + O(q^2); the weight-4 form vanishing at
// the infinite cusp.
QSeries cusp_quotient(long qtrunc);

// ---------------------------------------------------------------------------
// Polynomial ring recognition over the generators (G2, F2, G4, G6).

enum class RingTag { SL2Mod, SL2QMod, G02Mod, G02QMod };

std::string ring_tag_name(RingTag t);
RingTag ring_tag_from_name(const std::string& s);

// Exponent vector (e_G2, e_F2, e_G4, e_G6).
using Monomial = std::array<int, 4>;

inline long monomial_weight(const Monomial& m) {
  return 2L * m[0] + 2L * m[1] + 4L * m[2] + 6L * m[3];
}

// Whether the generator set of the ring admits this monomial:
//   SL2:    no F2;   Gamma0(2): no G6;   Mod tags: no G2.
bool monomial_in_ring(const Monomial& m, RingTag tag);

struct RingElement {
  RingTag tag;
  long weight = 0;
  std::map<Monomial, Rational> terms;

  bool is_zero() const { return terms.empty(); }
  bool operator==(const RingElement&) const = default;
};

RingElement re_add(const RingElement& a, const RingElement& b);
RingElement re_scalar_mul(const Rational& c, const RingElement& a);
RingElement re_neg(const RingElement& a);
std::string re_to_string(const RingElement& a);

// All ring monomials of the exact weight, in deterministic order.
std::vector<Monomial> basis_monomials(RingTag tag, long weight);

QSeries evaluate(const RingElement& e, long qtrunc);

// Polynomial partial derivative with respect to the G2 generator; weight
// drops by 2. Rejects modular-tagged input.
RingElement formal_dG2(const RingElement& e);

struct RecognizeResult {
  std::optional<RingElement> element;
  // On failure: how many of the matched equations were inconsistent and
  // the first offending exponent.
  long residual_count = 0;
  long first_bad_exponent = -1;
  bool ok() const { return element.has_value(); }
};

// Match f against the weight-graded monomial basis by exact linear algebra
// (Gaussian elimination over Q, never least squares). Requires integer
// q-exponents and at least 5 surplus equations beyond the basis size;
// otherwise throws TruncationError("underdetermined ...").
RecognizeResult recognize(const QSeries& f, long weight, RingTag tag, long max_order);

// Finite-truncation form of the vanishing lemma: the space of elements of
// QMod_k(Gamma_0(2)) whose Fourier coefficients are supported on multiples
// of m (imposed for n <= order) is {0} for k != 0 and the constants for
// k = 0. Returns whether that holds; m = 2 is admitted so the known
// exception can be exhibited (returns false there).
bool vanishing_lemma_check(long m, long weight, long order);

// ---------------------------------------------------------------------------
// Small exact dense linear algebra used by recognize / the vanishing check.

using Matrix = std::vector<std::vector<Rational>>;

// Solve A x = b exactly. Returns nullopt if inconsistent; throws
// std::domain_error if the solution is not unique.
std::optional<std::vector<Rational>> solve_exact(Matrix a, std::vector<Rational> b,
                                                 long* residual_count = nullptr,
                                                 long* first_bad_row = nullptr);
long nullspace_dimension(Matrix a);

}  // namespace enriques
