#pragma once

#include <array>
#include <map>
#include <memory>
#include <vector>

#include "enriques/qseries.hpp"

namespace enriques {

// Coordinates in the fixed E8 basis whose (positive definite) Gram matrix
// Q_E8 is printed below. The E8(-1) twist of curve classes is applied at
// pairing sites, never by negating the matrix.
using E8Vec = std::array<int, 8>;

inline constexpr std::array<std::array<int, 8>, 8> kQE8 = {{
    {2, 0, -1, 0, 0, 0, 0, 0},
    {0, 2, 0, -1, 0, 0, 0, 0},
    {-1, 0, 2, -1, 0, 0, 0, 0},
    {0, -1, -1, 2, -1, 0, 0, 0},
    {0, 0, 0, -1, 2, -1, 0, 0},
    {0, 0, 0, 0, -1, 2, -1, 0},
    {0, 0, 0, 0, 0, -1, 2, -1},
    {0, 0, 0, 0, 0, 0, -1, 2},
}};

long e8_norm(const E8Vec& v);                       // v^T Q v (>= 0, even)
long e8_pair(const E8Vec& a, const E8Vec& b);       // a^T Q b
long e8_divisibility(const E8Vec& v);               // gcd of coordinates; 0 for v = 0
E8Vec e8_add(const E8Vec& a, const E8Vec& b);
E8Vec e8_sub(const E8Vec& a, const E8Vec& b);
E8Vec e8_scale(const E8Vec& a, long k);
inline E8Vec e8_zero() { return E8Vec{0, 0, 0, 0, 0, 0, 0, 0}; }
bool e8_is_zero(const E8Vec& v);
// Componentwise division; returns false if some coordinate is not divisible.
bool e8_divide(const E8Vec& v, long k, E8Vec* out);

// All vectors x with x^T gram x <= max_norm for a symmetric positive
// definite integer gram, each exactly once, in deterministic order
// (recursive coordinate bounding on the rational Cholesky decomposition).
// Throws std::domain_error if gram is not positive definite.
std::vector<std::vector<long>> lattice_enumerate(const std::vector<std::vector<long>>& gram,
                                                 long max_norm);

// Cached E8 ball: vectors with e8_norm <= max_norm, sorted.
const std::vector<E8Vec>& e8_ball(long max_norm);

struct E8BallEntry {
  E8Vec v;
  long norm;
  long div;  // gcd of coordinates (0 for the origin)
};
// Same ball with norms and divisibilities precomputed.
const std::vector<E8BallEntry>& e8_ball_entries(long max_norm);

// q-series whose coefficients are finitely supported maps E8Vec -> Q.
// Entries are complete on the window {exp < trunc, norm(alpha) <= norm_bound}.
class E8QSeries {
 public:
  E8QSeries() : trunc_(0), norm_bound_(0) {}
  E8QSeries(long trunc, long norm_bound) : trunc_(trunc), norm_bound_(norm_bound) {}

  long trunc() const { return trunc_; }
  long norm_bound() const { return norm_bound_; }
  const std::map<long, std::map<E8Vec, Rational>>& coeffs() const { return coeffs_; }

  Rational coeff(long exp, const E8Vec& v) const;
  void set(long exp, const E8Vec& v, const Rational& c);
  void add_to(long exp, const E8Vec& v, const Rational& c);

  bool operator==(const E8QSeries&) const = default;

 private:
  long trunc_;
  long norm_bound_;
  std::map<long, std::map<E8Vec, Rational>> coeffs_;
};

// Theta function of the E8 lattice: coefficient 1 at (alpha.alpha/2, alpha)
// for every alpha with alpha.alpha <= 2 * trunc.
E8QSeries theta_E8(long trunc);

// Product with a plain q-series (PLaurent-free side), window-intersected.
E8QSeries e8q_mul_qseries(const E8QSeries& a, const QSeries& b);
E8QSeries e8q_scalar_mul(const Rational& c, const E8QSeries& a);
E8QSeries e8q_add(const E8QSeries& a, const E8QSeries& b);
bool e8q_agree(const E8QSeries& a, const E8QSeries& b);

// Specialize zeta -> 1 (sum coefficients over vectors per exponent).
QSeries e8q_eval_zeta_one(const E8QSeries& a);

}  // namespace enriques
