#pragma once

#include "enriques/e8.hpp"
#include "enriques/qseries.hpp"

namespace enriques {

// Fourier-side Hecke operator V_ell at weight k:
//   [f|V_ell](v, r) = sum_{odd a | (v, r, ell)} a^{k-1} c(ell v / a^2, r / a).
// Output truncation is floor(input/ell); the vector-part norm bound carries
// over. For plain q-series the vector part is absent (a runs over odd
// divisors of gcd(v, ell), with a | 0 always true).
E8QSeries hecke_V(const E8QSeries& f, long ell, long weight_k);
QSeries hecke_V(const QSeries& f, long ell, long weight_k);

// q -> q^N on the E8-graded series; vector part unchanged.
E8QSeries scale_q_E8(const E8QSeries& f, long n);

}  // namespace enriques
