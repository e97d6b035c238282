#include "enriques/hecke.hpp"

#include <numeric>

namespace enriques {

namespace {
std::vector<long> odd_divisors(long ell) {
  std::vector<long> out;
  for (long a = 1; a <= ell; a += 2)
    if (ell % a == 0) out.push_back(a);
  return out;
}
}  // namespace

E8QSeries hecke_V(const E8QSeries& f, long ell, long weight_k) {
  if (ell <= 0) throw std::domain_error("hecke_V: ell must be positive");
  if (f.trunc() < ell)
    throw TruncationError("hecke_V: underdetermined coefficient (input trunc below ell)");
  E8QSeries out(f.trunc() / ell, f.norm_bound());
  // Forward scatter: the input entry (w, gamma) feeds the output entry
  // (a^2 w / ell, a gamma) for every odd a | ell with ell | a w; this hits
  // each term a^{k-1} c(ell v / a^2, r / a) exactly once.
  for (long a : odd_divisors(ell)) {
    Rational ak = rational_pow(a, weight_k - 1);
    for (const auto& [w, slot] : f.coeffs()) {
      if ((a * w) % ell != 0) continue;
      long v = (a * a * w) / ell;
      if (v >= out.trunc()) continue;
      for (const auto& [gamma, c] : slot) {
        E8Vec av = e8_scale(gamma, a);
        if (e8_norm(av) > out.norm_bound()) continue;
        out.add_to(v, av, ak * c);
      }
    }
  }
  return out;
}

QSeries hecke_V(const QSeries& f0, long ell, long weight_k) {
  if (ell <= 0) throw std::domain_error("hecke_V: ell must be positive");
  QSeries f = f0.normalized();
  if (f.exp_denom() != 1)
    throw std::domain_error("hecke_V: q-series input must have integer exponents");
  if (f.trunc() < ell)
    throw TruncationError("hecke_V: underdetermined coefficient (input trunc below ell)");
  QSeries out(1, f.trunc() / ell);
  for (long a : odd_divisors(ell)) {
    Rational ak = rational_pow(a, weight_k - 1);
    for (const auto& [w, c] : f.coeffs()) {
      if ((a * w) % ell != 0) continue;
      long v = (a * a * w) / ell;
      if (v >= out.trunc()) continue;
      out.set(v, out.coeff(v) + ak * c);
    }
  }
  return out;
}

E8QSeries scale_q_E8(const E8QSeries& f, long n) {
  if (n <= 0) throw std::domain_error("scale_q_E8: scale must be positive");
  E8QSeries out(f.trunc() * n, f.norm_bound());
  for (const auto& [e, slot] : f.coeffs())
    for (const auto& [v, c] : slot) out.set(e * n, v, c);
  return out;
}

}  // namespace enriques
