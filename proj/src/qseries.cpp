#include "enriques/qseries.hpp"

#include <numeric>
#include <sstream>

namespace enriques {

Rational rational_from_string(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  r.canonicalize();
  return r;
}

Rational rational_pow(long base, long e) {
  if (base <= 0) throw std::domain_error("rational_pow: base must be positive");
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(base),
                static_cast<unsigned long>(e < 0 ? -e : e));
  Rational r = e < 0 ? Rational(1, p) : Rational(p);
  r.canonicalize();
  return r;
}

QSeries::QSeries(long exp_denom, long trunc) : exp_denom_(exp_denom), trunc_(trunc) {
  if (exp_denom <= 0) throw std::domain_error("exp_denom must be positive");
}

QSeries QSeries::zero(long trunc, long exp_denom) { return QSeries(exp_denom, trunc); }

QSeries QSeries::one(long trunc) {
  QSeries r(1, trunc);
  if (trunc > 0) r.set(0, rat(1));
  return r;
}

QSeries QSeries::monomial(const Rational& c, long num, long den, long trunc_scaled) {
  QSeries r(den, trunc_scaled);
  if (num < trunc_scaled) r.set(num, c);
  return r;
}

Rational QSeries::coeff(long scaled_exp) const {
  if (scaled_exp >= trunc_)
    throw TruncationError("coefficient request past series truncation (trunc)");
  auto it = coeffs_.find(scaled_exp);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

Rational QSeries::coeff_q(long num, long den) const {
  if (den <= 0) throw std::domain_error("coeff_q: denominator must be positive");
  // exponent num/den in scaled units: num * exp_denom_ / den
  long long p = static_cast<long long>(num) * exp_denom_;
  if (p >= static_cast<long long>(trunc_) * den)
    throw TruncationError("coefficient request past series truncation (trunc)");
  if (p % den != 0) return Rational(0);  // off the exponent grid
  return coeff(static_cast<long>(p / den));
}

void QSeries::set(long scaled_exp, const Rational& c) {
  if (scaled_exp >= trunc_) return;
  if (is_zero(c))
    coeffs_.erase(scaled_exp);
  else
    coeffs_[scaled_exp] = c;
}

QSeries QSeries::normalized() const {
  long g = exp_denom_;
  for (const auto& [e, c] : coeffs_) g = std::gcd(g, e < 0 ? -e : e);
  if (g <= 1) return *this;
  QSeries r(exp_denom_ / g, (trunc_ + g - 1) / g);
  for (const auto& [e, c] : coeffs_) r.set(e / g, c);
  return r;
}

QSeries QSeries::with_exp_denom(long d) const {
  if (d % exp_denom_ != 0) throw std::domain_error("with_exp_denom: not a multiple");
  long f = d / exp_denom_;
  if (f == 1) return *this;
  QSeries r(d, trunc_ * f);
  for (const auto& [e, c] : coeffs_) r.set(e * f, c);
  return r;
}

QSeries QSeries::truncated(long new_trunc_scaled) const {
  QSeries r(exp_denom_, std::min(trunc_, new_trunc_scaled));
  for (const auto& [e, c] : coeffs_) r.set(e, c);
  return r;
}

namespace {

// Bring a, b to a common exponent grid.
void merge_grids(QSeries& a, QSeries& b) {
  long l = std::lcm(a.exp_denom(), b.exp_denom());
  a = a.with_exp_denom(l);
  b = b.with_exp_denom(l);
}

}  // namespace

QSeries qs_add(const QSeries& a0, const QSeries& b0) {
  QSeries a = a0, b = b0;
  merge_grids(a, b);
  QSeries r(a.exp_denom(), std::min(a.trunc(), b.trunc()));
  for (const auto& [e, c] : a.coeffs()) r.set(e, c);
  for (const auto& [e, c] : b.coeffs()) {
    if (e >= r.trunc()) continue;
    r.set(e, r.coeff(e) + c);
  }
  return r.normalized();
}

QSeries qs_neg(const QSeries& a) {
  QSeries r(a.exp_denom(), a.trunc());
  for (const auto& [e, c] : a.coeffs()) r.set(e, -c);
  return r;
}

QSeries qs_sub(const QSeries& a, const QSeries& b) { return qs_add(a, qs_neg(b)); }

QSeries qs_scalar_mul(const Rational& s, const QSeries& a) {
  QSeries r(a.exp_denom(), a.trunc());
  if (is_zero(s)) return r;
  for (const auto& [e, c] : a.coeffs()) r.set(e, s * c);
  return r;
}

QSeries qs_mul(const QSeries& a0, const QSeries& b0) {
  QSeries a = a0, b = b0;
  merge_grids(a, b);
  // Product coefficients are complete below min over shifted windows.
  long t = std::min(a.trunc() + b.lowest(), b.trunc() + a.lowest());
  QSeries r(a.exp_denom(), t);
  for (const auto& [ea, ca] : a.coeffs()) {
    for (const auto& [eb, cb] : b.coeffs()) {
      long e = ea + eb;
      if (e >= t) break;  // b sorted ascending
      r.set(e, r.coeff(e) + ca * cb);
    }
  }
  return r.normalized();
}

QSeries qs_invert(const QSeries& a) {
  if (a.is_zero()) throw std::domain_error("not invertible: zero series");
  long e0 = a.lowest();
  Rational c0 = a.coeff(e0);
  // unit part u with u_0 = 1: a = c0 q^{e0} (1 + u)
  long ut = a.trunc() - e0;  // unit known below this
  std::map<long, Rational> u;
  for (const auto& [e, c] : a.coeffs())
    if (e != e0) u[e - e0] = c / c0;
  // v = 1/(1+u): v_n = -sum_{j>=1} u_j v_{n-j}
  std::map<long, Rational> v;
  v[0] = rat(1);
  for (long n = 1; n < ut; ++n) {
    Rational s(0);
    for (const auto& [j, uj] : u) {
      if (j > n) break;
      auto it = v.find(n - j);
      if (it != v.end()) s += uj * it->second;
    }
    if (!is_zero(s)) v[n] = -s;
  }
  QSeries r(a.exp_denom(), a.trunc() - 2 * e0);
  for (const auto& [e, c] : v) r.set(e - e0, c / c0);
  return r.normalized();
}

QSeries qs_exp(const QSeries& a) {
  if (!a.coeffs().empty() && a.lowest() <= 0)
    throw std::domain_error("qs_exp requires positive-order input (constant term 0)");
  // g = exp(a): n g_n = sum_j j a_j g_{n-j}  (scaled exponents)
  QSeries g(a.exp_denom(), a.trunc());
  if (a.trunc() <= 0) return g;
  g.set(0, rat(1));
  for (long n = 1; n < a.trunc(); ++n) {
    Rational s(0);
    for (const auto& [j, aj] : a.coeffs()) {
      if (j > n) break;
      Rational gn = g.coeff(n - j);
      if (!is_zero(gn)) s += rat(j) * aj * gn;
    }
    if (!is_zero(s)) g.set(n, s / rat(n));
  }
  return g;
}

QSeries qs_log(const QSeries& a) {
  if (a.trunc() <= 0) return QSeries::zero(a.trunc(), a.exp_denom());
  if (a.lowest() != 0 || a.coeff(0) != rat(1))
    throw std::domain_error("qs_log requires constant term 1");
  // h = log(a): n h_n = n a_n - sum_{1<=j<n} j h_j a_{n-j}
  QSeries h(a.exp_denom(), a.trunc());
  for (long n = 1; n < a.trunc(); ++n) {
    Rational s = rat(n) * a.coeff(n);
    for (const auto& [j, hj] : h.coeffs()) {
      if (j >= n) break;
      Rational anj = a.coeff(n - j);
      if (!is_zero(anj)) s -= rat(j) * hj * anj;
    }
    if (!is_zero(s)) h.set(n, s / rat(n));
  }
  return h;
}

QSeries qs_scale_q(const QSeries& a, long n) {
  if (n <= 0) throw std::domain_error("qs_scale_q: scale must be positive");
  QSeries r(a.exp_denom(), a.trunc() * n);
  for (const auto& [e, c] : a.coeffs()) r.set(e * n, c);
  return r.normalized();
}

QSeries qs_pow(const QSeries& a, long e) {
  if (e == 0) {
    QSeries r(a.exp_denom(), a.trunc() - a.lowest());
    r.set(0, rat(1));
    return r.normalized();
  }
  QSeries base = e < 0 ? qs_invert(a) : a;
  long m = e < 0 ? -e : e;
  QSeries acc = base;
  for (long i = 1; i < m; ++i) acc = qs_mul(acc, base);
  return acc;
}

bool qs_agree(const QSeries& a0, const QSeries& b0) {
  QSeries a = a0, b = b0;
  merge_grids(a, b);
  long t = std::min(a.trunc(), b.trunc());
  for (const auto& [e, c] : a.coeffs())
    if (e < t && c != b.coeff(e)) return false;
  for (const auto& [e, c] : b.coeffs())
    if (e < t && c != a.coeff(e)) return false;
  return true;
}

std::string qs_to_string(const QSeries& a, int max_terms) {
  std::ostringstream os;
  int shown = 0;
  for (const auto& [e, c] : a.coeffs()) {
    if (shown++ >= max_terms) {
      os << " + ...";
      break;
    }
    if (shown > 1) os << " + ";
    os << "(" << c.get_str() << ")q^";
    if (a.exp_denom() == 1)
      os << e;
    else
      os << "(" << e << "/" << a.exp_denom() << ")";
  }
  if (shown == 0) os << "0";
  os << " + O(q^(" << a.trunc() << "/" << a.exp_denom() << "))";
  return os.str();
}

}  // namespace enriques
