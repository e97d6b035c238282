#include "enriques/invariants.hpp"

#include <mutex>
#include <numeric>

#include "enriques/hecke.hpp"
#include "enriques/modular.hpp"
#include "enriques/zseries.hpp"

namespace enriques {

namespace {

std::mutex g_tables_mutex;
std::shared_ptr<const JQSeries> g_km;
std::shared_ptr<const OmegaTable> g_omega;
std::shared_ptr<const QSeries> g_hilb;
std::shared_ptr<const QSeries> g_a;

std::vector<long> odd_divisors_of(long m) {
  std::vector<long> out;
  if (m < 0) m = -m;
  for (long a = 1; a <= m; a += 2)
    if (m % a == 0) out.push_back(a);
  return out;
}

std::shared_ptr<const QSeries> cached_hilb(long qtrunc) {
  std::lock_guard<std::mutex> lock(g_tables_mutex);
  if (!g_hilb || g_hilb->trunc() < qtrunc)
    g_hilb = std::make_shared<const QSeries>(qs_pow(euler_product(qtrunc), -12));
  return g_hilb;
}

std::shared_ptr<const QSeries> cached_a(long qtrunc) {
  std::lock_guard<std::mutex> lock(g_tables_mutex);
  if (!g_a || g_a->trunc() < qtrunc) {
    // prod (1+q^n)^8 / (1-q^n)^8
    QSeries p = QSeries::one(qtrunc);
    for (long n = 1; n < qtrunc; ++n) {
      QSeries plus = QSeries::one(qtrunc);
      plus.set(n, rat(1));
      QSeries minus = QSeries::one(qtrunc);
      minus.set(n, rat(-1));
      p = qs_mul(p, qs_mul(plus, qs_invert(minus)));
    }
    QSeries acc = p;
    for (int i = 1; i < 8; ++i) acc = qs_mul(acc, p);
    g_a = std::make_shared<const QSeries>(acc);
  }
  return g_a;
}

}  // namespace

std::shared_ptr<const JQSeries> cached_km_kernel(long qtrunc) {
  std::lock_guard<std::mutex> lock(g_tables_mutex);
  if (!g_km || g_km->trunc() < qtrunc)
    g_km = std::make_shared<const JQSeries>(km_kernel(qtrunc));
  return g_km;
}

Rational OmegaTable::omega(long g, long n) const {
  if (n < 0) return Rational(0);
  if (g < 0 || g > max_g)
    throw std::domain_error("omega: genus beyond z-truncation (gmax)");
  if (n > max_n) throw TruncationError("omega: q-order beyond table truncation (qmax)");
  auto it = z_form.find({g, n});
  return it == z_form.end() ? Rational(0) : it->second;
}

Rational OmegaTable::omega_p(long r, long n) const {
  if (n < 0) return Rational(0);
  if (n > max_n) throw TruncationError("omega: q-order beyond table truncation (qmax)");
  auto it = p_form.find({r, n});
  return it == p_form.end() ? Rational(0) : it->second;
}

OmegaTable omega_table(long max_g, long max_n) {
  OmegaTable t;
  t.max_g = max_g;
  t.max_n = max_n;
  auto km = cached_km_kernel(max_n + 1);
  long z_trunc = 2 * max_g + 1;
  for (long n = 0; n <= max_n; ++n) {
    PLaurent c = km->coeff(n);
    if (c.is_zero()) continue;
    for (const auto& [r, v] : c.coeffs()) t.p_form[{r, n}] = v;
    ZSeries zs = plaurent_to_zseries(c, z_trunc);
    for (const auto& [g, v] : zseries_extract_genus(zs))
      if (g <= max_g && !is_zero(v)) t.z_form[{g, n}] = v;
  }
  return t;
}

std::shared_ptr<const OmegaTable> cached_omega(long max_g, long max_n) {
  std::shared_ptr<const OmegaTable> cur;
  {
    std::lock_guard<std::mutex> lock(g_tables_mutex);
    cur = g_omega;
  }
  if (cur && cur->max_g >= max_g && cur->max_n >= max_n) return cur;
  long build_g = std::max(max_g, cur ? cur->max_g : 0L);
  long build_n = std::max(max_n, cur ? cur->max_n : 0L);
  auto t = std::make_shared<const OmegaTable>(omega_table(build_g, build_n));
  std::lock_guard<std::mutex> lock(g_tables_mutex);
  if (!g_omega || g_omega->max_g < t->max_g || g_omega->max_n < t->max_n) g_omega = t;
  return t;
}

QSeries a_coeffs(long max_n) { return cached_a(max_n + 1)->truncated(max_n + 1); }

Rational a_value(long n) {
  if (n < 0) return Rational(0);
  return cached_a(n + 1)->coeff(n);
}

QSeries hilb_euler(long max_n) { return cached_hilb(max_n + 1)->truncated(max_n + 1); }

Rational hilb_value(const Rational& x) {
  if (sgn(x) < 0) return Rational(0);
  if (x.get_den() != 1) return Rational(0);  // fractional
  long n = static_cast<long>(x.get_num().get_si());
  return cached_hilb(n + 1)->coeff(n);
}

Rational b_coeff(const Rational& x) { return hilb_value(x + rat(1, 2)); }

// ---------------------------------------------------------------------------

Rational km_N(long g, const CurveClass& beta) {
  if (g < 0) throw std::domain_error("km_N: genus must be nonnegative");
  if (beta.is_zero()) throw std::domain_error("km_N: zero curve class");
  long sq = beta.square();
  auto table = cached_omega(g, std::max(sq / 2, 0L));
  Rational s(0);
  for (long k : odd_divisors_of(beta.divisibility())) {
    long arg2 = sq / (2 * k * k);  // (beta/k)^2 / 2, integral
    s += rational_pow(k, 2 * g - 3) * table->omega(g, arg2);
  }
  return rat(2) * s;
}

Rational NQ(long g, const CurveClass& beta) { return rat(4) * km_N(g, beta); }

Rational n_small(long g, const CurveClass& beta) {
  long sq = beta.square();
  auto table = cached_omega(g, std::max(sq / 2, 0L));
  return rat(8) * table->omega(g, sq / 2);
}

bool genus1_recursion_check(const CurveClass& beta, long norm_bound) {
  if (beta.k < 0 || beta.d < 0)
    throw std::domain_error("genus1_recursion_check: class outside the effective slice box");
  Rational lhs = rat(beta.square()) * km_N(1, beta);
  Rational rhs(0);
  std::map<CurveClass, Rational> memo;
  auto n1 = [&](const CurveClass& b) {
    auto it = memo.find(b);
    if (it != memo.end()) return it->second;
    Rational v = km_N(1, b);
    memo.emplace(b, v);
    return v;
  };
  for (long k1 = 0; k1 <= beta.k; ++k1)
    for (long d1 = 0; d1 <= beta.d; ++d1) {
      long k2 = beta.k - k1, d2 = beta.d - d1;
      if ((k1 == 0 && d1 == 0) || (k2 == 0 && d2 == 0)) continue;
      if (2 * k1 * d1 > norm_bound)
        throw TruncationError("genus1_recursion_check: enumeration bound insufficient (norm)");
      for (const auto& a1 : e8_ball(2 * k1 * d1)) {
        CurveClass b1{k1, d1, a1};
        CurveClass b2 = cc_sub(beta, b1);
        if (b2.square() < 0) continue;
        Rational v1 = n1(b1);
        if (is_zero(v1)) continue;
        Rational v2 = n1(b2);
        if (is_zero(v2)) continue;
        rhs += rat(cc_pair(b1, b2)) * v1 * v2;
      }
    }
  return lhs == rat(8) * rhs;
}

Rational torsion_N_minus(long g, long d) {
  if (d <= 0) throw std::domain_error("torsion_N_minus: d must be positive");
  if (d % 2 == 1) return Rational(0);
  return km_N(g, CurveClass{0, d, e8_zero()});
}

// ---------------------------------------------------------------------------

Rational dt_closed(const MukaiVector& v) {
  if (v.is_zero()) throw std::domain_error("dt: zero Mukai vector");
  return rat(8) * b_coeff(rat(v.square(), 2));
}

Rational DT_closed(const MukaiVector& v) {
  if (v.is_zero()) throw std::domain_error("DT: zero Mukai vector");
  long m = mukai_invariants(v).divisibility;
  Rational s(0);
  for (long k : odd_divisors_of(m)) {
    // v/k is integral for odd k | m = gcd(r, div beta, 2n)
    s += rational_pow(k, -2) * rat(8) * b_coeff(rat(v.square(), 2 * k * k));
  }
  return s;
}

Rational VW_closed(const MukaiVector& v) {
  Rational via_dt = DT_closed(v) / rat(4);
  // independent Hilbert-scheme form: 2 sum_{odd k|(r,beta,n)} k^{-2}
  // e(Hilb^{(beta^2 - 2rn - r^2)/(2k^2) + 1/2})
  long gcd_rbn = std::gcd(std::gcd(v.r < 0 ? -v.r : v.r, v.beta.divisibility()),
                          v.n < 0 ? -v.n : v.n);
  Rational s(0);
  for (long k : odd_divisors_of(gcd_rbn))
    s += rational_pow(k, -2) * hilb_value(rat(v.square(), 2 * k * k) + rat(1, 2));
  s *= rat(2);
  if (s != via_dt)
    throw std::logic_error("VW: DT/4 and Hilbert-scheme forms disagree");
  return via_dt;
}

PLaurent f_KM(const CurveClass& beta) {
  long sq = beta.square();
  if (sq < 0) return PLaurent();
  if (sq % 2 != 0) throw std::logic_error("f_KM: odd square");
  auto km = cached_km_kernel(sq / 2 + 1);
  PLaurent out = km->coeff(sq / 2);
  // cross-check against the eta^{-12} double sum
  PLaurent check;
  for (long r = 1; sq - r * r >= -1; r += 2) {
    check.add_to(0, rat(r) * b_coeff(rat(sq - r * r, 2)));
    for (long n = 1; sq - r * r - 2 * r * n >= -1; ++n) {
      Rational c = rat(n + r) * b_coeff(rat(sq - r * r - 2 * r * n, 2));
      if (is_zero(c)) continue;
      check.add_to(n, c);
      check.add_to(-n, c);
    }
  }
  if (!(check == out))
    throw std::logic_error("f_KM: kernel coefficient and double sum disagree");
  return out;
}

PoleTokens DtSource::r0_tokens(const CurveClass&) const { return PoleTokens{}; }

FPTResult f_PT(const CurveClass& beta, const DtSource& src) {
  long sq = beta.square();
  PLaurent sum;
  for (long r = 1; sq - r * r >= -1; ++r) {
    Rational sign = rat(r % 2 == 1 ? 1 : -1);
    Rational v0 = src.dt(MukaiVector{r, beta, 0});
    if (!is_zero(v0)) sum.add_to(0, sign * rat(r) * v0);
    for (long n = 1; sq - r * r - 2 * r * n >= -1; ++n) {
      Rational v = src.dt(MukaiVector{r, beta, n});
      if (is_zero(v)) continue;
      Rational c = sign * rat(n + r) * v;
      sum.add_to(n, c);
      sum.add_to(-n, c);
    }
  }
  PoleTokens t = src.r0_tokens(beta);
  Rational eighth = rat(1, 8);
  FPTResult res;
  res.part = pl_scalar_mul(eighth, sum);
  res.tokens = PoleTokens{-eighth * t.c_minus, -eighth * t.c_plus};
  return res;
}

FPTResult f_PT(const CurveClass& beta) {
  ClosedFormDtSource src;
  return f_PT(beta, src);
}

std::map<long, Rational> gwpt_bridge(const PLaurent& f, long z_trunc) {
  if (!f.is_symmetric()) throw std::domain_error("gwpt_bridge: asymmetric input");
  return zseries_extract_genus(plaurent_to_zseries(f, z_trunc));
}

std::map<long, Rational> gwpt_bridge(const FPTResult& f, long z_trunc) {
  if (!f.part.is_symmetric()) throw std::domain_error("gwpt_bridge: asymmetric input");
  ZSeries zs = plaurent_to_zseries(f.part, z_trunc);
  if (!f.tokens.is_zero()) zs = zs_add(zs, pole_tokens_to_zseries(f.tokens, z_trunc));
  return zseries_extract_genus(zs);
}

std::map<std::pair<long, long>, FPTResult> toda_log_PT(long k_max, long d_max) {
  std::map<std::pair<long, long>, FPTResult> out;
  for (long K = 0; K <= k_max; ++K)
    for (long D = 0; D <= d_max; ++D) {
      if (K == 0 && D == 0) continue;
      FPTResult acc;
      for (long j : odd_divisors_of(std::gcd(K, D))) {
        FPTResult f = f_PT(slice_class(K / j, D / j));
        if (!f.tokens.is_zero())
          throw std::domain_error("toda_log_PT: pole tokens do not admit p -> p^k substitution");
        acc.part = pl_add(acc.part, pl_scalar_mul(rat(1, j), f.part.scale_p(j)));
      }
      out[{K, D}] = acc;
    }
  return out;
}

// ---------------------------------------------------------------------------

Rational F_KM_coefficient(long g, long ell, long d, const E8Vec& alpha) {
  long beta_sq = 2 * ell * d - e8_norm(alpha);
  auto table = cached_omega(g, std::max(ell * d, 0L));
  long m = std::gcd(std::gcd(ell, d), e8_divisibility(alpha));
  Rational s(0);
  for (long k : odd_divisors_of(m))
    s += rational_pow(k, 2 * g - 3) * table->omega(g, beta_sq / (2 * k * k));
  return rat(8) * s;
}

namespace {

E8QSeries f_km_direct(long g, long ell, long trunc, long norm_bound) {
  auto table = cached_omega(g, std::max(ell * (trunc - 1), 0L));
  E8QSeries out(trunc, norm_bound);
  // The coefficient depends only on (2 ell d - |alpha|^2, gcd(ell, d, div alpha));
  // memoize on that pair while sweeping the window.
  std::map<std::pair<long, long>, Rational> memo;
  const auto& ball = e8_ball_entries(norm_bound);
  for (long d = 0; d < trunc; ++d) {
    long gd = std::gcd(ell, d);
    for (const auto& entry : ball) {
      long beta_sq = 2 * ell * d - entry.norm;
      if (beta_sq < 0) continue;
      long m = std::gcd(gd, entry.div);
      auto key = std::make_pair(beta_sq, m);
      auto it = memo.find(key);
      if (it == memo.end()) {
        Rational s(0);
        for (long k : odd_divisors_of(m))
          s += rational_pow(k, 2 * g - 3) * table->omega(g, beta_sq / (2 * k * k));
        it = memo.emplace(key, rat(8) * s).first;
      }
      if (!is_zero(it->second)) out.set(d, entry.v, it->second);
    }
  }
  return out;
}

}  // namespace

E8QSeries F_KM_series(long g, long ell, long trunc, long norm_bound) {
  if (ell <= 0) throw std::domain_error("F_KM_series: ell must be positive");
  if (trunc <= 0) throw TruncationError("F_KM_series: empty window (qmax)");
  E8QSeries direct = f_km_direct(g, ell, trunc, norm_bound);
  if (ell == 1) {
    // product path: 8 Theta_E8 * sum_n omega_g(n) q^n
    auto table = cached_omega(g, trunc - 1);
    QSeries w(1, trunc);
    for (long n = 0; n < trunc; ++n) w.set(n, table->omega(g, n));
    E8QSeries theta = theta_E8(trunc);
    // restrict theta to the requested norm window before multiplying
    E8QSeries theta_win(theta.trunc(), norm_bound);
    for (const auto& [e, slot] : theta.coeffs())
      for (const auto& [v, c] : slot)
        if (e8_norm(v) <= norm_bound) theta_win.set(e, v, c);
    E8QSeries prod = e8q_scalar_mul(rat(8), e8q_mul_qseries(theta_win, w));
    if (!e8q_agree(prod, direct))
      throw std::logic_error("F_KM_series: product path and odd-divisor path disagree");
    return direct;
  }
  E8QSeries base = f_km_direct(g, 1, ell * trunc, norm_bound);
  E8QSeries lifted = hecke_V(base, ell, 2 * g - 2);
  if (!e8q_agree(lifted, direct))
    throw std::logic_error("F_KM_series: Hecke lift and odd-divisor path disagree");
  return direct;
}

QSeries vw_rank_series(long r, long qtrunc) {
  if (r <= 0) throw std::domain_error("vw_rank_series: rank must be positive");
  QSeries out(1, qtrunc);
  for (long m = -r; m < qtrunc; ++m) {
    if ((m + r) % 2 != 0) continue;
    long n = -(m + r) / 2;
    Rational v = VW_closed(MukaiVector{r, CurveClass{}, n});
    if (!is_zero(v)) out.set(m, v);
  }
  return out;
}

}  // namespace enriques
