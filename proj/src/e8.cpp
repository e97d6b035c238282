#include "enriques/e8.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

namespace enriques {

long e8_norm(const E8Vec& v) { return e8_pair(v, v); }

long e8_pair(const E8Vec& a, const E8Vec& b) {
  long s = 0;
  for (int i = 0; i < 8; ++i) {
    if (a[i] == 0) continue;
    long row = 0;
    for (int j = 0; j < 8; ++j) row += static_cast<long>(kQE8[i][j]) * b[j];
    s += a[i] * row;
  }
  return s;
}

long e8_divisibility(const E8Vec& v) {
  long g = 0;
  for (int i = 0; i < 8; ++i) g = std::gcd(g, static_cast<long>(v[i] < 0 ? -v[i] : v[i]));
  return g;
}

E8Vec e8_add(const E8Vec& a, const E8Vec& b) {
  E8Vec r;
  for (int i = 0; i < 8; ++i) r[i] = a[i] + b[i];
  return r;
}

E8Vec e8_sub(const E8Vec& a, const E8Vec& b) {
  E8Vec r;
  for (int i = 0; i < 8; ++i) r[i] = a[i] - b[i];
  return r;
}

E8Vec e8_scale(const E8Vec& a, long k) {
  E8Vec r;
  for (int i = 0; i < 8; ++i) r[i] = static_cast<int>(a[i] * k);
  return r;
}

bool e8_is_zero(const E8Vec& v) {
  return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
}

bool e8_divide(const E8Vec& v, long k, E8Vec* out) {
  for (int i = 0; i < 8; ++i)
    if (v[i] % k != 0) return false;
  for (int i = 0; i < 8; ++i) (*out)[i] = static_cast<int>(v[i] / k);
  return true;
}

// Fincke-Pohst shape: write x^T G x = sum_i q_ii (x_i + sum_{j>i} q_ij x_j)^2
// via the rational LDL decomposition, then bound coordinates from the last
// one down.
std::vector<std::vector<long>> lattice_enumerate(const std::vector<std::vector<long>>& gram,
                                                 long max_norm) {
  const size_t n = gram.size();
  for (const auto& row : gram)
    if (row.size() != n) throw std::domain_error("lattice_enumerate: gram not square");
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (gram[i][j] != gram[j][i]) throw std::domain_error("lattice_enumerate: gram not symmetric");
  if (max_norm < 0) return {};

  std::vector<std::vector<Rational>> q(n, std::vector<Rational>(n, Rational(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) q[i][j] = rat(gram[i][j]);
  for (size_t i = 0; i < n; ++i) {
    if (sgn(q[i][i]) <= 0) throw std::domain_error("lattice_enumerate: gram not positive definite");
    for (size_t j = i + 1; j < n; ++j) {
      q[j][i] = q[i][j];  // stash the pre-division value for the Schur update
      q[i][j] /= q[i][i];
    }
    for (size_t k = i + 1; k < n; ++k)
      for (size_t l = k; l < n; ++l) q[k][l] -= q[k][i] * q[i][l];
  }

  std::vector<std::vector<long>> out;
  std::vector<long> x(n, 0);
  // Recurse from coordinate n-1 down to 0 with remaining budget.
  auto rec = [&](auto&& self, size_t level, const Rational& budget) -> void {
    size_t i = level - 1;
    Rational center(0);
    for (size_t j = i + 1; j < n; ++j) center += q[i][j] * rat(x[j]);
    // q_ii (x_i + center)^2 <= budget; scan integers outward from
    // floor(-center), computed exactly.
    Rational mc = -center;
    Integer x0z;
    mpz_fdiv_q(x0z.get_mpz_t(), mc.get_num_mpz_t(), mc.get_den_mpz_t());
    long x0 = static_cast<long>(x0z.get_si());
    auto fits = [&](long xi) {
      Rational t = rat(xi) + center;
      return q[i][i] * t * t <= budget;
    };
    // The feasible xi form an interval containing (-center - s, -center + s);
    // x0 or x0 + 1 is in it whenever it contains an integer at all.
    long lo, hi;
    if (fits(x0)) {
      lo = x0;
      while (fits(lo - 1)) --lo;
      hi = x0;
      while (fits(hi + 1)) ++hi;
    } else if (fits(x0 + 1)) {
      lo = x0 + 1;
      hi = x0 + 1;
      while (fits(hi + 1)) ++hi;
    } else {
      return;  // empty slab
    }
    for (long xi = lo; xi <= hi; ++xi) {
      x[i] = xi;
      Rational t = rat(xi) + center;
      Rational rem = budget - q[i][i] * t * t;
      if (sgn(rem) < 0) continue;
      if (i == 0)
        out.push_back(x);
      else
        self(self, i, rem);
    }
    x[i] = 0;
  };
  if (n == 0) return {{}};
  rec(rec, n, rat(max_norm));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {
std::mutex g_ball_mutex;
std::map<long, std::shared_ptr<const std::vector<E8Vec>>> g_balls;
std::map<long, std::shared_ptr<const std::vector<E8BallEntry>>> g_ball_entries;
}  // namespace

const std::vector<E8Vec>& e8_ball(long max_norm) {
  std::lock_guard<std::mutex> lock(g_ball_mutex);
  auto it = g_balls.find(max_norm);
  if (it == g_balls.end()) {
    std::vector<std::vector<long>> gram(8, std::vector<long>(8));
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j) gram[i][j] = kQE8[i][j];
    auto raw = lattice_enumerate(gram, max_norm);
    auto ball = std::make_shared<std::vector<E8Vec>>();
    ball->reserve(raw.size());
    for (const auto& v : raw) {
      E8Vec w;
      for (int i = 0; i < 8; ++i) w[i] = static_cast<int>(v[i]);
      ball->push_back(w);
    }
    it = g_balls.emplace(max_norm, std::move(ball)).first;
  }
  return *it->second;
}

const std::vector<E8BallEntry>& e8_ball_entries(long max_norm) {
  const std::vector<E8Vec>& ball = e8_ball(max_norm);
  std::lock_guard<std::mutex> lock(g_ball_mutex);
  auto it = g_ball_entries.find(max_norm);
  if (it == g_ball_entries.end()) {
    auto entries = std::make_shared<std::vector<E8BallEntry>>();
    entries->reserve(ball.size());
    for (const auto& v : ball)
      entries->push_back(E8BallEntry{v, e8_norm(v), e8_divisibility(v)});
    it = g_ball_entries.emplace(max_norm, std::move(entries)).first;
  }
  return *it->second;
}

Rational E8QSeries::coeff(long exp, const E8Vec& v) const {
  if (exp >= trunc_ || e8_norm(v) > norm_bound_)
    throw TruncationError("E8 coefficient request outside window (trunc/norm_bound)");
  auto it = coeffs_.find(exp);
  if (it == coeffs_.end()) return Rational(0);
  auto jt = it->second.find(v);
  return jt == it->second.end() ? Rational(0) : jt->second;
}

void E8QSeries::set(long exp, const E8Vec& v, const Rational& c) {
  if (exp >= trunc_) return;
  if (is_zero(c)) {
    auto it = coeffs_.find(exp);
    if (it != coeffs_.end()) {
      it->second.erase(v);
      if (it->second.empty()) coeffs_.erase(it);
    }
  } else {
    coeffs_[exp][v] = c;
  }
}

void E8QSeries::add_to(long exp, const E8Vec& v, const Rational& c) {
  if (exp >= trunc_) return;
  auto& slot = coeffs_[exp];
  auto it = slot.find(v);
  Rational nv = (it == slot.end() ? Rational(0) : it->second) + c;
  if (is_zero(nv)) {
    if (it != slot.end()) slot.erase(it);
    if (slot.empty()) coeffs_.erase(exp);
  } else {
    slot[v] = nv;
  }
}

E8QSeries theta_E8(long trunc) {
  E8QSeries r(trunc, 2 * trunc);
  for (const auto& v : e8_ball(2 * trunc)) {
    long norm = e8_norm(v);
    if (norm / 2 < trunc) r.set(norm / 2, v, rat(1));
  }
  return r;
}

E8QSeries e8q_mul_qseries(const E8QSeries& a, const QSeries& b0) {
  QSeries b = b0.normalized();
  if (b.exp_denom() != 1)
    throw std::domain_error("e8q_mul_qseries: q-side factor must have integer exponents");
  long t = std::min(a.trunc() + b.lowest(), b.trunc() + (a.coeffs().empty() ? a.trunc() : a.coeffs().begin()->first));
  E8QSeries r(t, a.norm_bound());
  for (const auto& [ea, slot] : a.coeffs())
    for (const auto& [eb, cb] : b.coeffs()) {
      long e = ea + eb;
      if (e >= t) break;
      for (const auto& [v, ca] : slot) r.add_to(e, v, ca * cb);
    }
  return r;
}

E8QSeries e8q_scalar_mul(const Rational& c, const E8QSeries& a) {
  E8QSeries r(a.trunc(), a.norm_bound());
  if (is_zero(c)) return r;
  for (const auto& [e, slot] : a.coeffs())
    for (const auto& [v, ca] : slot) r.set(e, v, c * ca);
  return r;
}

E8QSeries e8q_add(const E8QSeries& a, const E8QSeries& b) {
  E8QSeries r(std::min(a.trunc(), b.trunc()), std::min(a.norm_bound(), b.norm_bound()));
  for (const auto& [e, slot] : a.coeffs()) {
    if (e >= r.trunc()) break;
    for (const auto& [v, c] : slot)
      if (e8_norm(v) <= r.norm_bound()) r.add_to(e, v, c);
  }
  for (const auto& [e, slot] : b.coeffs()) {
    if (e >= r.trunc()) break;
    for (const auto& [v, c] : slot)
      if (e8_norm(v) <= r.norm_bound()) r.add_to(e, v, c);
  }
  return r;
}

bool e8q_agree(const E8QSeries& a, const E8QSeries& b) {
  long t = std::min(a.trunc(), b.trunc());
  long nb = std::min(a.norm_bound(), b.norm_bound());
  auto check = [&](const E8QSeries& x, const E8QSeries& y) {
    for (const auto& [e, slot] : x.coeffs()) {
      if (e >= t) break;
      for (const auto& [v, c] : slot) {
        if (e8_norm(v) > nb) continue;
        if (y.coeff(e, v) != c) return false;
      }
    }
    return true;
  };
  return check(a, b) && check(b, a);
}

QSeries e8q_eval_zeta_one(const E8QSeries& a) {
  QSeries r(1, a.trunc());
  for (const auto& [e, slot] : a.coeffs()) {
    Rational s(0);
    for (const auto& [v, c] : slot) s += c;
    r.set(e, s);
  }
  return r;
}

}  // namespace enriques
