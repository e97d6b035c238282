#include "enriques/modular.hpp"

#include <mutex>
#include <sstream>

namespace enriques {

namespace {
std::mutex g_bernoulli_mutex;
std::vector<Rational> g_bernoulli;  // grown monotonically under the mutex

Rational binom(long n, long k) {
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(b);
}
}  // namespace

Rational bernoulli(long k) {
  if (k < 0) throw std::domain_error("bernoulli: negative index");
  std::lock_guard<std::mutex> lock(g_bernoulli_mutex);
  if (g_bernoulli.empty()) g_bernoulli.push_back(rat(1));
  while (static_cast<long>(g_bernoulli.size()) <= k) {
    long m = static_cast<long>(g_bernoulli.size());
    // sum_{j=0}^{m} C(m+1, j) B_j = 0
    Rational s(0);
    for (long j = 0; j < m; ++j) s += binom(m + 1, j) * g_bernoulli[j];
    g_bernoulli.push_back(-s / binom(m + 1, m));
  }
  return g_bernoulli[k];
}

QSeries eisenstein_G(long k, long qtrunc) {
  if (k < 2) throw std::domain_error("eisenstein_G: k >= 2 required");
  if (k % 2 == 1) return QSeries::zero(qtrunc);
  QSeries g(1, qtrunc);
  g.set(0, -bernoulli(k) / rat(2 * k));
  // sigma_{k-1} by direct divisor scatter
  std::vector<Rational> sig(static_cast<size_t>(std::max(qtrunc, 0L)), Rational(0));
  for (long d = 1; d < qtrunc; ++d) {
    Rational dk = rational_pow(d, k - 1);
    for (long n = d; n < qtrunc; n += d) sig[static_cast<size_t>(n)] += dk;
  }
  for (long n = 1; n < qtrunc; ++n) g.set(n, sig[static_cast<size_t>(n)]);
  return g;
}

QSeries euler_product(long qtrunc) {
  QSeries p = QSeries::one(qtrunc);
  for (long n = 1; n < qtrunc; ++n) {
    QSeries f = QSeries::one(qtrunc);
    f.set(n, rat(-1));
    p = qs_mul(p, f);
  }
  return p;
}

QSeries eta_pow(long e, long scale, long qtrunc) {
  if (scale <= 0) throw std::domain_error("eta_pow: scale must be positive");
  long target = 24 * qtrunc;           // scaled units (denominator 24)
  long offset = e * scale;             // q^{e*scale/24} prefactor
  long ptrunc = target - offset;       // window needed from the product part
  if (ptrunc <= 0) return QSeries::zero(target, 24).normalized();
  // prod (1 - q^{scale n})^e on the 1/24 grid
  long nmax = (ptrunc + 24 * scale - 1) / (24 * scale);
  QSeries p(24, ptrunc);
  p.set(0, rat(1));
  for (long n = 1; n <= nmax; ++n) {
    QSeries f(24, ptrunc);
    f.set(0, rat(1));
    f.set(24 * scale * n, rat(-1));
    p = qs_mul(p, f);
  }
  p = qs_pow(p, e < 0 ? -1 : 1);
  QSeries acc = p;
  long m = e < 0 ? -e : e;
  for (long i = 1; i < m; ++i) acc = qs_mul(acc, p);
  acc = acc.with_exp_denom(24);
  QSeries r(24, std::min(target, acc.trunc() + offset));
  for (const auto& [exp, c] : acc.coeffs()) r.set(exp + offset, c);
  return r.normalized();
}

QSeries eta(long qtrunc) { return eta_pow(1, 1, qtrunc); }
QSeries delta(long qtrunc) { return eta_pow(24, 1, qtrunc); }

QSeries F2(long qtrunc) {
  QSeries f = qs_sub(eisenstein_G(2, qtrunc), qs_scalar_mul(rat(2), qs_scale_q(eisenstein_G(2, (qtrunc + 1) / 2), 2)));
  f = f.truncated(qtrunc);
  // odd-divisor form
  QSeries g(1, qtrunc);
  g.set(0, rat(1, 24));
  for (long d = 1; d < qtrunc; d += 2)
    for (long n = d; n < qtrunc; n += d) g.set(n, g.coeff(n) + rat(d));
  if (!qs_agree(f, g))
    throw std::logic_error("F2: Eisenstein combination and odd-divisor sum disagree");
  return g;
}

QSeries cusp_quotient(long qtrunc) {
  return qs_mul(eta_pow(16, 2, qtrunc), eta_pow(-8, 1, qtrunc));
}

// ---------------------------------------------------------------------------

std::string ring_tag_name(RingTag t) {
  switch (t) {
    case RingTag::SL2Mod: return "SL2-mod";
    case RingTag::SL2QMod: return "SL2-qmod";
    case RingTag::G02Mod: return "Gamma0(2)-mod";
    case RingTag::G02QMod: return "Gamma0(2)-qmod";
  }
  return "?";
}

RingTag ring_tag_from_name(const std::string& s) {
  if (s == "SL2-mod") return RingTag::SL2Mod;
  if (s == "SL2-qmod") return RingTag::SL2QMod;
  if (s == "Gamma0(2)-mod") return RingTag::G02Mod;
  if (s == "Gamma0(2)-qmod") return RingTag::G02QMod;
  throw std::invalid_argument("unknown ring tag: " + s);
}

bool monomial_in_ring(const Monomial& m, RingTag tag) {
  bool quasi = (tag == RingTag::SL2QMod || tag == RingTag::G02QMod);
  bool gamma02 = (tag == RingTag::G02Mod || tag == RingTag::G02QMod);
  if (!quasi && m[0] != 0) return false;
  if (gamma02 && m[3] != 0) return false;
  if (!gamma02 && m[1] != 0) return false;
  return true;
}

RingElement re_add(const RingElement& a, const RingElement& b) {
  if (a.tag != b.tag || (!a.is_zero() && !b.is_zero() && a.weight != b.weight))
    throw std::domain_error("ring element addition: tag/weight mismatch");
  RingElement r = a;
  r.weight = a.is_zero() ? b.weight : a.weight;
  for (const auto& [m, c] : b.terms) {
    Rational v = c;
    auto it = r.terms.find(m);
    if (it != r.terms.end()) v += it->second;
    if (is_zero(v))
      r.terms.erase(m);
    else
      r.terms[m] = v;
  }
  return r;
}

RingElement re_scalar_mul(const Rational& c, const RingElement& a) {
  RingElement r{a.tag, a.weight, {}};
  if (is_zero(c)) return r;
  for (const auto& [m, v] : a.terms) r.terms[m] = c * v;
  return r;
}

RingElement re_neg(const RingElement& a) { return re_scalar_mul(rat(-1), a); }

std::string re_to_string(const RingElement& a) {
  static const char* names[4] = {"G2", "F2", "G4", "G6"};
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : a.terms) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.get_str() << ")";
    for (int i = 0; i < 4; ++i) {
      if (m[i] == 0) continue;
      os << "*" << names[i];
      if (m[i] > 1) os << "^" << m[i];
    }
  }
  return os.str();
}

std::vector<Monomial> basis_monomials(RingTag tag, long weight) {
  std::vector<Monomial> out;
  if (weight < 0) return out;
  for (int a = 0; 2 * a <= weight; ++a)
    for (int b = 0; 2 * a + 2 * b <= weight; ++b)
      for (int c = 0; 2 * a + 2 * b + 4 * c <= weight; ++c) {
        long rest = weight - 2 * a - 2 * b - 4 * c;
        if (rest % 6 != 0) continue;
        Monomial m{a, b, c, static_cast<int>(rest / 6)};
        if (monomial_in_ring(m, tag)) out.push_back(m);
      }
  return out;
}

namespace {
QSeries generator_series(int i, long qtrunc) {
  switch (i) {
    case 0: return eisenstein_G(2, qtrunc);
    case 1: return F2(qtrunc);
    case 2: return eisenstein_G(4, qtrunc);
    default: return eisenstein_G(6, qtrunc);
  }
}

QSeries monomial_series(const Monomial& m, long qtrunc) {
  QSeries r = QSeries::one(qtrunc);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < m[i]; ++j) r = qs_mul(r, generator_series(i, qtrunc));
  return r;
}
}  // namespace

QSeries evaluate(const RingElement& e, long qtrunc) {
  QSeries r = QSeries::zero(qtrunc);
  for (const auto& [m, c] : e.terms)
    r = qs_add(r, qs_scalar_mul(c, monomial_series(m, qtrunc)));
  return r;
}

RingElement formal_dG2(const RingElement& e) {
  if (e.tag == RingTag::SL2Mod || e.tag == RingTag::G02Mod)
    throw std::domain_error("formal_dG2: modular-tagged input has no G2 dependence");
  RingElement r{e.tag, e.weight - 2, {}};
  for (const auto& [m, c] : e.terms) {
    if (m[0] == 0) continue;
    Monomial d = m;
    d[0] -= 1;
    r.terms[d] = c * rat(m[0]);
  }
  return r;
}

std::optional<std::vector<Rational>> solve_exact(Matrix a, std::vector<Rational> b,
                                                 long* residual_count, long* first_bad_row) {
  size_t rows = a.size();
  size_t cols = rows == 0 ? 0 : a[0].size();
  std::vector<size_t> pivot_col_of_row;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t pr = r;
    while (pr < rows && is_zero(a[pr][c])) ++pr;
    if (pr == rows) continue;
    std::swap(a[pr], a[r]);
    std::swap(b[pr], b[r]);
    Rational inv = Rational(1) / a[r][c];
    for (size_t j = c; j < cols; ++j) a[r][j] *= inv;
    b[r] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || is_zero(a[i][c])) continue;
      Rational f = a[i][c];
      for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    pivot_col_of_row.push_back(c);
    ++r;
  }
  long bad = 0;
  long first_bad = -1;
  for (size_t i = r; i < rows; ++i) {
    if (!is_zero(b[i])) {
      ++bad;
      if (first_bad < 0) first_bad = static_cast<long>(i);
    }
  }
  if (residual_count) *residual_count = bad;
  if (first_bad_row) *first_bad_row = first_bad;
  if (bad > 0) return std::nullopt;
  if (r < cols) throw std::domain_error("solve_exact: solution not unique");
  std::vector<Rational> x(cols, Rational(0));
  for (size_t i = 0; i < r; ++i) x[pivot_col_of_row[i]] = b[i];
  return x;
}

long nullspace_dimension(Matrix a) {
  size_t rows = a.size();
  size_t cols = rows == 0 ? 0 : a[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t pr = r;
    while (pr < rows && is_zero(a[pr][c])) ++pr;
    if (pr == rows) continue;
    std::swap(a[pr], a[r]);
    Rational inv = Rational(1) / a[r][c];
    for (size_t j = c; j < cols; ++j) a[r][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || is_zero(a[i][c])) continue;
      Rational f = a[i][c];
      for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return static_cast<long>(cols - r);
}

RecognizeResult recognize(const QSeries& f0, long weight, RingTag tag, long max_order) {
  QSeries f = f0.normalized();
  if (f.exp_denom() != 1)
    throw std::domain_error("recognize: input must have integer q-exponents");
  auto basis = basis_monomials(tag, weight);
  long rows = max_order + 1;
  if (f.trunc() <= max_order)
    throw TruncationError("recognize: underdetermined (series truncation below max_order)");
  if (rows < static_cast<long>(basis.size()) + 5)
    throw TruncationError("recognize: underdetermined (need >= 5 surplus equations; raise max_order)");

  std::vector<QSeries> cols;
  cols.reserve(basis.size());
  for (const auto& m : basis) cols.push_back(monomial_series(m, max_order + 1));

  Matrix a(static_cast<size_t>(rows), std::vector<Rational>(basis.size(), Rational(0)));
  std::vector<Rational> b(static_cast<size_t>(rows), Rational(0));
  for (long n = 0; n <= max_order; ++n) {
    for (size_t j = 0; j < basis.size(); ++j) a[static_cast<size_t>(n)][j] = cols[j].coeff(n);
    b[static_cast<size_t>(n)] = f.coeff(n);
  }
  RecognizeResult res;
  auto x = solve_exact(std::move(a), std::move(b), &res.residual_count, &res.first_bad_exponent);
  if (!x) return res;
  RingElement e{tag, weight, {}};
  for (size_t j = 0; j < basis.size(); ++j)
    if (!is_zero((*x)[j])) e.terms[basis[j]] = (*x)[j];
  res.element = e;
  return res;
}

bool vanishing_lemma_check(long m, long weight, long order) {
  if (m < 2) throw std::domain_error("vanishing_lemma_check: m >= 2 required");
  auto basis = basis_monomials(RingTag::G02QMod, weight);
  std::vector<long> constrained;  // exponents n <= order with m not dividing n
  for (long n = 0; n <= order; ++n)
    if (n % m != 0) constrained.push_back(n);
  if (static_cast<long>(constrained.size()) < static_cast<long>(basis.size()) + 5)
    throw TruncationError("vanishing_lemma_check: inconclusive (raise order)");
  std::vector<QSeries> cols;
  for (const auto& mon : basis) cols.push_back(monomial_series(mon, order + 1));
  Matrix a(constrained.size(), std::vector<Rational>(basis.size(), Rational(0)));
  for (size_t i = 0; i < constrained.size(); ++i)
    for (size_t j = 0; j < basis.size(); ++j) a[i][j] = cols[j].coeff(constrained[i]);
  long dim = nullspace_dimension(std::move(a));
  long expected = (weight == 0) ? 1 : 0;  // constants survive in weight 0
  return dim == expected;
}

}  // namespace enriques
