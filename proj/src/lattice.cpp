#include "enriques/lattice.hpp"

#include <numeric>
#include <sstream>

namespace enriques {

long CurveClass::divisibility() const {
  long g = std::gcd(std::gcd(k < 0 ? -k : k, d < 0 ? -d : d), e8_divisibility(alpha));
  return g;
}

CurveClass cc_add(const CurveClass& a, const CurveClass& b) {
  return CurveClass{a.k + b.k, a.d + b.d, e8_add(a.alpha, b.alpha)};
}

CurveClass cc_sub(const CurveClass& a, const CurveClass& b) {
  return CurveClass{a.k - b.k, a.d - b.d, e8_sub(a.alpha, b.alpha)};
}

long cc_pair(const CurveClass& a, const CurveClass& b) {
  return a.k * b.d + a.d * b.k - e8_pair(a.alpha, b.alpha);
}

bool cc_divide(const CurveClass& a, long k, CurveClass* out) {
  if (k == 0) return false;
  if (a.k % k != 0 || a.d % k != 0) return false;
  E8Vec w;
  if (!e8_divide(a.alpha, k, &w)) return false;
  *out = CurveClass{a.k / k, a.d / k, w};
  return true;
}

std::string cc_to_string(const CurveClass& b) {
  std::ostringstream os;
  os << b.k << "s+" << b.d << "f";
  if (!e8_is_zero(b.alpha)) {
    os << "+(";
    for (int i = 0; i < 8; ++i) os << (i ? "," : "") << b.alpha[i];
    os << ")";
  }
  return os.str();
}

std::string mv_to_string(const MukaiVector& v) {
  std::ostringstream os;
  os << "(" << v.r << ", " << cc_to_string(v.beta) << ", " << v.n << ")";
  return os.str();
}

InvariantTriple mukai_invariants(const MukaiVector& v) {
  if (v.is_zero()) throw std::domain_error("mukai_invariants: zero vector");
  long m = std::gcd(std::gcd(v.r < 0 ? -v.r : v.r, v.beta.divisibility()),
                    2 * (v.n < 0 ? -v.n : v.n));
  bool even = ((v.r / m) % 2 == 0) && (((2 * v.n + v.r) / m) % 2 == 0);
  return InvariantTriple{v.square(), m, even ? MukaiType::Even : MukaiType::Odd};
}

MukaiVector orbit_representative(const InvariantTriple& t) {
  long m = t.divisibility;
  if (m <= 0) throw std::domain_error("no such orbit: divisibility must be positive");
  if (t.square % (m * m) != 0)
    throw std::domain_error("no such orbit: square not divisible by divisibility^2");
  long s0 = t.square / (m * m);  // square of the primitive part (/2 gives d)
  if (t.type == MukaiType::Even) {
    if (s0 % 2 != 0) throw std::domain_error("no such orbit: even type needs even square/m^2");
    return MukaiVector{0, CurveClass{m, m * (s0 / 2), e8_zero()}, 0};
  }
  if (s0 % 2 != 0) {
    long d = (s0 + 1) / 2;
    return MukaiVector{m, CurveClass{m, m * d, e8_zero()}, 0};
  }
  // odd type with even square/m^2: m must be even
  if (m % 2 != 0) throw std::domain_error("no such orbit: m must be even");
  long mp = m / 2;
  return MukaiVector{0, CurveClass{m, m * (s0 / 2), e8_zero()}, mp};
}

long IntLattice::pair(const std::vector<long>& x, const std::vector<long>& y) const {
  if (static_cast<long>(x.size()) != dim() || static_cast<long>(y.size()) != dim())
    throw std::domain_error("lattice pairing: dimension mismatch");
  long s = 0;
  for (long i = 0; i < dim(); ++i) {
    if (x[static_cast<size_t>(i)] == 0) continue;
    long row = 0;
    for (long j = 0; j < dim(); ++j)
      row += gram[static_cast<size_t>(i)][static_cast<size_t>(j)] * y[static_cast<size_t>(j)];
    s += x[static_cast<size_t>(i)] * row;
  }
  return s;
}

const IntLattice& lattice_h2() {
  static const IntLattice l = [] {
    IntLattice lat;
    lat.name = "H2(Y)";
    lat.gram.assign(10, std::vector<long>(10, 0));
    lat.gram[0][1] = lat.gram[1][0] = 1;  // U: s, f
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j) lat.gram[2 + i][2 + j] = -kQE8[i][j];  // E8(-1)
    return lat;
  }();
  return l;
}

const IntLattice& lattice_m() {
  static const IntLattice l = [] {
    IntLattice lat;
    lat.name = "U+U(2)+E8(-2)";
    lat.gram.assign(12, std::vector<long>(12, 0));
    lat.gram[0][1] = lat.gram[1][0] = 1;  // U
    lat.gram[2][3] = lat.gram[3][2] = 2;  // U(2)
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j) lat.gram[4 + i][4 + j] = -2 * kQE8[i][j];  // E8(-2)
    return lat;
  }();
  return l;
}

std::vector<long> mukai_embed(const MukaiVector& v) {
  std::vector<long> w(12, 0);
  w[0] = v.r;
  w[1] = -(2 * v.n + v.r);
  w[2] = v.beta.k;
  w[3] = v.beta.d;
  for (int i = 0; i < 8; ++i) w[static_cast<size_t>(4 + i)] = v.beta.alpha[i];
  return w;
}

long m_divisibility(const std::vector<long>& w) {
  long g = 0;
  for (long c : w) g = std::gcd(g, c < 0 ? -c : c);
  return g;
}

MukaiType m_type(const std::vector<long>& w) {
  long g = m_divisibility(w);
  if (g == 0) throw std::domain_error("m_type: zero vector");
  long a1 = w[0] / g, b1 = w[1] / g;
  return (a1 % 2 == 0 && b1 % 2 == 0) ? MukaiType::Even : MukaiType::Odd;
}

std::vector<long> reflect(const IntLattice& lat, const std::vector<long>& x,
                          const std::vector<long>& delta) {
  if (lat.square(delta) != -2)
    throw std::domain_error("reflect: delta must have square -2 in " + lat.name);
  long xd = lat.pair(x, delta);
  std::vector<long> r = x;
  for (size_t i = 0; i < r.size(); ++i) r[i] += xd * delta[i];
  return r;
}

HStarVec t_lambda(const E8Vec& lambda, const HStarVec& x) {
  // f.s = 1, f.f = 0, f.alpha = 0; lambda pairs only with the E8 part
  // (by the E8(-1) form). Degree-0 and degree-4 classes are annihilated.
  HStarVec r;
  // (f.x) lambda: only the s-component of x meets f
  r.alpha = e8_scale(lambda, x.s);
  // -(lambda.x) f with lambda.x = -alpha^T Q lambda
  r.f = e8_pair(x.alpha, lambda);
  return r;
}

CurveClass exp_t_lambda(const E8Vec& lambda, const CurveClass& b) {
  long lam_sq = e8_norm(lambda);  // even
  CurveClass r;
  r.k = b.k;
  r.d = b.d + e8_pair(b.alpha, lambda) + b.k * (lam_sq / 2);
  r.alpha = e8_add(b.alpha, e8_scale(lambda, b.k));
  return r;
}

int wt(HStarBasis b) {
  switch (b) {
    case HStarBasis::S:
    case HStarBasis::Pt:
      return 1;
    case HStarBasis::Alpha:
      return 0;
    default:
      return -1;  // 1, f
  }
}

int wt(const HStarVec& x) {
  bool plus = x.s != 0 || x.pt != 0;
  bool zero = !e8_is_zero(x.alpha);
  bool minus = x.unit != 0 || x.f != 0;
  if (plus + zero + minus != 1)
    throw std::domain_error("wt: not a weight eigenvector");
  return plus ? 1 : (zero ? 0 : -1);
}

}  // namespace enriques
