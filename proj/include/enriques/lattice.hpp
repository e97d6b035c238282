#pragma once

#include <string>
#include <vector>

#include "enriques/e8.hpp"

namespace enriques {

// beta = k s + d f + alpha in H^2(Y) = U + E8(-1); s.s = f.f = 0, s.f = 1,
// and the E8 summand pairs by -Q_E8.
struct CurveClass {
  long k = 0;
  long d = 0;
  E8Vec alpha = e8_zero();

  long square() const { return 2 * k * d - e8_norm(alpha); }
  long divisibility() const;
  bool is_zero() const { return k == 0 && d == 0 && e8_is_zero(alpha); }
  bool is_effective() const { return k >= 0 && d >= 0 && !(k == 0 && d == 0); }
  bool operator==(const CurveClass&) const = default;
  auto operator<=>(const CurveClass&) const = default;
};

inline CurveClass slice_class(long k, long d) { return CurveClass{k, d, e8_zero()}; }
CurveClass cc_add(const CurveClass& a, const CurveClass& b);
CurveClass cc_sub(const CurveClass& a, const CurveClass& b);
long cc_pair(const CurveClass& a, const CurveClass& b);
bool cc_divide(const CurveClass& a, long k, CurveClass* out);
std::string cc_to_string(const CurveClass& b);

// v = (r, beta, n) with the Euler pairing v.v = beta^2 - r^2 - 2rn.
struct MukaiVector {
  long r = 0;
  CurveClass beta;
  long n = 0;

  long square() const { return beta.square() - r * r - 2 * r * n; }
  bool is_zero() const { return r == 0 && beta.is_zero() && n == 0; }
  bool operator==(const MukaiVector&) const = default;
  auto operator<=>(const MukaiVector&) const = default;
};

std::string mv_to_string(const MukaiVector& v);

enum class MukaiType { Odd, Even };
inline const char* type_name(MukaiType t) { return t == MukaiType::Odd ? "odd" : "even"; }

struct InvariantTriple {
  long square = 0;
  long divisibility = 0;  // gcd(r, div(beta), 2n)
  MukaiType type = MukaiType::Odd;
  bool operator==(const InvariantTriple&) const = default;
  auto operator<=>(const InvariantTriple&) const = default;
};

// square = beta^2 - r^2 - 2rn, m = gcd(r, div beta, 2n), type even iff
// r/m and (2n+r)/m are both even. Errors on v = 0.
InvariantTriple mukai_invariants(const MukaiVector& v);

// Canonical orbit representative realizing the triple with alpha_d = s + d f:
//   even:                     (0, m alpha_d, 0)
//   odd, square/m^2 odd:      (m, m alpha_d, 0)
//   odd, square/m^2 even:     m = 2m' and (0, 2m' alpha_d, m')
// Throws std::domain_error("no such orbit") on unrealizable triples (in
// particular odd type with even square/m^2 forces m even).
MukaiVector orbit_representative(const InvariantTriple& t);

// ---------------------------------------------------------------------------
// Integer lattices with explicit Gram matrices, for reflection tests.

struct IntLattice {
  std::string name;
  std::vector<std::vector<long>> gram;
  long dim() const { return static_cast<long>(gram.size()); }
  long pair(const std::vector<long>& x, const std::vector<long>& y) const;
  long square(const std::vector<long>& x) const { return pair(x, x); }
};

const IntLattice& lattice_h2();            // U + E8(-1), rank 10
const IntLattice& lattice_m();             // U + U(2) + E8(-2), rank 12
// The Mukai-invariant model: v = (r, (k,d,alpha), n) embeds into lattice_m()
// as (r, -(2n+r), k, d, alpha), so that square doubles, the divisibility is
// gcd(r, div beta, 2n), and the U-coordinate parity gives the type.
std::vector<long> mukai_embed(const MukaiVector& v);
long m_divisibility(const std::vector<long>& w);
MukaiType m_type(const std::vector<long>& w);  // type of w/div(w)

// x + (x.delta) delta for delta of square -2 in the given lattice; an
// integral isometry. Errors on wrong norm.
std::vector<long> reflect(const IntLattice& lat, const std::vector<long>& x,
                          const std::vector<long>& delta);

// ---------------------------------------------------------------------------
// The H^*(Y) model on the basis (1, s, f, a_1..a_8, pt) and the nilpotent
// operator t_lambda(x) = (f.x) lambda - (lambda.x) f for lambda in E8(-1).

struct HStarVec {
  long unit = 0;  // coefficient of 1
  long s = 0;
  long f = 0;
  E8Vec alpha = e8_zero();
  long pt = 0;
  bool operator==(const HStarVec&) const = default;
};

HStarVec t_lambda(const E8Vec& lambda, const HStarVec& x);

// exp(t_lambda) on H^2: k s + d f + a  ->  k s + (d + a^T Q lambda + k lambda^T Q lambda / 2) f
//                                          + a + k lambda.
CurveClass exp_t_lambda(const E8Vec& lambda, const CurveClass& b);

// Weight eigenvalues: +1 for s, pt; 0 for E8 classes; -1 for 1, f.
// The vector overload errors on mixed-eigenvalue input.
enum class HStarBasis { One, S, F, Alpha, Pt };
int wt(HStarBasis b);
int wt(const HStarVec& x);

}  // namespace enriques
