#include "enriques/plaurent.hpp"

#include <sstream>

namespace enriques {

PLaurent PLaurent::constant(const Rational& c) { return monomial(c, 0); }

PLaurent PLaurent::monomial(const Rational& c, long e) {
  PLaurent r;
  r.set(e, c);
  return r;
}

PLaurent PLaurent::symmetric_pair(const Rational& c, long e) {
  PLaurent r;
  r.set(e, c);
  if (e != 0) r.set(-e, c);
  return r;
}

Rational PLaurent::coeff(long e) const {
  auto it = coeffs_.find(e);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void PLaurent::set(long e, const Rational& c) {
  if (is_zero(c))
    coeffs_.erase(e);
  else
    coeffs_[e] = c;
}

void PLaurent::add_to(long e, const Rational& c) { set(e, coeff(e) + c); }

bool PLaurent::is_symmetric() const {
  for (const auto& [e, c] : coeffs_)
    if (coeff(-e) != c) return false;
  return true;
}

PLaurent PLaurent::scale_p(long k) const {
  PLaurent r;
  for (const auto& [e, c] : coeffs_) r.set(e * k, c);
  return r;
}

PLaurent pl_add(const PLaurent& a, const PLaurent& b) {
  PLaurent r = a;
  for (const auto& [e, c] : b.coeffs()) r.add_to(e, c);
  return r;
}

PLaurent pl_neg(const PLaurent& a) {
  PLaurent r;
  for (const auto& [e, c] : a.coeffs()) r.set(e, -c);
  return r;
}

PLaurent pl_sub(const PLaurent& a, const PLaurent& b) { return pl_add(a, pl_neg(b)); }

PLaurent pl_mul(const PLaurent& a, const PLaurent& b) {
  PLaurent r;
  for (const auto& [ea, ca] : a.coeffs())
    for (const auto& [eb, cb] : b.coeffs()) r.add_to(ea + eb, ca * cb);
  return r;
}

PLaurent pl_scalar_mul(const Rational& c, const PLaurent& a) {
  PLaurent r;
  if (is_zero(c)) return r;
  for (const auto& [e, v] : a.coeffs()) r.set(e, c * v);
  return r;
}

PLaurent pl_div_exact(const PLaurent& num, const PLaurent& den) {
  if (den.is_zero()) throw std::domain_error("pl_div_exact: division by zero");
  if (num.is_zero()) return PLaurent();
  // Shift both to ordinary polynomials and long-divide from the top.
  PLaurent rem = num;
  long dtop = den.max_exp();
  Rational dlead = den.coeff(dtop);
  PLaurent quot;
  while (!rem.is_zero() && rem.max_exp() - rem.min_exp() >= den.max_exp() - den.min_exp()) {
    long shift = rem.max_exp() - dtop;
    Rational f = rem.coeff(rem.max_exp()) / dlead;
    quot.add_to(shift, f);
    for (const auto& [e, c] : den.coeffs()) rem.add_to(e + shift, -f * c);
  }
  if (!rem.is_zero()) throw std::domain_error("pl_div_exact: nonzero remainder");
  return quot;
}

Rational pl_eval_one(const PLaurent& a) {
  Rational s(0);
  for (const auto& [e, c] : a.coeffs()) s += c;
  return s;
}

std::string pl_to_string(const PLaurent& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : a.coeffs()) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.get_str() << ")";
    if (e != 0) os << "p^" << e;
  }
  return os.str();
}

}  // namespace enriques
