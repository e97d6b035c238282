#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace enriques {

// Exact coefficient field. mpq_class keeps values canonical (reduced,
// positive denominator) under arithmetic; constructors from raw num/den
// go through rat() which canonicalizes.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

// Canonical GMP string: "num" or "num/den", den > 1.
inline std::string rational_to_string(const Rational& r) { return r.get_str(); }

Rational rational_from_string(const std::string& s);

// base^e for integer e of either sign; base > 0.
Rational rational_pow(long base, long e);

// Truncation shortfalls carry the name of the limiting bound so the CLI
// can report it (exit code 3).
class TruncationError : public std::runtime_error {
 public:
  explicit TruncationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace enriques
