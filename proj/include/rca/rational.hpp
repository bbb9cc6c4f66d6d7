#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace rca {

// Exact arbitrary-precision scalars. mpq_class keeps the canonical form we
// rely on everywhere: gcd(|num|, den) = 1, den > 0, zero is 0/1.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Accepts "a" and "a/b" with optional sign.
inline Rational rat_from_string(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0 || sgn(q.get_den()) == 0)
    throw std::invalid_argument("malformed rational: " + s);
  q.canonicalize();
  return q;
}

inline Integer rat_floor(const Rational& a) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_num().get_mpz_t(), a.get_den().get_mpz_t());
  return q;
}

inline bool rat_is_integer(const Rational& a) { return a.get_den() == 1; }

inline std::string rat_str(const Rational& a) { return a.get_str(); }

inline double rat_double(const Rational& a) { return a.get_d(); }

inline std::size_t rat_hash(const Rational& a) {
  std::size_t h = std::hash<std::string>{}(a.get_str());
  return h;
}

inline std::size_t hash_mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace rca
