#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "rca/rational.hpp"

namespace rca {

long euler_phi(long n);

// Monic integer coefficients of the n-th cyclotomic polynomial, low degree
// first, length phi(n)+1. Memoized; safe for concurrent callers.
const std::vector<Integer>& cyclotomic_polynomial(long n);

// Element of Q(zeta_N) in the reduced power basis 1, zeta, ..., zeta^{phi(N)-1}
// modulo Phi_N. Rational values always collapse to conductor 1, so a value
// computed from inputs at one common conductor has a unique representation;
// irrational conductors are otherwise never minimized, and equality across
// conductors goes through promotion to the lcm. Immutable after construction.
class Cyclotomic {
 public:
  Cyclotomic() : cond_(1), c_(1, Rational(0)) {}
  explicit Cyclotomic(const Rational& r) : cond_(1), c_(1, r) {}
  // coeffs must have length phi(conductor); taken as already reduced.
  Cyclotomic(long conductor, std::vector<Rational> coeffs);

  static Cyclotomic root_of_unity(long k, long n);
  // Reduces an arbitrary-degree coefficient vector in zeta_n.
  static Cyclotomic from_power_coeffs(long n, std::vector<Rational> raw);

  long conductor() const { return cond_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  // Requires is_rational().
  Rational rational_part() const;

  // The same value viewed in Q(zeta_m); requires cond_ | m. Rational values
  // still come back at conductor 1.
  Cyclotomic promoted(long m) const;

  Cyclotomic operator-() const;
  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b);
  Cyclotomic inverse() const;

  bool operator==(const Cyclotomic& o) const;
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

  // Sum of coefficient absolute values: certified upper bound for |embedding|.
  Rational abs_bound() const;

  // Numeric value at zeta_N = exp(2 pi i k / N); diagnostic only.
  std::complex<double> embed(long k = 1) const;

  std::string str() const;
  // Consistent among values whose irrational parts share a conductor.
  std::size_t hash() const;

 private:
  // Reduces an arbitrary-degree coefficient vector to length phi(n).
  static std::vector<Rational> reduce_mod_phi(long n, std::vector<Rational> raw);
  // Coefficients of this value re-expanded at conductor m (cond_ | m).
  std::vector<Rational> expanded_at(long m) const;

  long cond_;
  std::vector<Rational> c_;
};

inline Cyclotomic cyc(long num, long den = 1) { return Cyclotomic(rat(num, den)); }

}  // namespace rca
