#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rca/matrix.hpp"

namespace rca {

// Sparse multivariate polynomial over the cyclotomic field. Terms are held in
// lexicographic order on exponent vectors; zero coefficients never stored.
class Poly {
 public:
  explicit Poly(long nvars = 0) : nvars_(nvars) {}
  static Poly constant(long nvars, const Cyclotomic& c);
  static Poly variable(long nvars, long i);
  static Poly monomial(std::vector<int> exponents, const Cyclotomic& c);
  // Degree-one form sum_i coeffs[i] x_i.
  static Poly linear_form(const CycVector& coeffs);

  long nvars() const { return nvars_; }
  bool is_zero() const { return t_.empty(); }
  // -1 for the zero polynomial.
  long total_degree() const;
  const std::map<std::vector<int>, Cyclotomic>& terms() const { return t_; }
  Cyclotomic coefficient(const std::vector<int>& exponents) const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(const Cyclotomic& c) const;
  bool operator==(const Poly& o) const { return nvars_ == o.nvars_ && t_ == o.t_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly derivative(long i) const;
  // Replace x_i by images[i].
  Poly substituted(const std::vector<Poly>& images) const;
  // g with g(x) = f(A x).
  Poly composed_with_matrix(const CycMatrix& a) const;
  Cyclotomic eval(const CycVector& point) const;

  // Exact quotient; throws std::domain_error when the division has remainder.
  Poly divide_exact(const Poly& divisor) const;
  std::optional<Poly> try_divide(const Poly& divisor) const;

  // Deterministic rendering, leading term first: "x0^2 + 2*x0*x1 - 1/2".
  std::string str() const;

 private:
  void insert_term(std::vector<int> e, const Cyclotomic& c);

  long nvars_;
  std::map<std::vector<int>, Cyclotomic> t_;
};

}  // namespace rca
