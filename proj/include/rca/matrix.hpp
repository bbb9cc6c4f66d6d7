#pragma once

#include <complex>
#include <vector>

#include "rca/cyclotomic.hpp"

namespace rca {

using CycVector = std::vector<Cyclotomic>;

// Dense matrix over the cyclotomic field. Exact arithmetic throughout;
// the one numeric routine is quarantined in numeric_eigenvalues below.
class CycMatrix {
 public:
  CycMatrix() : rows_(0), cols_(0) {}
  CycMatrix(long rows, long cols)
      : rows_(rows), cols_(cols), e_(rows * cols) {}
  static CycMatrix identity(long n);

  long rows() const { return rows_; }
  long cols() const { return cols_; }
  Cyclotomic& at(long i, long j) { return e_[i * cols_ + j]; }
  const Cyclotomic& at(long i, long j) const { return e_[i * cols_ + j]; }

  friend CycMatrix operator+(const CycMatrix& a, const CycMatrix& b);
  friend CycMatrix operator-(const CycMatrix& a, const CycMatrix& b);
  friend CycMatrix operator*(const CycMatrix& a, const CycMatrix& b);
  bool operator==(const CycMatrix& o) const;
  bool operator!=(const CycMatrix& o) const { return !(*this == o); }

  void scale_in_place(const Cyclotomic& s);
  CycVector apply(const CycVector& v) const;
  CycMatrix transpose() const;

  // lcm of entry conductors; promoted() re-represents every entry there.
  long common_conductor() const;
  CycMatrix promoted(long conductor) const;

  // Fraction-free elimination after row-wise denominator clearing.
  Cyclotomic det() const;
  // Right-kernel basis in reduced echelon form (free variable set to 1).
  std::vector<CycVector> kernel() const;
  long rank() const;
  // Monic characteristic polynomial, low degree first, length n+1.
  std::vector<Cyclotomic> charpoly() const;
  CycMatrix inverse() const;

  bool is_zero() const;
  std::size_t hash() const;

 private:
  long rows_, cols_;
  std::vector<Cyclotomic> e_;
};

// Floating eigenvalue approximations via the complex embedding zeta -> e^{2
// pi i/N}. Diagnostic only: callers must label results approximate and never
// base verdicts on them.
std::vector<std::complex<double>> numeric_eigenvalues(const CycMatrix& m);

}  // namespace rca
