#include "rca/group_algebra.hpp"

#include <stdexcept>

namespace rca {

AlgebraElement algebra_product(const FiniteMatrixGroup& w, const AlgebraElement& a,
                               const AlgebraElement& b) {
  if (static_cast<long>(a.size()) != w.order() ||
      static_cast<long>(b.size()) != w.order())
    throw std::invalid_argument("algebra element has wrong length");
  AlgebraElement out(w.order());
  for (long i = 0; i < w.order(); ++i) {
    if (a[i].is_zero()) continue;
    for (long j = 0; j < w.order(); ++j) {
      if (b[j].is_zero()) continue;
      long k = w.product(i, j);
      out[k] = out[k] + a[i] * b[j];
    }
  }
  return out;
}

bool is_central(const FiniteMatrixGroup& w, const AlgebraElement& a) {
  // Central iff the coefficients are constant on conjugacy classes.
  for (const auto& cls : w.classes())
    for (long i : cls)
      if (a[i] != a[cls[0]]) return false;
  return true;
}

std::vector<AlgebraElement> class_sums(const FiniteMatrixGroup& w) {
  std::vector<AlgebraElement> sums;
  for (const auto& cls : w.classes()) {
    AlgebraElement s(w.order());
    for (long i : cls) s[i] = cyc(1);
    sums.push_back(std::move(s));
  }
  return sums;
}

Cyclotomic rho_c(const ReflectionSet& rs, const ParamC& c) {
  Cyclotomic sum;
  for (std::size_t i = 0; i < rs.data.size(); ++i) {
    Cyclotomic denom = cyc(1) - rs.data[i].eigenvalue;
    sum = sum + cyc(2) * c.value(static_cast<long>(i)) * denom.inverse();
  }
  return sum;
}

AlgebraElement central_z(const FiniteMatrixGroup& w, const ReflectionSet& rs,
                         const ParamC& c) {
  AlgebraElement z(w.order());
  for (std::size_t i = 0; i < rs.data.size(); ++i) {
    Cyclotomic denom = cyc(1) - rs.data[i].eigenvalue;
    Cyclotomic coeff = cyc(2) * c.value(static_cast<long>(i)) *
                       (cyc(1) - denom.inverse());
    long e = rs.data[i].element;
    z[e] = z[e] + coeff;
  }
  return z;
}

AlgebraElement central_z0(const FiniteMatrixGroup& w, const ReflectionSet& rs,
                          const ParamC& c) {
  AlgebraElement z0(w.order());
  for (std::size_t i = 0; i < rs.data.size(); ++i) {
    Cyclotomic denom = cyc(1) - rs.data[i].eigenvalue;
    Cyclotomic coeff = cyc(2) * c.value(static_cast<long>(i)) * denom.inverse();
    long e = rs.data[i].element;
    z0[e] = z0[e] + coeff;
  }
  return z0;
}

CycMatrix center_mult_matrix(const FiniteMatrixGroup& w, const AlgebraElement& z) {
  if (!is_central(w, z))
    throw std::invalid_argument("multiplication matrix needs a central element");
  auto sums = class_sums(w);
  long k = static_cast<long>(sums.size());
  CycMatrix m(k, k);
  for (long i = 0; i < k; ++i) {
    AlgebraElement p = algebra_product(w, z, sums[i]);
    // p is central, so reading one representative per class suffices.
    for (long j = 0; j < k; ++j) m.at(j, i) = p[w.classes()[j][0]];
  }
  return m;
}

std::vector<long> integer_eigen_members(const CycMatrix& m, const Cyclotomic& shift,
                                        bool positive_only) {
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix must be square");
  long n = m.rows();

  // Any eigenvalue is bounded by the max absolute row sum; add the shift.
  Rational bound = shift.abs_bound();
  Rational max_row(0);
  for (long i = 0; i < n; ++i) {
    Rational row(0);
    for (long j = 0; j < n; ++j) row += m.at(i, j).abs_bound();
    if (row > max_row) max_row = row;
  }
  bound += max_row;
  long top = static_cast<long>(rat_floor(bound).get_si());

  std::vector<long> hits;
  for (long cand = positive_only ? 1 : 0; cand <= top; ++cand) {
    CycMatrix shifted = m;
    Cyclotomic diag = shift - cyc(cand);
    for (long i = 0; i < n; ++i) shifted.at(i, i) = shifted.at(i, i) + diag;
    if (shifted.det().is_zero()) hits.push_back(cand);
  }
  return hits;
}

std::vector<std::complex<double>> numeric_central_spectrum(const FiniteMatrixGroup& w,
                                                           const AlgebraElement& z) {
  return numeric_eigenvalues(center_mult_matrix(w, z));
}

}  // namespace rca
