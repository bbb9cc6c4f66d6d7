#include "rca/matrix.hpp"

#include <numeric>
#include <stdexcept>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

namespace rca {

CycMatrix CycMatrix::identity(long n) {
  CycMatrix m(n, n);
  for (long i = 0; i < n; ++i) m.at(i, i) = Cyclotomic(Rational(1));
  return m;
}

CycMatrix operator+(const CycMatrix& a, const CycMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw std::invalid_argument("matrix shape mismatch");
  CycMatrix r(a.rows_, a.cols_);
  for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = a.e_[i] + b.e_[i];
  return r;
}

CycMatrix operator-(const CycMatrix& a, const CycMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw std::invalid_argument("matrix shape mismatch");
  CycMatrix r(a.rows_, a.cols_);
  for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = a.e_[i] - b.e_[i];
  return r;
}

CycMatrix operator*(const CycMatrix& a, const CycMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
  CycMatrix r(a.rows_, b.cols_);
  for (long i = 0; i < a.rows_; ++i)
    for (long k = 0; k < a.cols_; ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (long j = 0; j < b.cols_; ++j) {
        if (b.at(k, j).is_zero()) continue;
        r.at(i, j) = r.at(i, j) + a.at(i, k) * b.at(k, j);
      }
    }
  return r;
}

bool CycMatrix::operator==(const CycMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] != o.e_[i]) return false;
  return true;
}

void CycMatrix::scale_in_place(const Cyclotomic& s) {
  for (auto& x : e_) x = x * s;
}

CycVector CycMatrix::apply(const CycVector& v) const {
  if (static_cast<long>(v.size()) != cols_)
    throw std::invalid_argument("vector length mismatch");
  CycVector r(rows_);
  for (long i = 0; i < rows_; ++i)
    for (long j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero()) r[i] = r[i] + at(i, j) * v[j];
  return r;
}

CycMatrix CycMatrix::transpose() const {
  CycMatrix r(cols_, rows_);
  for (long i = 0; i < rows_; ++i)
    for (long j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

long CycMatrix::common_conductor() const {
  long m = 1;
  for (const auto& x : e_) m = std::lcm(m, x.conductor());
  return m;
}

CycMatrix CycMatrix::promoted(long conductor) const {
  CycMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i].promoted(conductor);
  return r;
}

Cyclotomic CycMatrix::det() const {
  if (rows_ != cols_) throw std::invalid_argument("det of non-square matrix");
  long n = rows_;
  if (n == 0) return Cyclotomic(Rational(1));
  CycMatrix m = *this;
  // Clear rational denominators row by row so elimination stays fraction-free.
  Rational scale(1);
  for (long i = 0; i < n; ++i) {
    Integer l(1);
    for (long j = 0; j < n; ++j)
      for (const auto& q : m.at(i, j).coeffs()) l = lcm(l, q.get_den());
    if (l != 1) {
      Cyclotomic f{Rational(l)};
      for (long j = 0; j < n; ++j) m.at(i, j) = m.at(i, j) * f;
      scale *= Rational(l);
    }
  }
  int sign = 1;
  Cyclotomic prev{Rational(1)};
  for (long k = 0; k + 1 < n; ++k) {
    if (m.at(k, k).is_zero()) {
      long r = k + 1;
      while (r < n && m.at(r, k).is_zero()) ++r;
      if (r == n) return Cyclotomic();
      for (long j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(r, j));
      sign = -sign;
    }
    Cyclotomic prev_inv = prev.inverse();
    for (long i = k + 1; i < n; ++i) {
      for (long j = k + 1; j < n; ++j)
        m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) * prev_inv;
      m.at(i, k) = Cyclotomic();
    }
    prev = m.at(k, k);
  }
  Cyclotomic d = m.at(n - 1, n - 1) * Cyclotomic(Rational(sign) / scale);
  return d;
}

namespace {

// Reduced row echelon form in place; returns pivot column indices.
std::vector<long> rref_in_place(CycMatrix& m) {
  std::vector<long> pivots;
  long row = 0;
  for (long col = 0; col < m.cols() && row < m.rows(); ++col) {
    long r = row;
    while (r < m.rows() && m.at(r, col).is_zero()) ++r;
    if (r == m.rows()) continue;
    if (r != row)
      for (long j = 0; j < m.cols(); ++j) std::swap(m.at(row, j), m.at(r, j));
    Cyclotomic inv = m.at(row, col).inverse();
    for (long j = col; j < m.cols(); ++j) m.at(row, j) = m.at(row, j) * inv;
    for (long i = 0; i < m.rows(); ++i) {
      if (i == row || m.at(i, col).is_zero()) continue;
      Cyclotomic f = m.at(i, col);
      for (long j = col; j < m.cols(); ++j)
        m.at(i, j) = m.at(i, j) - f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::vector<CycVector> CycMatrix::kernel() const {
  CycMatrix m = *this;
  std::vector<long> pivots = rref_in_place(m);
  std::vector<bool> is_pivot(cols_, false);
  for (long p : pivots) is_pivot[p] = true;
  std::vector<CycVector> basis;
  for (long f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    CycVector v(cols_);
    v[f] = Cyclotomic(Rational(1));
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

long CycMatrix::rank() const {
  CycMatrix m = *this;
  return static_cast<long>(rref_in_place(m).size());
}

std::vector<Cyclotomic> CycMatrix::charpoly() const {
  if (rows_ != cols_) throw std::invalid_argument("charpoly of non-square matrix");
  long n = rows_;
  std::vector<Cyclotomic> c(n + 1);
  c[n] = Cyclotomic(Rational(1));
  if (n == 0) return c;
  auto trace = [](const CycMatrix& m) {
    Cyclotomic t;
    for (long i = 0; i < m.rows(); ++i) t = t + m.at(i, i);
    return t;
  };
  CycMatrix acc = *this;
  c[n - 1] = -trace(acc);
  for (long k = 2; k <= n; ++k) {
    CycMatrix shifted = acc;
    for (long i = 0; i < n; ++i)
      shifted.at(i, i) = shifted.at(i, i) + c[n - k + 1];
    acc = (*this) * shifted;
    c[n - k] = -(trace(acc) * Cyclotomic(Rational(1, k)));
  }
  return c;
}

CycMatrix CycMatrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
  long n = rows_;
  CycMatrix aug(n, 2 * n);
  for (long i = 0; i < n; ++i) {
    for (long j = 0; j < n; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, n + i) = Cyclotomic(Rational(1));
  }
  std::vector<long> pivots = rref_in_place(aug);
  if (static_cast<long>(pivots.size()) != n || pivots.back() >= n)
    throw std::domain_error("matrix is singular");
  CycMatrix inv(n, n);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

bool CycMatrix::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

std::size_t CycMatrix::hash() const {
  std::size_t h = hash_mix(std::hash<long>{}(rows_), std::hash<long>{}(cols_));
  for (const auto& x : e_) h = hash_mix(h, x.hash());
  return h;
}

std::vector<std::complex<double>> numeric_eigenvalues(const CycMatrix& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("eigenvalues of non-square matrix");
  long n = m.rows();
  Eigen::MatrixXcd a(n, n);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) a(i, j) = m.at(i, j).embed();
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(a);
  std::vector<std::complex<double>> ev(n);
  for (long i = 0; i < n; ++i) ev[i] = solver.eigenvalues()(i);
  std::sort(ev.begin(), ev.end(), [](const auto& x, const auto& y) {
    if (x.real() != y.real()) return x.real() < y.real();
    return x.imag() < y.imag();
  });
  return ev;
}

}  // namespace rca
