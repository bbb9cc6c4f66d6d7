#include "rca/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rca {

long euler_phi(long n) {
  if (n < 1) throw std::invalid_argument("euler_phi of nonpositive argument");
  long result = n;
  long m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

namespace {

// Exact quotient of integer polynomials, divisor monic. Low degree first.
std::vector<Integer> divide_monic(const std::vector<Integer>& num,
                                  const std::vector<Integer>& div) {
  std::vector<Integer> rem = num;
  long dn = static_cast<long>(rem.size()) - 1;
  long dd = static_cast<long>(div.size()) - 1;
  std::vector<Integer> quot(dn - dd + 1, Integer(0));
  for (long i = dn; i >= dd; --i) {
    Integer c = rem[i];
    if (c == 0) continue;
    quot[i - dd] = c;
    for (long j = 0; j <= dd; ++j) rem[i - dd + j] -= c * div[j];
  }
  for (const auto& r : rem)
    if (r != 0) throw std::logic_error("inexact monic division");
  return quot;
}

std::vector<Integer> compute_cyclotomic(long n) {
  // x^n - 1 divided by Phi_d for every proper divisor d of n.
  std::vector<Integer> p(n + 1, Integer(0));
  p[0] = -1;
  p[n] = 1;
  for (long d = 1; d < n; ++d)
    if (n % d == 0) p = divide_monic(p, cyclotomic_polynomial(d));
  return p;
}

}  // namespace

const std::vector<Integer>& cyclotomic_polynomial(long n) {
  static std::map<long, std::vector<Integer>> cache;
  static std::mutex mtx;
  if (n < 1) throw std::invalid_argument("cyclotomic_polynomial of nonpositive argument");
  {
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  std::vector<Integer> value = compute_cyclotomic(n);
  std::lock_guard<std::mutex> lock(mtx);
  return cache.emplace(n, std::move(value)).first->second;
}

Cyclotomic::Cyclotomic(long conductor, std::vector<Rational> coeffs)
    : cond_(conductor), c_(std::move(coeffs)) {
  if (cond_ < 1) throw std::invalid_argument("conductor must be positive");
  if (static_cast<long>(c_.size()) != euler_phi(cond_))
    throw std::invalid_argument("coefficient vector length must be phi(conductor)");
  // Rational values collapse to conductor 1 so representations are canonical.
  if (cond_ > 1 && is_rational()) {
    cond_ = 1;
    c_.resize(1);
  }
}

std::vector<Rational> Cyclotomic::reduce_mod_phi(long n, std::vector<Rational> raw) {
  const auto& phi_n = cyclotomic_polynomial(n);
  long deg = static_cast<long>(phi_n.size()) - 1;
  // Reduce exponents mod n first, then mod Phi_n.
  std::vector<Rational> folded(std::max<long>(n, deg), Rational(0));
  for (long i = 0; i < static_cast<long>(raw.size()); ++i) {
    long e = ((i % n) + n) % n;
    folded[e] += raw[i];
  }
  for (long i = static_cast<long>(folded.size()) - 1; i >= deg; --i) {
    Rational c = folded[i];
    if (c == 0) continue;
    folded[i] = 0;
    for (long j = 0; j < deg; ++j) {
      if (phi_n[j] != 0) folded[i - deg + j] -= c * Rational(phi_n[j]);
    }
  }
  folded.resize(deg);
  return folded;
}

std::vector<Rational> Cyclotomic::expanded_at(long m) const {
  if (m == cond_) return c_;
  if (m % cond_ != 0) throw std::invalid_argument("expansion target not a multiple");
  long step = m / cond_;
  std::vector<Rational> raw((c_.size() - 1) * step + 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) raw[i * step] = c_[i];
  return reduce_mod_phi(m, std::move(raw));
}

Cyclotomic Cyclotomic::from_power_coeffs(long n, std::vector<Rational> raw) {
  return Cyclotomic(n, reduce_mod_phi(n, std::move(raw)));
}

Cyclotomic Cyclotomic::root_of_unity(long k, long n) {
  if (n < 1) throw std::invalid_argument("root_of_unity needs positive order");
  long e = ((k % n) + n) % n;
  std::vector<Rational> raw(e + 1, Rational(0));
  raw[e] = 1;
  return from_power_coeffs(n, std::move(raw));
}

bool Cyclotomic::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return q == 0; });
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rational Cyclotomic::rational_part() const {
  if (!is_rational()) throw std::domain_error("value is not rational");
  return c_[0];
}

Cyclotomic Cyclotomic::promoted(long m) const {
  if (m == cond_) return *this;
  return Cyclotomic(m, expanded_at(m));
}

Cyclotomic Cyclotomic::operator-() const {
  std::vector<Rational> c(c_);
  for (auto& q : c) q = -q;
  return Cyclotomic(cond_, std::move(c));
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  long m = std::lcm(a.cond_, b.cond_);
  std::vector<Rational> x = a.expanded_at(m), y = b.expanded_at(m);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[i];
  return Cyclotomic(m, std::move(x));
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  long m = std::lcm(a.cond_, b.cond_);
  std::vector<Rational> x = a.expanded_at(m), y = b.expanded_at(m);
  std::vector<Rational> conv(x.size() + y.size() - 1, Rational(0));
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (y[j] == 0) continue;
      conv[i + j] += x[i] * y[j];
    }
  }
  return Cyclotomic::from_power_coeffs(m, std::move(conv));
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (is_rational()) return Cyclotomic(Rational(1) / c_[0]);
  // Extended Euclid in Q[x] against Phi_N: u*a + v*Phi = 1, inverse = u mod Phi.
  using Poly = std::vector<Rational>;
  auto degree = [](const Poly& p) {
    for (long i = static_cast<long>(p.size()) - 1; i >= 0; --i)
      if (p[i] != 0) return i;
    return -1L;
  };
  auto trim = [&](Poly& p) { p.resize(std::max<long>(degree(p) + 1, 1)); };
  const auto& phi_int = cyclotomic_polynomial(cond_);
  Poly r0(phi_int.size());
  for (std::size_t i = 0; i < phi_int.size(); ++i) r0[i] = Rational(phi_int[i]);
  Poly r1 = c_;
  trim(r1);
  Poly s0{Rational(0)}, s1{Rational(1)};  // coefficients of a in the combination
  while (degree(r1) > 0) {
    long d0 = degree(r0), d1 = degree(r1);
    if (d0 < d1) {
      std::swap(r0, r1);
      std::swap(s0, s1);
      continue;
    }
    Rational c = r0[d0] / r1[d1];
    long shift = d0 - d1;
    for (long j = 0; j <= d1; ++j) r0[j + shift] -= c * r1[j];
    if (static_cast<long>(s0.size()) < shift + static_cast<long>(s1.size()))
      s0.resize(shift + s1.size(), Rational(0));
    for (std::size_t j = 0; j < s1.size(); ++j) s0[j + shift] -= c * s1[j];
    trim(r0);
    if (degree(r0) < degree(r1)) {
      std::swap(r0, r1);
      std::swap(s0, s1);
    }
  }
  if (degree(r1) != 0 || r1[0] == 0)
    throw std::logic_error("cyclotomic inverse: gcd with Phi_N not a unit");
  Rational scale = Rational(1) / r1[0];
  for (auto& q : s1) q *= scale;
  return from_power_coeffs(cond_, std::move(s1));
}

Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }

bool Cyclotomic::operator==(const Cyclotomic& o) const {
  long m = std::lcm(cond_, o.cond_);
  return expanded_at(m) == o.expanded_at(m);
}

Rational Cyclotomic::abs_bound() const {
  Rational s(0);
  for (const auto& q : c_) s += abs(q);
  return s;
}

std::complex<double> Cyclotomic::embed(long k) const {
  const double tau = 6.283185307179586476925286766559;
  std::complex<double> zeta = std::polar(1.0, tau * static_cast<double>(k) /
                                                  static_cast<double>(cond_));
  std::complex<double> acc(0.0, 0.0);
  for (long i = static_cast<long>(c_.size()) - 1; i >= 0; --i)
    acc = acc * zeta + std::complex<double>(rat_double(c_[i]), 0.0);
  return acc;
}

std::string Cyclotomic::str() const {
  if (is_rational()) return rat_str(c_[0]);
  std::ostringstream os;
  os << "cyc(" << cond_ << ";";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ",";
    os << rat_str(c_[i]);
  }
  os << ")";
  return os.str();
}

std::size_t Cyclotomic::hash() const {
  std::size_t h = std::hash<long>{}(cond_);
  for (const auto& q : c_) h = hash_mix(h, rat_hash(q));
  return h;
}

}  // namespace rca
