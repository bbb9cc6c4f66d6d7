#include "rca/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace rca {

void Poly::insert_term(std::vector<int> e, const Cyclotomic& c) {
  if (c.is_zero()) return;
  auto it = t_.find(e);
  if (it == t_.end()) {
    t_.emplace(std::move(e), c);
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

Poly Poly::constant(long nvars, const Cyclotomic& c) {
  Poly p(nvars);
  p.insert_term(std::vector<int>(nvars, 0), c);
  return p;
}

Poly Poly::variable(long nvars, long i) {
  if (i < 0 || i >= nvars) throw std::invalid_argument("variable index out of range");
  std::vector<int> e(nvars, 0);
  e[i] = 1;
  Poly p(nvars);
  p.insert_term(std::move(e), cyc(1));
  return p;
}

Poly Poly::monomial(std::vector<int> exponents, const Cyclotomic& c) {
  for (int e : exponents)
    if (e < 0) throw std::invalid_argument("negative exponent");
  Poly p(static_cast<long>(exponents.size()));
  p.insert_term(std::move(exponents), c);
  return p;
}

Poly Poly::linear_form(const CycVector& coeffs) {
  Poly p(static_cast<long>(coeffs.size()));
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    std::vector<int> e(coeffs.size(), 0);
    e[i] = 1;
    p.insert_term(std::move(e), coeffs[i]);
  }
  return p;
}

long Poly::total_degree() const {
  long best = -1;
  for (const auto& [e, c] : t_) {
    long d = 0;
    for (int v : e) d += v;
    if (d > best) best = d;
  }
  return best;
}

Cyclotomic Poly::coefficient(const std::vector<int>& exponents) const {
  auto it = t_.find(exponents);
  return it == t_.end() ? Cyclotomic() : it->second;
}

Poly Poly::operator-() const {
  Poly p(nvars_);
  for (const auto& [e, c] : t_) p.t_.emplace(e, -c);
  return p;
}

Poly operator+(const Poly& a, const Poly& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("variable count mismatch");
  Poly p = a;
  for (const auto& [e, c] : b.t_) p.insert_term(e, c);
  return p;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("variable count mismatch");
  Poly p(a.nvars_);
  for (const auto& [ea, ca] : a.t_)
    for (const auto& [eb, cb] : b.t_) {
      std::vector<int> e(a.nvars_);
      for (long i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
      p.insert_term(std::move(e), ca * cb);
    }
  return p;
}

Poly Poly::scaled(const Cyclotomic& c) const {
  Poly p(nvars_);
  for (const auto& [e, v] : t_) p.insert_term(e, v * c);
  return p;
}

Poly Poly::derivative(long i) const {
  Poly p(nvars_);
  for (const auto& [e, c] : t_) {
    if (e[i] == 0) continue;
    std::vector<int> d = e;
    --d[i];
    p.insert_term(std::move(d), c * cyc(e[i]));
  }
  return p;
}

Poly Poly::substituted(const std::vector<Poly>& images) const {
  if (static_cast<long>(images.size()) != nvars_)
    throw std::invalid_argument("expected one image per variable");
  long out_vars = images.empty() ? 0 : images[0].nvars();
  Poly out(out_vars);
  for (const auto& [e, c] : t_) {
    Poly term = Poly::constant(out_vars, c);
    for (long i = 0; i < nvars_; ++i)
      for (int k = 0; k < e[i]; ++k) term = term * images[i];
    out = out + term;
  }
  return out;
}

Poly Poly::composed_with_matrix(const CycMatrix& a) const {
  if (a.rows() != nvars_ || a.cols() != nvars_)
    throw std::invalid_argument("matrix shape must match variable count");
  std::vector<Poly> images;
  images.reserve(nvars_);
  for (long i = 0; i < nvars_; ++i) {
    CycVector row(nvars_);
    for (long j = 0; j < nvars_; ++j) row[j] = a.at(i, j);
    images.push_back(Poly::linear_form(row));
  }
  return substituted(images);
}

Cyclotomic Poly::eval(const CycVector& point) const {
  if (static_cast<long>(point.size()) != nvars_)
    throw std::invalid_argument("expected one value per variable");
  Cyclotomic acc;
  for (const auto& [e, c] : t_) {
    Cyclotomic term = c;
    for (long i = 0; i < nvars_; ++i)
      for (int k = 0; k < e[i]; ++k) term = term * point[i];
    acc = acc + term;
  }
  return acc;
}

std::optional<Poly> Poly::try_divide(const Poly& divisor) const {
  if (divisor.is_zero()) return std::nullopt;
  if (nvars_ != divisor.nvars_) throw std::invalid_argument("variable count mismatch");
  Poly rem = *this;
  Poly quot(nvars_);
  const auto& dlead = *divisor.t_.rbegin();
  while (!rem.is_zero()) {
    const auto& rlead = *rem.t_.rbegin();
    std::vector<int> e(nvars_);
    for (long i = 0; i < nvars_; ++i) {
      e[i] = rlead.first[i] - dlead.first[i];
      if (e[i] < 0) return std::nullopt;
    }
    Poly t = Poly::monomial(std::move(e), rlead.second / dlead.second);
    quot = quot + t;
    rem = rem - t * divisor;
  }
  return quot;
}

Poly Poly::divide_exact(const Poly& divisor) const {
  auto q = try_divide(divisor);
  if (!q) throw std::domain_error("inexact polynomial division");
  return *q;
}

std::string Poly::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    const auto& [e, c] = *it;
    bool constant_term = true;
    for (int v : e) constant_term = constant_term && v == 0;

    Cyclotomic mag = c;
    bool negative = false;
    if (c.is_rational() && c.rational_part() < 0) {
      negative = true;
      mag = -c;
    }
    if (first) {
      if (negative) os << "-";
      first = false;
    } else {
      os << (negative ? " - " : " + ");
    }

    bool unit = mag.is_rational() && mag.rational_part() == 1;
    if (!unit || constant_term) os << mag.str();
    bool printed = !unit || constant_term;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (printed) os << "*";
      printed = true;
      os << "x" << i;
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os.str();
}

}  // namespace rca
