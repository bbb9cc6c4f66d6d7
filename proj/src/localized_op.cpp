#include "rca/localized_op.hpp"

#include <stdexcept>

namespace rca {

namespace {

// Product of per-coordinate binomial coefficients C(a_i, b_i).
Cyclotomic multi_binomial(const std::vector<int>& a, const std::vector<int>& b) {
  Rational result(1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    long n = a[i], k = b[i];
    Rational c(1);
    for (long j = 0; j < k; ++j) c = c * Rational(n - j) / Rational(j + 1);
    result *= c;
  }
  return Cyclotomic(result);
}

// All multi-indices j with 0 <= j <= bound componentwise, odometer order.
std::vector<std::vector<int>> sub_multiindices(const std::vector<int>& bound) {
  std::vector<std::vector<int>> subs;
  std::vector<int> cur(bound.size(), 0);
  while (true) {
    subs.push_back(cur);
    std::size_t i = 0;
    while (i < bound.size() && cur[i] == bound[i]) cur[i++] = 0;
    if (i == bound.size()) break;
    ++cur[i];
  }
  return subs;
}

}  // namespace

Arrangement make_arrangement(FiniteMatrixGroup w) {
  Arrangement ctx{std::move(w), {}, {}, {}, {}, {}};
  ctx.rs = reflection_set(ctx.group);
  long n = ctx.group.dim();
  for (const auto& root : ctx.rs.hyperplanes) ctx.alpha.push_back(Poly::linear_form(root));

  long order = ctx.group.order();
  long nh = ctx.hyperplane_count();
  ctx.inverse_matrix.reserve(order);
  ctx.perm.assign(order, std::vector<long>(nh, -1));
  ctx.scalar.assign(order, std::vector<Cyclotomic>(nh));
  for (long g = 0; g < order; ++g) {
    const CycMatrix& inv = ctx.group.element(ctx.group.inverse(g)).matrix;
    ctx.inverse_matrix.push_back(inv);
    for (long h = 0; h < nh; ++h) {
      // Row covector alpha_h composed with g^-1.
      CycVector image(n);
      for (long j = 0; j < n; ++j) {
        Cyclotomic v;
        for (long i = 0; i < n; ++i) v = v + ctx.rs.hyperplanes[h][i] * inv.at(i, j);
        image[j] = v;
      }
      Cyclotomic lead;
      for (long j = 0; j < n; ++j)
        if (!image[j].is_zero()) {
          lead = image[j];
          break;
        }
      Cyclotomic lead_inv = lead.inverse();
      CycVector normalized(n);
      for (long j = 0; j < n; ++j) normalized[j] = image[j] * lead_inv;
      for (long h2 = 0; h2 < nh; ++h2)
        if (ctx.rs.hyperplanes[h2] == normalized) {
          ctx.perm[g][h] = h2;
          break;
        }
      if (ctx.perm[g][h] < 0)
        throw std::logic_error("group action does not permute the arrangement");
      ctx.scalar[g][h] = lead;
    }
  }
  return ctx;
}

RationalFunction rf_zero(const Arrangement& ctx) {
  return RationalFunction{Poly(ctx.dim()),
                          std::vector<int>(ctx.hyperplane_count(), 0)};
}

RationalFunction rf_from_poly(const Arrangement& ctx, Poly p) {
  return RationalFunction{std::move(p), std::vector<int>(ctx.hyperplane_count(), 0)};
}

void rf_reduce(const Arrangement& ctx, RationalFunction& f) {
  if (f.num.is_zero()) {
    f.den.assign(ctx.hyperplane_count(), 0);
    return;
  }
  for (long h = 0; h < ctx.hyperplane_count(); ++h) {
    while (f.den[h] > 0) {
      auto q = f.num.try_divide(ctx.alpha[h]);
      if (!q) break;
      f.num = std::move(*q);
      --f.den[h];
    }
  }
}

bool rf_is_zero(const RationalFunction& f) { return f.num.is_zero(); }

bool rf_equal(const RationalFunction& a, const RationalFunction& b) {
  return a.den == b.den && a.num == b.num;
}

RationalFunction rf_add(const Arrangement& ctx, const RationalFunction& a,
                        const RationalFunction& b) {
  RationalFunction out = rf_zero(ctx);
  Poly na = a.num, nb = b.num;
  for (long h = 0; h < ctx.hyperplane_count(); ++h) {
    int common = std::max(a.den[h], b.den[h]);
    out.den[h] = common;
    for (int k = a.den[h]; k < common; ++k) na = na * ctx.alpha[h];
    for (int k = b.den[h]; k < common; ++k) nb = nb * ctx.alpha[h];
  }
  out.num = na + nb;
  rf_reduce(ctx, out);
  return out;
}

RationalFunction rf_scale(const RationalFunction& f, const Cyclotomic& c) {
  RationalFunction out{f.num.scaled(c), f.den};
  if (out.num.is_zero()) out.den.assign(out.den.size(), 0);
  return out;
}

RationalFunction rf_mul_poly(const Arrangement& ctx, const RationalFunction& f,
                             const Poly& p) {
  RationalFunction out{f.num * p, f.den};
  rf_reduce(ctx, out);
  return out;
}

RationalFunction rf_mul(const Arrangement& ctx, const RationalFunction& a,
                        const RationalFunction& b) {
  RationalFunction out{a.num * b.num, a.den};
  for (long h = 0; h < ctx.hyperplane_count(); ++h) out.den[h] += b.den[h];
  rf_reduce(ctx, out);
  return out;
}

RationalFunction rf_derivative(const Arrangement& ctx, const RationalFunction& f,
                               long i) {
  // Quotient rule over the multiplied-out denominator: each hyperplane with a
  // positive exponent contributes its constant partial derivative.
  RationalFunction out = rf_zero(ctx);
  for (long h = 0; h < ctx.hyperplane_count(); ++h)
    out.den[h] = f.den[h] > 0 ? f.den[h] + 1 : 0;

  Poly acc = f.num.derivative(i);
  for (long h = 0; h < ctx.hyperplane_count(); ++h)
    if (f.den[h] > 0) acc = acc * ctx.alpha[h];

  for (long h = 0; h < ctx.hyperplane_count(); ++h) {
    if (f.den[h] == 0) continue;
    Cyclotomic slope = ctx.alpha[h].derivative(i).coefficient(
        std::vector<int>(ctx.dim(), 0));
    if (slope.is_zero()) continue;
    Poly part = f.num.scaled(slope * cyc(-f.den[h]));
    for (long h2 = 0; h2 < ctx.hyperplane_count(); ++h2)
      if (f.den[h2] > 0 && h2 != h) part = part * ctx.alpha[h2];
    acc = acc + part;
  }
  out.num = std::move(acc);
  rf_reduce(ctx, out);
  return out;
}

RationalFunction rf_group_transform(const Arrangement& ctx, const RationalFunction& f,
                                    long g) {
  RationalFunction out = rf_zero(ctx);
  Poly num = f.num.composed_with_matrix(ctx.inverse_matrix[g]);
  Cyclotomic unit = cyc(1);
  for (long h = 0; h < ctx.hyperplane_count(); ++h) {
    if (f.den[h] == 0) continue;
    out.den[ctx.perm[g][h]] += f.den[h];
    for (int k = 0; k < f.den[h]; ++k) unit = unit * ctx.scalar[g][h];
  }
  out.num = num.scaled(unit.inverse());
  rf_reduce(ctx, out);
  return out;
}

WPoly WPoly::from_poly(Poly p, long elem) {
  WPoly w(p.nvars());
  w.set_component(elem, std::move(p));
  return w;
}

Poly WPoly::component(long elem) const {
  auto it = comp_.find(elem);
  return it == comp_.end() ? Poly(nvars_) : it->second;
}

void WPoly::set_component(long elem, Poly p) {
  if (p.is_zero())
    comp_.erase(elem);
  else
    comp_[elem] = std::move(p);
}

void LocalizedOp::add_term(std::vector<int> deriv, long elem, RationalFunction rf) {
  rf_reduce(*ctx_, rf);
  if (rf_is_zero(rf)) return;
  Key key{std::move(deriv), elem};
  auto it = t_.find(key);
  if (it == t_.end()) {
    t_.emplace(std::move(key), std::move(rf));
  } else {
    it->second = rf_add(*ctx_, it->second, rf);
    if (rf_is_zero(it->second)) t_.erase(it);
  }
}

LocalizedOp LocalizedOp::zero(const Arrangement& ctx) { return LocalizedOp(&ctx); }

LocalizedOp LocalizedOp::identity_op(const Arrangement& ctx) {
  return from_poly(ctx, Poly::constant(ctx.dim(), cyc(1)));
}

LocalizedOp LocalizedOp::from_poly(const Arrangement& ctx, Poly p) {
  LocalizedOp op(&ctx);
  op.add_term(std::vector<int>(ctx.dim(), 0), 0, rf_from_poly(ctx, std::move(p)));
  return op;
}

LocalizedOp LocalizedOp::deriv(const Arrangement& ctx, long i) {
  if (i < 0 || i >= ctx.dim()) throw std::invalid_argument("derivative index out of range");
  LocalizedOp op(&ctx);
  std::vector<int> k(ctx.dim(), 0);
  k[i] = 1;
  op.add_term(std::move(k), 0, rf_from_poly(ctx, Poly::constant(ctx.dim(), cyc(1))));
  return op;
}

LocalizedOp LocalizedOp::group_elem(const Arrangement& ctx, long g) {
  if (g < 0 || g >= ctx.group.order()) throw std::invalid_argument("element index out of range");
  LocalizedOp op(&ctx);
  op.add_term(std::vector<int>(ctx.dim(), 0), g,
              rf_from_poly(ctx, Poly::constant(ctx.dim(), cyc(1))));
  return op;
}

LocalizedOp LocalizedOp::from_term(const Arrangement& ctx, std::vector<int> deriv,
                                   long elem, RationalFunction rf) {
  LocalizedOp op(&ctx);
  op.add_term(std::move(deriv), elem, std::move(rf));
  return op;
}

bool LocalizedOp::operator==(const LocalizedOp& o) const {
  if (ctx_ != o.ctx_) throw std::invalid_argument("operators from different contexts");
  if (t_.size() != o.t_.size()) return false;
  auto it = t_.begin(), jt = o.t_.begin();
  for (; it != t_.end(); ++it, ++jt) {
    if (it->first != jt->first) return false;
    if (!rf_equal(it->second, jt->second)) return false;
  }
  return true;
}

LocalizedOp LocalizedOp::operator-() const { return scaled(cyc(-1)); }

LocalizedOp operator+(const LocalizedOp& a, const LocalizedOp& b) {
  if (a.ctx_ != b.ctx_) throw std::invalid_argument("operators from different contexts");
  LocalizedOp out = a;
  for (const auto& [key, rf] : b.t_) out.add_term(key.first, key.second, rf);
  return out;
}

LocalizedOp operator-(const LocalizedOp& a, const LocalizedOp& b) { return a + (-b); }

LocalizedOp LocalizedOp::scaled(const Cyclotomic& c) const {
  LocalizedOp out(ctx_);
  if (c.is_zero()) return out;
  for (const auto& [key, rf] : t_) out.t_.emplace(key, rf_scale(rf, c));
  return out;
}

LocalizedOp compose(const LocalizedOp& a, const LocalizedOp& b) {
  if (a.ctx_ != b.ctx_) throw std::invalid_argument("operators from different contexts");
  const Arrangement& ctx = *a.ctx_;
  long n = ctx.dim();
  LocalizedOp out(a.ctx_);

  for (const auto& [ka, ra] : a.t_) {
    const std::vector<int>& da = ka.first;
    long ga = ka.second;
    for (const auto& [kb, rb] : b.t_) {
      const std::vector<int>& db = kb.first;
      long gb = kb.second;

      // Move g_a to the right past rb: conjugate the coefficient...
      RationalFunction rb_t = rf_group_transform(ctx, rb, ga);
      // ...and past the derivatives: g d^db g^-1 expands through the matrix
      // of g_a acting on the derivations.
      const CycMatrix& mat = ctx.group.element(ga).matrix;
      Poly conj = Poly::constant(n, cyc(1));
      for (long i = 0; i < n; ++i) {
        if (db[i] == 0) continue;
        CycVector col(n);
        for (long j = 0; j < n; ++j) col[j] = mat.at(j, i);
        Poly lin = Poly::linear_form(col);
        for (int k = 0; k < db[i]; ++k) conj = conj * lin;
      }
      long prod_elem = ctx.group.product(ga, gb);

      for (const auto& [m, cm] : conj.terms()) {
        // Leibniz: d^da past the function rb_t * cm.
        RationalFunction base = rf_scale(rb_t, cm);
        for (const auto& j : sub_multiindices(da)) {
          std::vector<int> rest(n), key(n);
          for (long i = 0; i < n; ++i) {
            rest[i] = da[i] - j[i];
            key[i] = j[i] + m[i];
          }
          RationalFunction coeff = base;
          for (long i = 0; i < n; ++i)
            for (int k = 0; k < rest[i]; ++k) coeff = rf_derivative(ctx, coeff, i);
          if (rf_is_zero(coeff)) continue;
          coeff = rf_scale(coeff, multi_binomial(da, j));
          coeff = rf_mul(ctx, ra, coeff);
          out.add_term(std::move(key), prod_elem, std::move(coeff));
        }
      }
    }
  }
  return out;
}

LocalizedOp commutator(const LocalizedOp& a, const LocalizedOp& b) {
  return compose(a, b) - compose(b, a);
}

WPoly apply(const LocalizedOp& op, const WPoly& f) {
  const Arrangement& ctx = op.ctx();
  if (f.nvars() != ctx.dim()) throw std::invalid_argument("variable count mismatch");
  WPoly out(f.nvars());
  for (const auto& [elem, p] : f.components()) {
    RationalFunction acc = rf_zero(ctx);
    for (const auto& [key, rf] : op.terms()) {
      Poly q = p.composed_with_matrix(ctx.inverse_matrix[key.second]);
      for (long i = 0; i < ctx.dim(); ++i)
        for (int k = 0; k < key.first[i]; ++k) q = q.derivative(i);
      if (q.is_zero()) continue;
      acc = rf_add(ctx, acc, rf_mul_poly(ctx, rf, q));
    }
    for (int e : acc.den)
      if (e > 0) throw std::domain_error("inexact division applying operator");
    out.set_component(elem, std::move(acc.num));
  }
  return out;
}

Poly apply(const LocalizedOp& op, const Poly& f) {
  WPoly out = apply(op, WPoly::from_poly(f));
  for (const auto& [elem, p] : out.components())
    if (elem != 0 && !p.is_zero())
      throw std::logic_error("plain application produced group components");
  return out.component(0);
}

}  // namespace rca
