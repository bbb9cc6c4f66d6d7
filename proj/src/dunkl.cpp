#include "rca/dunkl.hpp"

#include "rca/group_algebra.hpp"

#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

namespace rca {

namespace {

std::vector<int> zero_multi(long n) { return std::vector<int>(n, 0); }

Cyclotomic pair_covector(const CycVector& covector, const CycVector& v) {
  Cyclotomic out;
  for (std::size_t i = 0; i < covector.size(); ++i)
    out = out + covector[i] * v[i];
  return out;
}

std::string multi_str(const char* letter, const std::vector<int>& k) {
  std::ostringstream os;
  for (std::size_t i = 0; i < k.size(); ++i) {
    for (int r = 0; r < k[i]; ++r) os << letter << i << " ";
  }
  return os.str();
}

std::string op_str(const LocalizedOp& op) {
  if (op.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, rf] : op.terms()) {
    if (!first) os << " + ";
    first = false;
    os << "(" << rf.num.str() << ")";
    for (std::size_t h = 0; h < rf.den.size(); ++h) {
      if (rf.den[h] > 0) {
        os << "/(" << op.ctx().alpha[h].str() << ")";
        if (rf.den[h] > 1) os << "^" << rf.den[h];
      }
    }
    os << " " << multi_str("d", key.first);
    if (key.second != 0) os << "g" << key.second;
  }
  return os.str();
}

std::vector<LocalizedOp> all_dunkl_ops(const Arrangement& ctx,
                                       const ParamC& c) {
  std::vector<LocalizedOp> d;
  for (long i = 0; i < ctx.dim(); ++i) {
    CycVector y(ctx.dim());
    y[i] = cyc(1);
    d.push_back(dunkl_op(ctx, y, c));
  }
  return d;
}

LocalizedOp coordinate_op(const Arrangement& ctx, long i) {
  return LocalizedOp::from_poly(ctx, Poly::variable(ctx.dim(), i));
}

RelationReport check_commutativity(const Arrangement& ctx, const ParamC& c) {
  RelationReport report;
  report.mode = VerifyMode::commutativity;
  auto d = all_dunkl_ops(ctx, c);
  for (long i = 0; i < ctx.dim(); ++i) {
    for (long j = i + 1; j < ctx.dim(); ++j) {
      LocalizedOp res = commutator(d[i], d[j]);
      if (!res.is_zero()) {
        report.ok = false;
        std::ostringstream os;
        os << "[D_" << i << ", D_" << j << "] = " << op_str(res);
        report.detail = os.str();
        return report;
      }
    }
  }
  return report;
}

RelationReport check_cross(const Arrangement& ctx, const ParamC& c) {
  RelationReport report;
  report.mode = VerifyMode::cross;
  for (const auto& r : ctx.rs.data) {
    if (!(r.eigenvalue == cyc(-1))) report.informational_only = true;
  }
  auto d = all_dunkl_ops(ctx, c);
  for (long i = 0; i < ctx.dim(); ++i) {
    for (long j = 0; j < ctx.dim(); ++j) {
      LocalizedOp expected = LocalizedOp::zero(ctx);
      if (i == j) expected = LocalizedOp::identity_op(ctx);
      for (std::size_t s = 0; s < ctx.rs.data.size(); ++s) {
        const auto& r = ctx.rs.data[s];
        Cyclotomic coef = cyc(-1) * c.value(s) * r.root[i] * r.coroot[j];
        if (coef.is_zero()) continue;
        expected = expected + LocalizedOp::group_elem(ctx, r.element).scaled(coef);
      }
      LocalizedOp res = commutator(d[i], coordinate_op(ctx, j)) - expected;
      if (!res.is_zero()) {
        std::ostringstream os;
        os << "[D_" << i << ", x_" << j << "] off by " << op_str(res);
        if (report.informational_only) {
          report.informational_holds = false;
          if (report.detail.empty()) report.detail = os.str();
        } else {
          report.ok = false;
          report.detail = os.str();
          return report;
        }
      }
    }
  }
  return report;
}

RelationReport check_euler(const Arrangement& ctx, const ParamC& c) {
  RelationReport report;
  report.mode = VerifyMode::euler;
  EulerElement h = euler_element(ctx, c);
  auto d = all_dunkl_ops(ctx, c);
  auto fail = [&report](const std::string& what, const LocalizedOp& res) {
    report.ok = false;
    report.detail = what + " off by " + op_str(res);
  };
  for (long i = 0; i < ctx.dim(); ++i) {
    LocalizedOp xi = coordinate_op(ctx, i);
    LocalizedOp res = commutator(h.op, xi) - xi;
    if (!res.is_zero()) {
      fail("[h, x_" + std::to_string(i) + "] - x_" + std::to_string(i), res);
      return report;
    }
    res = commutator(h.op, d[i]) + d[i];
    if (!res.is_zero()) {
      fail("[h, D_" + std::to_string(i) + "] + D_" + std::to_string(i), res);
      return report;
    }
  }
  for (long g = 1; g < ctx.group.order(); ++g) {
    LocalizedOp res = commutator(h.op, LocalizedOp::group_elem(ctx, g));
    if (!res.is_zero()) {
      fail("[h, g" + std::to_string(g) + "]", res);
      return report;
    }
  }
  Poly one = Poly::constant(ctx.dim(), cyc(1));
  Poly hc = apply(h.op, one);
  if (!(hc == one.scaled(cyc(-1) * h.rho))) {
    report.ok = false;
    report.detail = "h(1) = " + hc.str() + ", expected -rho_c";
  }
  return report;
}

// Multi-indices in `slots` coordinates with entry sum at most `degree`,
// in lexicographic order.
std::vector<std::vector<int>> bounded_multis(long slots, long degree) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(slots, 0);
  while (true) {
    long total = 0;
    for (int e : cur) total += e;
    if (total <= degree) out.push_back(cur);
    long pos = slots - 1;
    while (pos >= 0) {
      ++cur[pos];
      total = 0;
      for (int e : cur) total += e;
      if (total <= degree) break;
      cur[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return out;
}

CycVector random_point_off_arrangement(const Arrangement& ctx,
                                       std::mt19937& rng,
                                       const std::vector<CycVector>& used) {
  for (int tries = 0; tries < 256; ++tries) {
    CycVector p(ctx.dim());
    for (long i = 0; i < ctx.dim(); ++i) {
      long num = -19 + static_cast<long>(rng() % 39);
      long den = 1 + static_cast<long>(rng() % 4);
      p[i] = cyc(num, den);
    }
    bool clear = true;
    for (const auto& a : ctx.alpha) {
      if (a.eval(p).is_zero()) clear = false;
    }
    // Distinct normalized values only: 4/4 and 3/3 are the same point.
    for (const auto& q : used) {
      if (p == q) clear = false;
    }
    if (clear) return p;
  }
  throw std::runtime_error("no rational point off the arrangement found");
}

Cyclotomic eval_rf(const Arrangement& ctx, const RationalFunction& f,
                   const CycVector& p) {
  Cyclotomic v = f.num.eval(p);
  for (std::size_t h = 0; h < f.den.size(); ++h) {
    for (int r = 0; r < f.den[h]; ++r) v = v * ctx.alpha[h].eval(p).inverse();
  }
  return v;
}

// Dimension of the span of a family of polynomials, by exact row reduction
// of the monomial coordinate matrix.
long poly_rank(const std::vector<Poly>& polys) {
  std::map<std::vector<int>, long> row_of;
  for (const auto& p : polys) {
    for (const auto& [e, coef] : p.terms()) {
      row_of.emplace(e, static_cast<long>(row_of.size()));
    }
  }
  if (row_of.empty() || polys.empty()) return 0;
  CycMatrix m(static_cast<long>(row_of.size()),
              static_cast<long>(polys.size()));
  for (std::size_t j = 0; j < polys.size(); ++j) {
    for (const auto& [e, coef] : polys[j].terms()) {
      m.at(row_of.at(e), static_cast<long>(j)) = coef;
    }
  }
  return m.rank();
}

// Top-order part of an ell-fold product of the x_i D_j: only all-derivative
// paths reach order ell, so those terms sit at the identity group element
// with polynomial coefficients.  Returned in 2n variables, x first, then the
// derivative symbols.
Poly top_symbol(const Arrangement& ctx, const LocalizedOp& op, long ell) {
  long n = ctx.dim();
  Poly out(2 * n);
  for (const auto& [key, rf] : op.terms()) {
    long order = 0;
    for (int e : key.first) order += e;
    if (order != ell) continue;
    if (key.second != 0)
      throw std::logic_error("top-order term at a nontrivial group element");
    for (int e : rf.den) {
      if (e != 0) throw std::logic_error("top-order term with denominator");
    }
    for (const auto& [e, coef] : rf.num.terms()) {
      std::vector<int> exps = e;
      exps.insert(exps.end(), key.first.begin(), key.first.end());
      out = out + Poly::monomial(std::move(exps), coef);
    }
  }
  return out;
}

}  // namespace

LocalizedOp dunkl_op(const Arrangement& ctx, const CycVector& y,
                     const ParamC& c) {
  long n = ctx.dim();
  if (static_cast<long>(y.size()) != n)
    throw std::invalid_argument("direction has wrong dimension");
  if (c.size() != static_cast<long>(ctx.rs.data.size()))
    throw std::invalid_argument("parameter count does not match reflections");
  LocalizedOp op = LocalizedOp::zero(ctx);
  for (long i = 0; i < n; ++i) {
    if (!y[i].is_zero()) op = op + LocalizedOp::deriv(ctx, i).scaled(y[i]);
  }
  for (std::size_t s = 0; s < ctx.rs.data.size(); ++s) {
    const auto& r = ctx.rs.data[s];
    Cyclotomic k =
        cyc(2) * c.value(static_cast<long>(s)) * (cyc(1) - r.eigenvalue).inverse();
    if (k.is_zero()) continue;
    Cyclotomic pairing = pair_covector(r.root, y);
    if (pairing.is_zero()) continue;
    std::vector<int> den(ctx.hyperplane_count(), 0);
    den[r.hyperplane] = 1;
    RationalFunction coeff{Poly::constant(n, k * pairing), den};
    op = op + LocalizedOp::from_term(ctx, zero_multi(n), r.element, coeff) +
         LocalizedOp::from_term(ctx, zero_multi(n), 0,
                                rf_scale(coeff, cyc(-1)));
  }
  return op;
}

EulerElement euler_element(const Arrangement& ctx, const ParamC& c) {
  LocalizedOp op = LocalizedOp::zero(ctx);
  for (long i = 0; i < ctx.dim(); ++i) {
    op = op + compose(coordinate_op(ctx, i), LocalizedOp::deriv(ctx, i));
  }
  Cyclotomic rho = rho_c(ctx.rs, c);
  op = op + LocalizedOp::identity_op(ctx).scaled(cyc(-1) * rho);
  return EulerElement{std::move(op), rho};
}

RelationReport verify_relations(const Arrangement& ctx, const ParamC& c,
                                VerifyMode mode) {
  switch (mode) {
    case VerifyMode::commutativity:
      return check_commutativity(ctx, c);
    case VerifyMode::cross:
      return check_cross(ctx, c);
    case VerifyMode::euler:
      return check_euler(ctx, c);
  }
  throw std::logic_error("unknown verification mode");
}

PbwReport pbw_independence(const Arrangement& ctx, const ParamC& c,
                           long degree, unsigned long seed) {
  long n = ctx.dim();
  auto shapes = bounded_multis(2 * n, degree);
  long count = static_cast<long>(shapes.size()) * ctx.group.order();
  if (count > 5000) throw cap_exceeded_error("spanning family too large");

  auto d = all_dunkl_ops(ctx, c);
  std::vector<LocalizedOp> family;
  family.reserve(count);
  for (const auto& ab : shapes) {
    std::vector<int> a(ab.begin(), ab.begin() + n);
    LocalizedOp base = LocalizedOp::from_poly(
        ctx, Poly::monomial(std::move(a), cyc(1)));
    for (long i = 0; i < n; ++i) {
      for (int r = 0; r < ab[n + i]; ++r) base = compose(base, d[i]);
    }
    for (long g = 0; g < ctx.group.order(); ++g) {
      family.push_back(compose(base, LocalizedOp::group_elem(ctx, g)));
    }
  }

  PbwReport report;
  report.count = count;
  std::map<LocalizedOp::Key, long> row_of;
  for (const auto& op : family) {
    for (const auto& [key, rf] : op.terms()) {
      row_of.emplace(key, static_cast<long>(row_of.size()));
    }
  }
  long keys = static_cast<long>(row_of.size());

  // A single sample point only sees the coefficient functions' values there,
  // so stack evaluations at fresh points until either full rank certifies
  // independence or the rank stops growing twice in a row.
  std::mt19937 rng(static_cast<std::mt19937::result_type>(seed));
  std::vector<CycVector> points;
  long stagnant = 0;
  while (!report.ok && stagnant < 2) {
    points.push_back(random_point_off_arrangement(ctx, rng, points));
    long npts = static_cast<long>(points.size());
    CycMatrix m(keys * npts, count);
    for (long t = 0; t < npts; ++t) {
      for (std::size_t j = 0; j < family.size(); ++j) {
        for (const auto& [key, rf] : family[j].terms()) {
          m.at(t * keys + row_of.at(key), static_cast<long>(j)) =
              eval_rf(ctx, rf, points[t]);
        }
      }
    }
    long rank = m.rank();
    stagnant = rank > report.rank ? 0 : stagnant + 1;
    report.rank = rank;
    report.ok = rank == count;
  }
  return report;
}

DegreeZeroReport degree_zero_checks(const Arrangement& ctx, const ParamC& c,
                                    const Cyclotomic& omega, long max_degree) {
  long n = ctx.dim();
  DegreeZeroReport report;
  EulerElement h = euler_element(ctx, c);
  auto d = all_dunkl_ops(ctx, c);

  std::vector<LocalizedOp> generators;
  for (long i = 0; i < n; ++i) {
    for (long j = 0; j < n; ++j) {
      generators.push_back(compose(coordinate_op(ctx, i), d[j]));
    }
  }

  for (const auto& g : generators) {
    if (!commutator(h.op, g).is_zero()) report.euler_central = false;
  }
  for (long g = 0; g < ctx.group.order(); ++g) {
    if (!commutator(h.op, LocalizedOp::group_elem(ctx, g)).is_zero())
      report.euler_central = false;
  }

  // Spans of symbols of ell-fold generator products versus plain monomial
  // algebra on the products x_i y_j, both taken modulo multiples of the
  // Euler symbol r = sum_i x_i y_i.
  Poly r(2 * n);
  for (long i = 0; i < n; ++i) {
    std::vector<int> e(2 * n, 0);
    e[i] = 1;
    e[n + i] = 1;
    r = r + Poly::monomial(std::move(e), cyc(1));
  }

  std::vector<LocalizedOp> products = {LocalizedOp::identity_op(ctx)};
  std::vector<Poly> prev_symbols = {Poly::constant(2 * n, cyc(1))};
  std::vector<Poly> prev_monomials = prev_symbols;
  std::vector<Poly> z;
  for (long i = 0; i < n; ++i) {
    for (long j = 0; j < n; ++j) {
      std::vector<int> e(2 * n, 0);
      e[i] = 1;
      e[n + j] = 1;
      z.push_back(Poly::monomial(std::move(e), cyc(1)));
    }
  }

  for (long ell = 1; ell <= max_degree; ++ell) {
    std::vector<LocalizedOp> next;
    std::vector<Poly> symbols;
    for (const auto& p : products) {
      for (const auto& g : generators) {
        next.push_back(compose(p, g));
        symbols.push_back(top_symbol(ctx, next.back(), ell));
      }
    }
    std::vector<Poly> monomials;
    for (const auto& p : prev_monomials) {
      for (const auto& m : z) monomials.push_back(p * m);
    }

    std::vector<Poly> r_prev_sym;
    for (const auto& p : prev_symbols) r_prev_sym.push_back(r * p);
    std::vector<Poly> r_prev_mon;
    for (const auto& p : prev_monomials) r_prev_mon.push_back(r * p);

    long op_dim = poly_rank(symbols) - poly_rank(r_prev_sym);
    long oracle_dim = poly_rank(monomials) - poly_rank(r_prev_mon);
    report.op_dims.push_back(op_dim);
    report.oracle_dims.push_back(oracle_dim);
    if (op_dim != oracle_dim && report.failed_degree < 0) {
      report.failed_degree = ell;
    }
    products = std::move(next);
    prev_symbols = std::move(symbols);
    prev_monomials = std::move(monomials);
  }

  // h + rho_c - omega must be exactly sum_i x_i d_i - omega.
  LocalizedOp lhs =
      h.op + LocalizedOp::identity_op(ctx).scaled(h.rho - omega);
  LocalizedOp rhs = LocalizedOp::identity_op(ctx).scaled(cyc(-1) * omega);
  for (long i = 0; i < n; ++i) {
    rhs = rhs + compose(coordinate_op(ctx, i), LocalizedOp::deriv(ctx, i));
  }
  report.relation_symbol_ok = lhs == rhs;

  report.ok = report.euler_central && report.relation_symbol_ok &&
              report.failed_degree < 0;
  return report;
}

std::vector<Cyclotomic> verma_weights(const Cyclotomic& c_lambda, long n,
                                      long depth) {
  std::vector<Cyclotomic> out;
  for (long j = 0; j <= depth; ++j) {
    out.push_back(c_lambda - cyc(n) - cyc(j));
  }
  return out;
}

}  // namespace rca
