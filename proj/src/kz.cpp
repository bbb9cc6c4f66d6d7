#include "rca/kz.hpp"

#include <sstream>
#include <stdexcept>

namespace rca {

namespace {

Cyclotomic coupling(const ReflectionDatum& r, const Cyclotomic& c) {
  return cyc(2) * c * (cyc(1) - r.eigenvalue).inverse();
}

// nu applied to g as a derivation: sum_i nu_i dg/dx_i.
Poly field_apply(const VectorField& nu, const Poly& g) {
  Poly out(g.nvars());
  for (std::size_t i = 0; i < nu.size(); ++i) {
    out = out + nu[i] * g.derivative(static_cast<long>(i));
  }
  return out;
}

// Pushforward g.nu, the field with (g.nu)(g.f) = g.(nu(f)).
VectorField pushforward(const Arrangement& ctx, long g, const VectorField& nu) {
  long n = ctx.dim();
  const CycMatrix& a = ctx.group.element(g).matrix;
  const CycMatrix& ainv = ctx.inverse_matrix[g];
  VectorField out;
  for (long i = 0; i < n; ++i) {
    Poly comp(n);
    for (long j = 0; j < n; ++j) {
      if (a.at(i, j).is_zero()) continue;
      comp = comp + nu[j].composed_with_matrix(ainv).scaled(a.at(i, j));
    }
    out.push_back(std::move(comp));
  }
  return out;
}

VectorField lie_bracket(const VectorField& a, const VectorField& b) {
  VectorField out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    out.push_back(field_apply(a, b[i]) - field_apply(b, a[i]));
  }
  return out;
}

// D_nu = sum_i nu_i D_i with the coefficients on the left.
LocalizedOp dunkl_field_op(const Arrangement& ctx,
                           const std::vector<LocalizedOp>& d,
                           const VectorField& nu) {
  LocalizedOp out = LocalizedOp::zero(ctx);
  for (std::size_t i = 0; i < nu.size(); ++i) {
    if (nu[i].is_zero()) continue;
    out = out + compose(LocalizedOp::from_poly(ctx, nu[i]), d[i]);
  }
  return out;
}

std::string field_str(const VectorField& nu) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < nu.size(); ++i) {
    if (i) os << ", ";
    os << nu[i].str();
  }
  os << ")";
  return os.str();
}

}  // namespace

LogOneForm kz_form(const Arrangement& ctx, const ParamC& c) {
  if (c.size() != static_cast<long>(ctx.rs.data.size()))
    throw std::invalid_argument("parameter count does not match reflections");
  LogOneForm form;
  for (std::size_t s = 0; s < ctx.rs.data.size(); ++s) {
    const auto& r = ctx.rs.data[s];
    Cyclotomic k = coupling(r, c.value(static_cast<long>(s)));
    if (k.is_zero()) continue;
    form.terms.push_back(LogTerm{k, r.hyperplane, r.element});
  }
  return form;
}

bool GroupTwoForm::is_zero() const {
  for (const auto& [element, grid] : components) {
    for (const auto& row : grid) {
      for (const auto& p : row) {
        if (!p.is_zero()) return false;
      }
    }
  }
  return true;
}

GroupTwoForm curvature(const Arrangement& ctx, const LogOneForm& form) {
  long n = ctx.dim();
  long nh = ctx.hyperplane_count();
  GroupTwoForm out;
  for (std::size_t i = 0; i < form.terms.size(); ++i) {
    for (std::size_t j = 0; j < form.terms.size(); ++j) {
      const LogTerm& s = form.terms[i];
      const LogTerm& t = form.terms[j];
      // d log alpha wedge d log alpha vanishes on a shared hyperplane.
      if (s.hyperplane == t.hyperplane) continue;
      long element = ctx.group.product(s.element, t.element);
      // (prod_h alpha_h)^2 / (alpha_s alpha_t), the cleared numerator factor.
      Poly factor = Poly::constant(n, s.coeff * t.coeff);
      for (long h = 0; h < nh; ++h) {
        int e = 2 - (h == s.hyperplane ? 1 : 0) - (h == t.hyperplane ? 1 : 0);
        for (int r = 0; r < e; ++r) factor = factor * ctx.alpha[h];
      }
      auto it = out.components.find(element);
      if (it == out.components.end()) {
        it = out.components
                 .emplace(element, std::vector<std::vector<Poly>>(
                                       n, std::vector<Poly>(n, Poly(n))))
                 .first;
      }
      const CycVector& sa = ctx.rs.hyperplanes[s.hyperplane];
      const CycVector& ta = ctx.rs.hyperplanes[t.hyperplane];
      for (long k = 0; k < n; ++k) {
        for (long l = k + 1; l < n; ++l) {
          Cyclotomic wedge = sa[k] * ta[l] - sa[l] * ta[k];
          if (wedge.is_zero()) continue;
          it->second[k][l] = it->second[k][l] + factor.scaled(wedge);
        }
      }
    }
  }
  for (auto it = out.components.begin(); it != out.components.end();) {
    bool any = false;
    auto& grid = it->second;
    for (long k = 0; k < n; ++k) {
      for (long l = k + 1; l < n; ++l) {
        if (grid[k][l].is_zero()) continue;
        any = true;
        grid[l][k] = grid[k][l].scaled(cyc(-1));
      }
    }
    it = any ? std::next(it) : out.components.erase(it);
  }
  return out;
}

FlatnessReport is_flat(const Arrangement& ctx, const ParamC& c) {
  GroupTwoForm curv = curvature(ctx, kz_form(ctx, c));
  FlatnessReport report;
  for (const auto& [element, grid] : curv.components) {
    for (long k = 0; k < ctx.dim(); ++k) {
      for (long l = k + 1; l < ctx.dim(); ++l) {
        if (grid[k][l].is_zero()) continue;
        report.flat = false;
        report.witness = FlatnessWitness{element, k, l, grid[k][l]};
        return report;
      }
    }
  }
  return report;
}

VectorField xi_form(const Arrangement& ctx, const VectorField& nu1,
                    const VectorField& nu2, const ReflectionDatum& refl) {
  long n = ctx.dim();
  if (static_cast<long>(nu1.size()) != n ||
      static_cast<long>(nu2.size()) != n)
    throw std::invalid_argument("vector field has wrong dimension");
  const Poly& alpha = ctx.alpha[refl.hyperplane];
  Poly p1 = field_apply(nu1, alpha);
  Poly p2 = field_apply(nu2, alpha);
  VectorField m1 = pushforward(ctx, refl.element, nu1);
  VectorField m2 = pushforward(ctx, refl.element, nu2);
  VectorField out;
  for (long i = 0; i < n; ++i) {
    Poly numer = p1 * (m2[i] - nu2[i]) - p2 * (m1[i] - nu1[i]);
    try {
      out.push_back(numer.divide_exact(alpha));
    } catch (const std::domain_error&) {
      throw std::logic_error("reflection pairing failed to be regular");
    }
  }
  return out;
}

PresentationReport presentation_check(const Arrangement& ctx, const ParamC& c,
                                      long degree_cap) {
  long n = ctx.dim();
  PresentationReport report;
  FlatnessReport flatness = is_flat(ctx, c);
  bool flat = flatness.flat;
  bool witness_hit = flat;

  std::vector<LocalizedOp> d;
  for (long i = 0; i < n; ++i) {
    CycVector y(n);
    y[i] = cyc(1);
    d.push_back(dunkl_op(ctx, y, c));
  }

  // Monomial-coefficient fields x^m d/dx_i up to the degree cap.
  std::vector<VectorField> fields;
  std::vector<int> exps(n, 0);
  while (true) {
    long total = 0;
    for (int e : exps) total += e;
    if (total <= degree_cap) {
      for (long i = 0; i < n; ++i) {
        VectorField v(n, Poly(n));
        v[i] = Poly::monomial(exps, cyc(1));
        fields.push_back(std::move(v));
      }
    }
    long pos = n - 1;
    while (pos >= 0) {
      ++exps[pos];
      total = 0;
      for (int e : exps) total += e;
      if (total <= degree_cap) break;
      exps[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  if (static_cast<long>(fields.size()) > 60)
    throw cap_exceeded_error("too many test fields at this degree cap");

  std::vector<int> no_deriv(n, 0);

  // Function commutators: [D_nu, g] against the closed form, for the
  // coordinates and the arrangement roots.
  std::vector<Poly> test_fns;
  for (long i = 0; i < n; ++i) test_fns.push_back(Poly::variable(n, i));
  for (const auto& a : ctx.alpha) test_fns.push_back(a);
  for (const auto& nu : fields) {
    LocalizedOp dn = dunkl_field_op(ctx, d, nu);
    for (const auto& g : test_fns) {
      LocalizedOp lhs =
          commutator(dn, LocalizedOp::from_poly(ctx, g));
      LocalizedOp rhs = LocalizedOp::from_poly(ctx, field_apply(nu, g));
      for (std::size_t s = 0; s < ctx.rs.data.size(); ++s) {
        const auto& r = ctx.rs.data[s];
        Cyclotomic k = coupling(r, c.value(static_cast<long>(s)));
        if (k.is_zero()) continue;
        Poly moved = g.composed_with_matrix(ctx.inverse_matrix[r.element]);
        std::vector<int> den(ctx.hyperplane_count(), 0);
        den[r.hyperplane] = 1;
        RationalFunction coeff{
            field_apply(nu, ctx.alpha[r.hyperplane]).scaled(k) * (moved - g),
            den};
        rf_reduce(ctx, coeff);
        rhs = rhs + LocalizedOp::from_term(ctx, no_deriv, r.element, coeff);
      }
      if (!(lhs == rhs) && report.dcom_ok) {
        report.dcom_ok = false;
        report.detail = "function commutator failed for nu = " +
                        field_str(nu) + ", g = " + g.str();
      }
    }
  }

  // Field commutators and the curvature pairing.
  for (std::size_t p = 0; p < fields.size(); ++p) {
    for (std::size_t q = p + 1; q < fields.size(); ++q) {
      const VectorField& nu1 = fields[p];
      const VectorField& nu2 = fields[q];
      LocalizedOp residual =
          commutator(dunkl_field_op(ctx, d, nu1), dunkl_field_op(ctx, d, nu2)) -
          dunkl_field_op(ctx, d, lie_bracket(nu1, nu2));
      for (std::size_t s = 0; s < ctx.rs.data.size(); ++s) {
        const auto& r = ctx.rs.data[s];
        Cyclotomic k = coupling(r, c.value(static_cast<long>(s)));
        if (k.is_zero()) continue;
        VectorField xi = xi_form(ctx, nu1, nu2, r);
        residual = residual -
                   compose(dunkl_field_op(ctx, d, xi),
                           LocalizedOp::group_elem(ctx, r.element)).scaled(k);
      }
      if (!residual.is_zero()) {
        if (report.fieldcom_ok) {
          report.fieldcom_ok = false;
          if (report.detail.empty()) {
            report.detail = "field commutator residual nonzero for nu1 = " +
                            field_str(nu1) + ", nu2 = " + field_str(nu2);
          }
        }
        if (!flat && flatness.witness.has_value()) {
          for (const auto& [key, rf] : residual.terms()) {
            if (key.second == flatness.witness->element) witness_hit = true;
          }
        }
      }
    }
  }

  report.witness_ok = witness_hit;
  report.matches_flatness = report.fieldcom_ok == flat;
  report.ok = report.dcom_ok && report.matches_flatness && report.witness_ok;
  return report;
}

}  // namespace rca
