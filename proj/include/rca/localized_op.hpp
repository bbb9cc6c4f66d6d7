#pragma once

#include <map>
#include <utility>
#include <vector>

#include "rca/group.hpp"
#include "rca/poly.hpp"

namespace rca {

// A reflection group together with everything operator algebra needs about
// its hyperplane arrangement: the root forms and, for every group element g,
// how composing with g^-1 permutes and rescales them:
//   alpha_h(g^-1 x) = scalar[g][h] * alpha_{perm[g][h]}(x).
struct Arrangement {
  FiniteMatrixGroup group;
  ReflectionSet rs;
  std::vector<Poly> alpha;
  std::vector<CycMatrix> inverse_matrix;       // matrix of g^-1, per element
  std::vector<std::vector<long>> perm;
  std::vector<std::vector<Cyclotomic>> scalar;

  long dim() const { return group.dim(); }
  long hyperplane_count() const { return static_cast<long>(alpha.size()); }
};

Arrangement make_arrangement(FiniteMatrixGroup w);

// Quotient of a polynomial by a monomial in the hyperplane forms. Reduced:
// no root divides the numerator while its exponent is positive.
struct RationalFunction {
  Poly num;
  std::vector<int> den;  // exponent per hyperplane
};

RationalFunction rf_zero(const Arrangement& ctx);
RationalFunction rf_from_poly(const Arrangement& ctx, Poly p);
void rf_reduce(const Arrangement& ctx, RationalFunction& f);
bool rf_is_zero(const RationalFunction& f);
bool rf_equal(const RationalFunction& a, const RationalFunction& b);
RationalFunction rf_add(const Arrangement& ctx, const RationalFunction& a,
                        const RationalFunction& b);
RationalFunction rf_scale(const RationalFunction& f, const Cyclotomic& c);
RationalFunction rf_mul_poly(const Arrangement& ctx, const RationalFunction& f,
                             const Poly& p);
RationalFunction rf_mul(const Arrangement& ctx, const RationalFunction& a,
                        const RationalFunction& b);
RationalFunction rf_derivative(const Arrangement& ctx, const RationalFunction& f,
                               long i);
// The function f(g^-1 x): group action on the localized ring.
RationalFunction rf_group_transform(const Arrangement& ctx, const RationalFunction& f,
                                    long g);

// Element of C[V] tensor CW: one polynomial per group element index.
class WPoly {
 public:
  explicit WPoly(long nvars = 0) : nvars_(nvars) {}
  static WPoly from_poly(Poly p, long elem = 0);

  long nvars() const { return nvars_; }
  const std::map<long, Poly>& components() const { return comp_; }
  Poly component(long elem) const;
  void set_component(long elem, Poly p);
  bool is_zero() const { return comp_.empty(); }
  bool operator==(const WPoly& o) const { return nvars_ == o.nvars_ && comp_ == o.comp_; }
  bool operator!=(const WPoly& o) const { return !(*this == o); }

 private:
  long nvars_;
  std::map<long, Poly> comp_;
};

// Operator in normal form: sum of terms rf(x) * d^k * w, keyed by
// (derivative multi-index, group element).  All combining operations require
// both operands to share one Arrangement object.
class LocalizedOp {
 public:
  using Key = std::pair<std::vector<int>, long>;

  static LocalizedOp zero(const Arrangement& ctx);
  static LocalizedOp identity_op(const Arrangement& ctx);
  static LocalizedOp from_poly(const Arrangement& ctx, Poly p);
  static LocalizedOp deriv(const Arrangement& ctx, long i);
  static LocalizedOp group_elem(const Arrangement& ctx, long g);
  static LocalizedOp from_term(const Arrangement& ctx, std::vector<int> deriv,
                               long elem, RationalFunction rf);

  const Arrangement& ctx() const { return *ctx_; }
  const std::map<Key, RationalFunction>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool operator==(const LocalizedOp& o) const;
  bool operator!=(const LocalizedOp& o) const { return !(*this == o); }

  LocalizedOp operator-() const;
  friend LocalizedOp operator+(const LocalizedOp& a, const LocalizedOp& b);
  friend LocalizedOp operator-(const LocalizedOp& a, const LocalizedOp& b);
  LocalizedOp scaled(const Cyclotomic& c) const;

  friend LocalizedOp compose(const LocalizedOp& a, const LocalizedOp& b);

 private:
  explicit LocalizedOp(const Arrangement* ctx) : ctx_(ctx) {}
  void add_term(std::vector<int> deriv, long elem, RationalFunction rf);

  const Arrangement* ctx_;
  std::map<Key, RationalFunction> t_;
};

LocalizedOp compose(const LocalizedOp& a, const LocalizedOp& b);
LocalizedOp commutator(const LocalizedOp& a, const LocalizedOp& b);
WPoly apply(const LocalizedOp& op, const WPoly& f);
Poly apply(const LocalizedOp& op, const Poly& f);

}  // namespace rca
