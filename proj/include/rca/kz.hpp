#pragma once

#include "rca/dunkl.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace rca {

// Logarithmic connection form sum_s k_s (d log alpha_s) tensor s with
// k_s = 2 c(s) / (1 - lambda_s).  Terms with k_s = 0 are dropped.
struct LogTerm {
  Cyclotomic coeff;
  long hyperplane = -1;
  long element = -1;
};

struct LogOneForm {
  std::vector<LogTerm> terms;
};

LogOneForm kz_form(const Arrangement& ctx, const ParamC& c);

// Group-algebra-valued two-form: for each group element a full n x n
// antisymmetric grid of numerators over the common denominator
// (product of all arrangement roots) squared.
struct GroupTwoForm {
  std::map<long, std::vector<std::vector<Poly>>> components;
  bool is_zero() const;
};

GroupTwoForm curvature(const Arrangement& ctx, const LogOneForm& form);

// Wedge square of the connection form, with the first nonzero numerator as
// certificate when the connection fails to be flat.
struct FlatnessWitness {
  long element;
  long k;
  long l;
  Poly numerator;
};

struct FlatnessReport {
  bool flat = true;
  std::optional<FlatnessWitness> witness;
};

FlatnessReport is_flat(const Arrangement& ctx, const ParamC& c);

// Polynomial vector field: one coefficient per coordinate direction.
using VectorField = std::vector<Poly>;

// The reflection pairing
//   Xi_s(nu1, nu2) = (nu1(alpha)/alpha)(s.nu2 - nu2)
//                  - (nu2(alpha)/alpha)(s.nu1 - nu1),
// which is regular: the apparent pole along alpha cancels exactly.  A
// division failure here signals an implementation fault and throws.
VectorField xi_form(const Arrangement& ctx, const VectorField& nu1,
                    const VectorField& nu2, const ReflectionDatum& refl);

// Structure-relation audit on polynomial vector fields of coefficient degree
// at most degree_cap:
//  - the function commutator [D_nu, g] always matches its closed form,
//  - the field commutator residual
//      [D_nu1, D_nu2] - D_[nu1,nu2] - sum_s k_s D_{Xi_s(nu1,nu2)} s
//    vanishes exactly when the connection is flat,
//  - off the flat locus the residual is supported on the curvature: some
//    residual carries a nonzero term at the flatness witness element.
struct PresentationReport {
  bool ok = true;
  bool dcom_ok = true;
  bool fieldcom_ok = true;
  bool matches_flatness = true;
  bool witness_ok = true;
  std::string detail;
};

PresentationReport presentation_check(const Arrangement& ctx, const ParamC& c,
                                      long degree_cap);

}  // namespace rca
