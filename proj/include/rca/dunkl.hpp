#pragma once

#include "rca/localized_op.hpp"

#include <string>
#include <vector>

namespace rca {

// Dunkl operator in the direction y: the y-derivative corrected by one
// divided-difference term per reflection,
//
//   D_y = d_y + sum_s k_s (alpha_s(y) / alpha_s) (s - 1),
//
// where k_s = 2 c(s) / (1 - lambda_s) and lambda_s is the nontrivial
// eigenvalue of s on covectors.  The parameter may be non-equivariant; the
// operators then simply fail to commute, which verify_relations detects.
LocalizedOp dunkl_op(const Arrangement& ctx, const CycVector& y,
                     const ParamC& c);

// Deformed Euler operator h = sum_i x_i d_i - rho_c with
// rho_c = sum_s 2 c(s) / (1 - lambda_s).
struct EulerElement {
  LocalizedOp op;
  Cyclotomic rho;
};

EulerElement euler_element(const Arrangement& ctx, const ParamC& c);

enum class VerifyMode { commutativity, cross, euler };

// Outcome of one relation check.  `detail` names the first failing pair and
// carries a printout of its residual.  Cross-commutators are only part of the
// contract when every reflection has order two; for other groups the result
// is reported through the informational fields and `ok` stays true.
struct RelationReport {
  bool ok = true;
  VerifyMode mode = VerifyMode::commutativity;
  std::string detail;
  bool informational_only = false;
  bool informational_holds = true;
};

RelationReport verify_relations(const Arrangement& ctx, const ParamC& c,
                                VerifyMode mode);

// Linear independence of the spanning family x^a D^b w, |a| + |b| <= degree.
// The rank is certified from below by exact evaluation at random rational
// points where no hyperplane vanishes; `ok` means full rank was reached.
struct PbwReport {
  long count = 0;
  long rank = 0;
  bool ok = false;
};

PbwReport pbw_independence(const Arrangement& ctx, const ParamC& c,
                           long degree, unsigned long seed = 12u);

// Checks on the subalgebra generated by the products x_i D_j:
//  - the Euler operator commutes with every generator and group element,
//  - in each degree ell <= max_degree the symbols of ell-fold generator
//    products span, modulo the Euler symbol, a space whose dimension matches
//    a brute-force count in the polynomial ring on x_i y_j modulo
//    sum_i x_i y_i,
//  - h + rho_c - omega equals sum_i x_i d_i - omega exactly.
struct DegreeZeroReport {
  bool ok = true;
  long failed_degree = -1;
  std::vector<long> op_dims;
  std::vector<long> oracle_dims;
  bool euler_central = true;
  bool relation_symbol_ok = true;
};

DegreeZeroReport degree_zero_checks(const Arrangement& ctx, const ParamC& c,
                                    const Cyclotomic& omega, long max_degree);

// Weights c_lambda - n - j for 0 <= j <= depth: the candidate eigenvalues
// along a lowest-weight tower starting at c_lambda - n.
std::vector<Cyclotomic> verma_weights(const Cyclotomic& c_lambda, long n,
                                      long depth);

}  // namespace rca
