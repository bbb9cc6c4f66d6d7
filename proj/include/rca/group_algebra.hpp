#pragma once

#include <complex>
#include <vector>

#include "rca/group.hpp"

namespace rca {

// Group-algebra element: one coefficient per group element index.
using AlgebraElement = CycVector;

AlgebraElement algebra_product(const FiniteMatrixGroup& w, const AlgebraElement& a,
                               const AlgebraElement& b);
bool is_central(const FiniteMatrixGroup& w, const AlgebraElement& a);

// Basis of the center: one indicator sum per conjugacy class, class order.
std::vector<AlgebraElement> class_sums(const FiniteMatrixGroup& w);

// Scalar sum over reflections of 2 c(s) / (1 - lambda_s).
Cyclotomic rho_c(const ReflectionSet& rs, const ParamC& c);

// Central elements controlling the spherical spectrum:
//   z  = sum_s 2 c(s) (1 - 1/(1 - lambda_s)) s
//   z0 = sum_s 2 c(s) / (1 - lambda_s) s
AlgebraElement central_z(const FiniteMatrixGroup& w, const ReflectionSet& rs,
                         const ParamC& c);
AlgebraElement central_z0(const FiniteMatrixGroup& w, const ReflectionSet& rs,
                          const ParamC& c);

// Matrix of multiplication by a central element on the class-sum basis.
CycMatrix center_mult_matrix(const FiniteMatrixGroup& w, const AlgebraElement& z);

// All integers m (m >= 0, or m >= 1 with positive_only) such that m is an
// eigenvalue of M + shift. Exact: scans determinants up to a norm bound.
std::vector<long> integer_eigen_members(const CycMatrix& m, const Cyclotomic& shift,
                                        bool positive_only);

// Floating approximations of a central element's eigenvalues; diagnostic only.
std::vector<std::complex<double>> numeric_central_spectrum(const FiniteMatrixGroup& w,
                                                           const AlgebraElement& z);

}  // namespace rca
