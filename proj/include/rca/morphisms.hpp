#pragma once

#include "rca/group.hpp"

#include <string>
#include <vector>

namespace rca {

// Linear map phi from the source space to the target space commuting with
// the paired group actions.  The two groups are identified element-by-element
// (same list order), must have equal order, and phi must be surjective; all
// three conditions are validated at construction.
class LinearEquivariantMap {
 public:
  LinearEquivariantMap(FiniteMatrixGroup source, FiniteMatrixGroup target,
                       CycMatrix matrix);

  const FiniteMatrixGroup& source() const { return source_; }
  const FiniteMatrixGroup& target() const { return target_; }
  const CycMatrix& matrix() const { return matrix_; }
  const ReflectionSet& source_rs() const { return source_rs_; }
  const ReflectionSet& target_rs() const { return target_rs_; }

 private:
  FiniteMatrixGroup source_;
  FiniteMatrixGroup target_;
  CycMatrix matrix_;
  ReflectionSet source_rs_;
  ReflectionSet target_rs_;
};

// For every target reflection carrying a nonzero parameter, the preimage of
// its hyperplane must be fixed pointwise by the identified source element.
struct MelysReport {
  bool melys = true;
  std::vector<long> failing_reflections;  // indices into the target set
};

MelysReport is_melys(const LinearEquivariantMap& phi, const ParamC& c);

// Parameter on the source reflections: each source reflection accumulates
// the target values of same-element reflections whose root pulls back to its
// hyperplane; everything else gets zero.  Requires a melys input.
ParamC pullback_c(const LinearEquivariantMap& phi, const ParamC& c);

// Connection-form compatibility: the pulled root is a scalar multiple of the
// normalized source root (so its d log matches and the correction term h
// vanishes), and the reflection eigenvalue on covectors is preserved, making
// the coupling coefficients agree exactly.
struct PullbackFormReport {
  bool ok = true;
  bool lambda_preserved = true;
  bool h_zero = true;
  std::string detail;
};

PullbackFormReport pullbackform_check(const LinearEquivariantMap& phi,
                                      const ParamC& c);

// Identification of dilation-torus characters with twists: the character n
// acts on sections of O(n), so the map is the identity under this
// normalization.
Cyclotomic projective_twist(const Cyclotomic& chi);

}  // namespace rca
