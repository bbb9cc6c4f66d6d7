#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "rca/matrix.hpp"

namespace rca {

// Thrown when a generated group would exceed the configured order cap.
struct cap_exceeded_error : std::runtime_error {
  explicit cap_exceeded_error(const std::string& what) : std::runtime_error(what) {}
};

struct GroupElement {
  CycMatrix matrix;
};

// A finite group of invertible matrices over cyclotomic numbers, generated by
// closure.  Element 0 is the identity; the rest appear in breadth-first
// discovery order, which makes every derived index deterministic.
class FiniteMatrixGroup {
 public:
  static FiniteMatrixGroup close(const std::vector<CycMatrix>& generators,
                                 long order_cap = 10000, long dim_hint = -1);

  long dim() const { return dim_; }
  long order() const { return static_cast<long>(elements_.size()); }
  long conductor() const { return conductor_; }
  const GroupElement& element(long i) const { return elements_[i]; }

  // Index of element(i) * element(j).
  long product(long i, long j) const;
  long inverse(long i) const { return inverses_[i]; }
  // Index of g h g^-1.
  long conjugate(long g, long h) const;

  // Conjugacy classes, each sorted ascending, ordered by smallest member.
  const std::vector<std::vector<long>>& classes() const { return classes_; }
  long class_of(long i) const { return class_of_[i]; }

  // -1 when the matrix is not an element.
  long index_of(const CycMatrix& m) const;

 private:
  FiniteMatrixGroup() = default;
  void build_tables();

  long dim_ = 0;
  long conductor_ = 1;
  std::vector<GroupElement> elements_;
  std::vector<std::vector<long>> hash_buckets_;  // open hash: hash % buckets
  std::vector<long> inverses_;
  std::vector<std::vector<long>> classes_;
  std::vector<long> class_of_;
  std::vector<long> mult_table_;  // order x order, empty when too large
};

FiniteMatrixGroup builtin_symmetric(long n);
FiniteMatrixGroup builtin_cyclic(long m);
FiniteMatrixGroup builtin_dihedral(long m);
// Direct product acting block-diagonally on the direct sum.
FiniteMatrixGroup block_product(const FiniteMatrixGroup& a, const FiniteMatrixGroup& b);

// A reflection: a non-identity element whose fixed space is a hyperplane.
struct ReflectionDatum {
  long element;          // index into the group
  CycVector root;        // covector cutting out the fixed hyperplane,
                         // first nonzero coordinate normalized to 1
  CycVector coroot;      // spans the moving line, scaled so root(coroot) = 2
  Cyclotomic eigenvalue; // eigenvalue on the span of root in the dual space
  long hyperplane;       // index into ReflectionSet::hyperplanes
};

struct ReflectionSet {
  std::vector<ReflectionDatum> data;
  std::vector<CycVector> hyperplanes;      // distinct normalized roots
  std::vector<std::vector<long>> classes;  // reflection indices, by conjugacy
};

std::vector<ReflectionDatum> reflections(const FiniteMatrixGroup& w);
ReflectionSet reflection_set(const FiniteMatrixGroup& w);

// Fixed locus of a reflection acting on projective space: the projectivized
// hyperplane plus the point cut out by the moving line.
struct ProjectiveFixedLocus {
  long element;
  CycVector hyperplane_covector;
  bool hyperplane_codim1;  // true whenever dim >= 2
  CycVector point;         // homogeneous coordinates of the coroot
  bool point_codim1;       // true exactly when dim == 2
};

std::vector<ProjectiveFixedLocus> projective_reflections(const FiniteMatrixGroup& w);

// A conjugation-equivariant parameter: one value per reflection.
class ParamC {
 public:
  ParamC() = default;
  static ParamC constant(const ReflectionSet& rs, const Cyclotomic& v);
  static ParamC by_class(const ReflectionSet& rs, const std::vector<Cyclotomic>& per_class);
  static ParamC by_reflection(std::vector<Cyclotomic> values);

  const Cyclotomic& value(long reflection_index) const { return values_[reflection_index]; }
  long size() const { return static_cast<long>(values_.size()); }
  bool is_equivariant(const ReflectionSet& rs) const;

 private:
  std::vector<Cyclotomic> values_;
};

}  // namespace rca
