#include "rca/group.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using rca::Cyclotomic;
using rca::cyc;
using rca::CycMatrix;
using rca::CycVector;
using rca::FiniteMatrixGroup;
using rca::rat;

namespace {

CycMatrix permutation_matrix(const std::vector<long>& image) {
  long n = static_cast<long>(image.size());
  CycMatrix m(n, n);
  for (long j = 0; j < n; ++j) m.at(image[j], j) = cyc(1);
  return m;
}

CycMatrix transposition3(long a, long b) {
  std::vector<long> img{0, 1, 2};
  std::swap(img[a], img[b]);
  return permutation_matrix(img);
}

// Independent oracle: grow the set of matrices until closed.
long naive_closure_order(std::vector<CycMatrix> gens, long dim) {
  std::vector<CycMatrix> elems{CycMatrix::identity(dim)};
  auto contains = [&](const CycMatrix& m) {
    return std::any_of(elems.begin(), elems.end(),
                       [&](const CycMatrix& e) { return e == m; });
  };
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<CycMatrix> found;
    for (const auto& e : elems)
      for (const auto& g : gens) {
        CycMatrix p = e * g;
        if (!contains(p) &&
            std::none_of(found.begin(), found.end(),
                         [&](const CycMatrix& f) { return f == p; }))
          found.push_back(p);
      }
    if (!found.empty()) {
      grew = true;
      for (auto& f : found) elems.push_back(std::move(f));
    }
  }
  return static_cast<long>(elems.size());
}

// Independent oracle: pairwise conjugacy partitioning.
long naive_class_count(const FiniteMatrixGroup& w) {
  long n = w.order();
  std::vector<bool> seen(n, false);
  long classes = 0;
  for (long i = 0; i < n; ++i) {
    if (seen[i]) continue;
    ++classes;
    for (long g = 0; g < n; ++g) seen[w.conjugate(g, i)] = true;
  }
  return classes;
}

std::multiset<std::size_t> class_sizes(const FiniteMatrixGroup& w) {
  std::multiset<std::size_t> sizes;
  for (const auto& cls : w.classes()) sizes.insert(cls.size());
  return sizes;
}

FiniteMatrixGroup sym3_group() {
  return FiniteMatrixGroup::close({transposition3(0, 1), transposition3(1, 2)}, 100);
}

}  // namespace

TEST(Close, SymmetricThreeFromTranspositions) {
  FiniteMatrixGroup w = sym3_group();
  EXPECT_EQ(w.order(), 6);
  EXPECT_EQ(w.classes().size(), 3u);
  EXPECT_EQ(class_sizes(w), (std::multiset<std::size_t>{1, 2, 3}));
  EXPECT_EQ(naive_closure_order({transposition3(0, 1), transposition3(1, 2)}, 3), 6);
  EXPECT_EQ(naive_class_count(w), 3);
}

TEST(Close, CyclicThree) {
  CycMatrix g(1, 1);
  g.at(0, 0) = Cyclotomic::root_of_unity(1, 3);
  FiniteMatrixGroup w = FiniteMatrixGroup::close({g}, 100);
  EXPECT_EQ(w.order(), 3);
  EXPECT_EQ(w.classes().size(), 3u);
}

TEST(Close, DihedralOrderEight) {
  CycMatrix r(2, 2), s(2, 2);
  r.at(0, 0) = Cyclotomic::root_of_unity(1, 4);
  r.at(1, 1) = Cyclotomic::root_of_unity(-1, 4);
  s.at(0, 1) = cyc(1);
  s.at(1, 0) = cyc(1);
  FiniteMatrixGroup w = FiniteMatrixGroup::close({r, s}, 100);
  EXPECT_EQ(w.order(), 8);
  EXPECT_EQ(w.classes().size(), 5u);
  EXPECT_EQ(naive_closure_order({r, s}, 2), 8);
  EXPECT_EQ(naive_class_count(w), 5);
}

TEST(Close, IdentityFirstAndClosed) {
  FiniteMatrixGroup w = sym3_group();
  EXPECT_TRUE(w.element(0).matrix == CycMatrix::identity(3));
  for (long i = 0; i < w.order(); ++i) {
    for (long j = 0; j < w.order(); ++j) {
      long p = w.product(i, j);
      ASSERT_GE(p, 0);
      EXPECT_TRUE(w.element(p).matrix == w.element(i).matrix * w.element(j).matrix);
    }
    long inv = w.inverse(i);
    EXPECT_EQ(w.product(i, inv), 0);
  }
}

TEST(Close, CapExceeded) {
  CycMatrix g(1, 1);
  g.at(0, 0) = Cyclotomic::root_of_unity(1, 5);
  EXPECT_THROW(FiniteMatrixGroup::close({g}, 3), rca::cap_exceeded_error);
}

TEST(Close, NonInvertibleGeneratorRejected) {
  CycMatrix z(2, 2);
  z.at(0, 0) = cyc(1);
  EXPECT_THROW(FiniteMatrixGroup::close({z}, 10), std::invalid_argument);
}

TEST(Close, TrivialGroupNeedsExplicitDim) {
  FiniteMatrixGroup w = FiniteMatrixGroup::close({}, 10, 2);
  EXPECT_EQ(w.order(), 1);
  EXPECT_EQ(w.dim(), 2);
  EXPECT_THROW(FiniteMatrixGroup::close({}, 10), std::invalid_argument);
}

TEST(Builtin, Families) {
  EXPECT_EQ(rca::builtin_symmetric(3).order(), 6);
  EXPECT_EQ(rca::builtin_cyclic(4).order(), 4);
  FiniteMatrixGroup d3 = rca::builtin_dihedral(3);
  EXPECT_EQ(d3.order(), 6);
  EXPECT_EQ(d3.classes().size(), 3u);
  EXPECT_EQ(class_sizes(d3), class_sizes(rca::builtin_symmetric(3)));
  EXPECT_EQ(rca::builtin_dihedral(4).order(), 8);
}

TEST(Builtin, BlockProduct) {
  FiniteMatrixGroup v4 =
      rca::block_product(rca::builtin_cyclic(2), rca::builtin_cyclic(2));
  EXPECT_EQ(v4.order(), 4);
  EXPECT_EQ(v4.dim(), 2);
  EXPECT_EQ(v4.classes().size(), 4u);
}

TEST(Reflections, SymmetricThreeOnC3) {
  FiniteMatrixGroup w = sym3_group();
  auto refl = rca::reflections(w);
  ASSERT_EQ(refl.size(), 3u);
  for (const auto& r : refl) {
    EXPECT_EQ(r.eigenvalue, cyc(-1));
    // alpha(coroot) = 2 exactly.
    Cyclotomic pairing;
    for (std::size_t i = 0; i < r.root.size(); ++i)
      pairing = pairing + r.root[i] * r.coroot[i];
    EXPECT_EQ(pairing, cyc(2));
  }
  // The transposition (12) has root x1 - x2 normalized to (1,-1,0).
  bool found = false;
  for (const auto& r : refl) {
    if (r.root == CycVector{cyc(1), cyc(-1), cyc(0)}) found = true;
  }
  EXPECT_TRUE(found);
}

TEST(Reflections, RankOneSignGroup) {
  CycMatrix g(1, 1);
  g.at(0, 0) = cyc(-1);
  FiniteMatrixGroup w = FiniteMatrixGroup::close({g}, 10);
  auto refl = rca::reflections(w);
  ASSERT_EQ(refl.size(), 1u);
  EXPECT_EQ(refl[0].root, CycVector{cyc(1)});
  EXPECT_EQ(refl[0].coroot, CycVector{cyc(2)});
  EXPECT_EQ(refl[0].eigenvalue, cyc(-1));
}

TEST(Reflections, CyclicThreeDualEigenvalues) {
  FiniteMatrixGroup w = rca::builtin_cyclic(3);
  auto refl = rca::reflections(w);
  ASSERT_EQ(refl.size(), 2u);
  // Elements are listed identity, g, g^2; the dual action inverts eigenvalues.
  EXPECT_EQ(refl[0].element, 1);
  EXPECT_EQ(refl[0].eigenvalue, Cyclotomic::root_of_unity(2, 3));
  EXPECT_EQ(refl[1].element, 2);
  EXPECT_EQ(refl[1].eigenvalue, Cyclotomic::root_of_unity(1, 3));
}

TEST(Reflections, SwapOnC2) {
  FiniteMatrixGroup w = rca::builtin_symmetric(2);
  auto refl = rca::reflections(w);
  ASSERT_EQ(refl.size(), 1u);
  EXPECT_EQ(refl[0].root, (CycVector{cyc(1), cyc(-1)}));
  EXPECT_EQ(refl[0].coroot, (CycVector{cyc(1), cyc(-1)}));
}

TEST(Reflections, RootIsDualEigenvector) {
  for (const FiniteMatrixGroup& w :
       {sym3_group(), rca::builtin_cyclic(4), rca::builtin_dihedral(4)}) {
    for (const auto& r : rca::reflections(w)) {
      // alpha composed with s^-1 equals lambda * alpha, exactly.
      const CycMatrix& sinv = w.element(w.inverse(r.element)).matrix;
      for (long j = 0; j < w.dim(); ++j) {
        Cyclotomic lhs;
        for (long i = 0; i < w.dim(); ++i) lhs = lhs + r.root[i] * sinv.at(i, j);
        EXPECT_EQ(lhs, r.eigenvalue * r.root[j]);
      }
    }
  }
}

TEST(Reflections, ConjugationStability) {
  FiniteMatrixGroup w = sym3_group();
  auto refl = rca::reflections(w);
  for (const auto& r : refl) {
    for (long g = 0; g < w.order(); ++g) {
      long conj = w.conjugate(g, r.element);
      bool listed = false;
      for (const auto& other : refl)
        if (other.element == conj) listed = true;
      EXPECT_TRUE(listed);
    }
  }
}

TEST(ProjectiveReflections, SwapOnC2) {
  auto loci = rca::projective_reflections(rca::builtin_symmetric(2));
  ASSERT_EQ(loci.size(), 1u);
  EXPECT_EQ(loci[0].hyperplane_covector, (CycVector{cyc(1), cyc(-1)}));
  EXPECT_EQ(loci[0].point, (CycVector{cyc(1), cyc(-1)}));
  EXPECT_TRUE(loci[0].hyperplane_codim1);
  EXPECT_TRUE(loci[0].point_codim1);
}

TEST(ProjectiveReflections, TrivialGroupEmpty) {
  FiniteMatrixGroup w = FiniteMatrixGroup::close({}, 10, 2);
  EXPECT_TRUE(rca::projective_reflections(w).empty());
}

TEST(ProjectiveReflections, TranspositionInP2) {
  auto loci = rca::projective_reflections(sym3_group());
  ASSERT_EQ(loci.size(), 3u);
  bool found = false;
  for (const auto& l : loci) {
    if (l.point == (CycVector{cyc(1), cyc(-1), cyc(0)})) {
      found = true;
      EXPECT_TRUE(l.hyperplane_codim1);
      EXPECT_FALSE(l.point_codim1);
    }
  }
  EXPECT_TRUE(found);
}

TEST(ParamC, ConstantIsEquivariant) {
  FiniteMatrixGroup w = sym3_group();
  auto rs = rca::reflection_set(w);
  rca::ParamC c = rca::ParamC::constant(rs, cyc(1, 4));
  EXPECT_TRUE(c.is_equivariant(rs));
  EXPECT_EQ(c.value(0), cyc(1, 4));
  EXPECT_EQ(c.size(), 3);
}

TEST(ParamC, NonEquivariantWeightsDetected) {
  FiniteMatrixGroup w = sym3_group();
  auto rs = rca::reflection_set(w);
  rca::ParamC c = rca::ParamC::by_reflection({cyc(1), cyc(1), cyc(0)});
  EXPECT_FALSE(c.is_equivariant(rs));
}

TEST(ParamC, ByClassAssignsWholeClasses) {
  FiniteMatrixGroup w = rca::builtin_dihedral(4);
  auto rs = rca::reflection_set(w);
  ASSERT_EQ(rs.classes.size(), 2u);
  rca::ParamC c = rca::ParamC::by_class(rs, {cyc(1, 2), cyc(1, 3)});
  EXPECT_TRUE(c.is_equivariant(rs));
  std::multiset<std::string> values;
  for (long i = 0; i < c.size(); ++i) values.insert(c.value(i).str());
  EXPECT_EQ(values.count("1/2"), 2u);
  EXPECT_EQ(values.count("1/3"), 2u);
}

TEST(ReflectionSet, DistinctHyperplanesDeduped) {
  // All nontrivial powers of diag(zeta_4) fix the same hyperplane {0}.
  auto rs = rca::reflection_set(rca::builtin_cyclic(4));
  EXPECT_EQ(rs.data.size(), 3u);
  EXPECT_EQ(rs.hyperplanes.size(), 1u);
  EXPECT_EQ(rs.classes.size(), 3u);
}
