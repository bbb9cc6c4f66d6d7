#include "rca/group_algebra.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

using rca::AlgebraElement;
using rca::cyc;
using rca::Cyclotomic;
using rca::CycMatrix;
using rca::FiniteMatrixGroup;
using rca::ParamC;
using rca::rat;
using rca::Rational;

namespace {

// Independent oracle: convolve coefficient vectors elementwise.
AlgebraElement naive_product(const FiniteMatrixGroup& w, const AlgebraElement& a,
                             const AlgebraElement& b) {
  AlgebraElement out(w.order());
  for (long i = 0; i < w.order(); ++i) {
    if (a[i].is_zero()) continue;
    for (long j = 0; j < w.order(); ++j) {
      if (b[j].is_zero()) continue;
      long k = w.product(i, j);
      out[k] = out[k] + a[i] * b[j];
    }
  }
  return out;
}

long class_index_of_transpositions(const FiniteMatrixGroup& s3) {
  // The class of size 3.
  for (std::size_t k = 0; k < s3.classes().size(); ++k)
    if (s3.classes()[k].size() == 3) return static_cast<long>(k);
  return -1;
}

}  // namespace

TEST(ClassSums, SymmetricThreeSupports) {
  FiniteMatrixGroup w = rca::builtin_symmetric(3);
  auto sums = rca::class_sums(w);
  ASSERT_EQ(sums.size(), 3u);
  std::multiset<long> sizes;
  for (const auto& s : sums) {
    long support = 0;
    for (const auto& v : s) {
      if (!v.is_zero()) {
        EXPECT_EQ(v, cyc(1));
        ++support;
      }
    }
    sizes.insert(support);
    EXPECT_TRUE(rca::is_central(w, s));
  }
  EXPECT_EQ(sizes, (std::multiset<long>{1, 2, 3}));
}

TEST(ClassSums, TranspositionSquareInS3) {
  FiniteMatrixGroup w = rca::builtin_symmetric(3);
  auto sums = rca::class_sums(w);
  long t = class_index_of_transpositions(w);
  long e = 0, c3 = -1;
  for (std::size_t k = 0; k < sums.size(); ++k)
    if (static_cast<long>(k) != t && static_cast<long>(k) != e) c3 = static_cast<long>(k);
  AlgebraElement tt = rca::algebra_product(w, sums[t], sums[t]);
  EXPECT_TRUE(tt == naive_product(w, sums[t], sums[t]));
  // T*T = 3e + 3C where C is the three-cycle class sum.
  AlgebraElement expected(w.order());
  for (long i = 0; i < w.order(); ++i)
    expected[i] = cyc(3) * (sums[e][i] + sums[c3][i]);
  EXPECT_TRUE(tt == expected);
  // T*C = 2T.
  AlgebraElement tc = rca::algebra_product(w, sums[t], sums[c3]);
  AlgebraElement two_t(w.order());
  for (long i = 0; i < w.order(); ++i) two_t[i] = cyc(2) * sums[t][i];
  EXPECT_TRUE(tc == two_t);
}

TEST(RhoC, SmallGroups) {
  {
    FiniteMatrixGroup w = rca::builtin_symmetric(2);
    auto rs = rca::reflection_set(w);
    ParamC c = ParamC::constant(rs, cyc(1, 4));
    EXPECT_EQ(rca::rho_c(rs, c), cyc(1, 4));
  }
  {
    FiniteMatrixGroup w = rca::builtin_symmetric(3);
    auto rs = rca::reflection_set(w);
    ParamC c = ParamC::constant(rs, cyc(2, 5));
    EXPECT_EQ(rca::rho_c(rs, c), cyc(6, 5));
  }
  {
    // Cyclic of order 3: rho_c = 2c/(1-zeta^2) + 2c/(1-zeta), rational for equal c.
    FiniteMatrixGroup w = rca::builtin_cyclic(3);
    auto rs = rca::reflection_set(w);
    ParamC c = ParamC::constant(rs, cyc(1));
    // 2/(1-z) + 2/(1-z^2) sums to 2 by the standard partial-fraction identity.
    EXPECT_EQ(rca::rho_c(rs, c), cyc(2));
  }
}

TEST(CentralElements, DefinitionAndCentrality) {
  for (const FiniteMatrixGroup& w :
       {rca::builtin_symmetric(3), rca::builtin_cyclic(4), rca::builtin_dihedral(4)}) {
    auto rs = rca::reflection_set(w);
    std::vector<Cyclotomic> per_class;
    for (std::size_t k = 0; k < rs.classes.size(); ++k)
      per_class.push_back(cyc(static_cast<long>(k) + 1, 3));
    ParamC c = ParamC::by_class(rs, per_class);
    AlgebraElement z = rca::central_z(w, rs, c);
    AlgebraElement z0 = rca::central_z0(w, rs, c);
    EXPECT_TRUE(rca::is_central(w, z));
    EXPECT_TRUE(rca::is_central(w, z0));
    // z + z0 = sum over reflections of 2 c(s) s.
    AlgebraElement direct(w.order());
    for (std::size_t i = 0; i < rs.data.size(); ++i) {
      long e = rs.data[i].element;
      direct[e] = direct[e] + cyc(2) * c.value(static_cast<long>(i));
    }
    for (long i = 0; i < w.order(); ++i) EXPECT_EQ(z[i] + z0[i], direct[i]);
  }
}

TEST(CenterMultMatrix, IdentityElement) {
  FiniteMatrixGroup w = rca::builtin_symmetric(3);
  AlgebraElement e(w.order());
  e[0] = cyc(1);
  EXPECT_TRUE(rca::center_mult_matrix(w, e) == CycMatrix::identity(3));
}

TEST(CenterMultMatrix, SignGroupZ) {
  FiniteMatrixGroup w = rca::builtin_cyclic(2);
  auto rs = rca::reflection_set(w);
  ParamC c = ParamC::constant(rs, cyc(1, 3));
  AlgebraElement z = rca::central_z(w, rs, c);
  // z = c * s, and multiplication by it swaps the classes {e}, {s}.
  CycMatrix m = rca::center_mult_matrix(w, z);
  ASSERT_EQ(m.rows(), 2);
  EXPECT_EQ(m.at(0, 0), cyc(0));
  EXPECT_EQ(m.at(1, 0), cyc(1, 3));
  EXPECT_EQ(m.at(0, 1), cyc(1, 3));
  EXPECT_EQ(m.at(1, 1), cyc(0));
}

TEST(CenterMultMatrix, TranspositionSumCharpoly) {
  FiniteMatrixGroup w = rca::builtin_symmetric(3);
  auto sums = rca::class_sums(w);
  long t = class_index_of_transpositions(w);
  CycMatrix m = rca::center_mult_matrix(w, sums[t]);
  // Characteristic polynomial t^3 - 9t, i.e. eigenvalues {3, -3, 0}.
  auto cp = m.charpoly();
  ASSERT_EQ(cp.size(), 4u);
  EXPECT_EQ(cp[0], cyc(0));
  EXPECT_EQ(cp[1], cyc(-9));
  EXPECT_EQ(cp[2], cyc(0));
  EXPECT_EQ(cp[3], cyc(1));
}

TEST(CenterMultMatrix, NonCentralRejected) {
  FiniteMatrixGroup w = rca::builtin_symmetric(3);
  AlgebraElement bad(w.order());
  bad[1] = cyc(1);  // a single transposition is not central
  EXPECT_THROW(rca::center_mult_matrix(w, bad), std::invalid_argument);
}

TEST(IntegerEigenMembers, FrozenSwapMatrix) {
  CycMatrix m(2, 2);
  m.at(0, 1) = cyc(1);
  m.at(1, 0) = cyc(1);
  // Eigenvalues {1, -1}.
  EXPECT_EQ(rca::integer_eigen_members(m, cyc(0), false), (std::vector<long>{1}));
  EXPECT_EQ(rca::integer_eigen_members(m, cyc(0), true), (std::vector<long>{1}));
  EXPECT_EQ(rca::integer_eigen_members(m, cyc(3, 2), false), (std::vector<long>{}));
  EXPECT_EQ(rca::integer_eigen_members(m, cyc(-1), false), (std::vector<long>{0}));
  EXPECT_EQ(rca::integer_eigen_members(m, cyc(-1), true), (std::vector<long>{}));
  EXPECT_EQ(rca::integer_eigen_members(m, cyc(2), false), (std::vector<long>{1, 3}));
}

TEST(IntegerEigenMembers, ConjugatedDiagonalOracle) {
  std::mt19937 rng(2024);
  auto draw = [&](long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
  };
  for (int trial = 0; trial < 20; ++trial) {
    // Known spectrum: diagonal entries, conjugated by unit-determinant shears.
    std::vector<Rational> diag{rat(draw(-3, 3)), rat(draw(-3, 3), 2), rat(draw(0, 5))};
    CycMatrix d(3, 3);
    for (int i = 0; i < 3; ++i) d.at(i, i) = Cyclotomic(diag[i]);
    CycMatrix p = CycMatrix::identity(3);
    for (int k = 0; k < 4; ++k) {
      CycMatrix shear = CycMatrix::identity(3);
      long i = draw(0, 2), j = draw(0, 2);
      if (i != j) shear.at(i, j) = cyc(draw(-2, 2));
      p = p * shear;
    }
    CycMatrix m = p * d * p.inverse();
    Rational shift = rat(draw(-2, 2), draw(1, 2));
    auto hits = rca::integer_eigen_members(m, Cyclotomic(shift), false);
    std::vector<long> expected;
    for (const auto& ev : diag) {
      Rational v = ev + shift;
      if (rca::rat_is_integer(v) && v >= 0) {
        long n = static_cast<long>(v.get_num().get_si());
        if (std::find(expected.begin(), expected.end(), n) == expected.end())
          expected.push_back(n);
      }
    }
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(hits, expected);
  }
}

TEST(NumericCentralSpectrum, TranspositionSum) {
  FiniteMatrixGroup w = rca::builtin_symmetric(3);
  auto sums = rca::class_sums(w);
  long t = class_index_of_transpositions(w);
  auto spec = rca::numeric_central_spectrum(w, sums[t]);
  ASSERT_EQ(spec.size(), 3u);
  EXPECT_NEAR(spec[0].real(), -3.0, 1e-9);
  EXPECT_NEAR(spec[1].real(), 0.0, 1e-9);
  EXPECT_NEAR(spec[2].real(), 3.0, 1e-9);
}
