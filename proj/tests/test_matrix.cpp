#include "rca/matrix.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using rca::Cyclotomic;
using rca::cyc;
using rca::CycMatrix;
using rca::rat;
using rca::Rational;

namespace {

long bounded(std::mt19937& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
}

CycMatrix random_rational_matrix(std::mt19937& rng, long n) {
  CycMatrix m(n, n);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j)
      m.at(i, j) = cyc(bounded(rng, -6, 6), bounded(rng, 1, 3));
  return m;
}

// Independent oracle: Laplace cofactor expansion along the first row.
Cyclotomic cofactor_det(const CycMatrix& m) {
  long n = m.rows();
  if (n == 1) return m.at(0, 0);
  Cyclotomic acc;
  for (long j = 0; j < n; ++j) {
    if (m.at(0, j).is_zero()) continue;
    CycMatrix minor(n - 1, n - 1);
    for (long r = 1; r < n; ++r) {
      long cc = 0;
      for (long c = 0; c < n; ++c) {
        if (c == j) continue;
        minor.at(r - 1, cc++) = m.at(r, c);
      }
    }
    Cyclotomic term = m.at(0, j) * cofactor_det(minor);
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

}  // namespace

TEST(Det, Identity) {
  EXPECT_EQ(CycMatrix::identity(3).det(), cyc(1));
}

TEST(Det, Swap) {
  CycMatrix m(2, 2);
  m.at(0, 1) = cyc(1);
  m.at(1, 0) = cyc(1);
  EXPECT_EQ(m.det(), cyc(-1));
}

TEST(Det, MatchesCofactorOracle) {
  std::mt19937 rng(411);
  for (int trial = 0; trial < 8; ++trial) {
    CycMatrix m = random_rational_matrix(rng, 4);
    EXPECT_EQ(m.det(), cofactor_det(m));
  }
}

TEST(Det, Multiplicative) {
  std::mt19937 rng(412);
  for (int trial = 0; trial < 6; ++trial) {
    CycMatrix a = random_rational_matrix(rng, 3);
    CycMatrix b = random_rational_matrix(rng, 3);
    EXPECT_EQ((a * b).det(), a.det() * b.det());
  }
}

TEST(Det, CyclotomicEntries) {
  // Rotation by zeta_3 in the regular embedding: det = zeta_3 * zeta_3^2 = 1.
  CycMatrix m(2, 2);
  m.at(0, 0) = Cyclotomic::root_of_unity(1, 3);
  m.at(1, 1) = Cyclotomic::root_of_unity(2, 3);
  EXPECT_EQ(m.det(), cyc(1));
}

TEST(Kernel, RankDeficientRational) {
  CycMatrix m(2, 2);
  m.at(0, 0) = cyc(1);
  m.at(0, 1) = cyc(1);
  m.at(1, 0) = cyc(2);
  m.at(1, 1) = cyc(2);
  auto basis = m.kernel();
  ASSERT_EQ(basis.size(), 1u);
  EXPECT_EQ(basis[0][0], cyc(-1));
  EXPECT_EQ(basis[0][1], cyc(1));
}

TEST(Kernel, VectorsAnnihilate) {
  std::mt19937 rng(413);
  for (int trial = 0; trial < 6; ++trial) {
    // Rectangular 3x5 forces a nontrivial kernel.
    CycMatrix m(3, 5);
    for (long i = 0; i < 3; ++i)
      for (long j = 0; j < 5; ++j)
        m.at(i, j) = cyc(bounded(rng, -4, 4), bounded(rng, 1, 2));
    auto basis = m.kernel();
    EXPECT_GE(basis.size(), 2u);
    for (const auto& v : basis) {
      auto mv = m.apply(v);
      for (const auto& entry : mv) EXPECT_TRUE(entry.is_zero());
    }
    EXPECT_EQ(static_cast<long>(basis.size()) + m.rank(), 5);
  }
}

TEST(Kernel, FullRankIsEmpty) {
  EXPECT_TRUE(CycMatrix::identity(4).kernel().empty());
}

TEST(Charpoly, DiagonalFrozen) {
  CycMatrix m(3, 3);
  m.at(0, 0) = cyc(1);
  m.at(1, 1) = cyc(2);
  m.at(2, 2) = cyc(3);
  auto p = m.charpoly();
  ASSERT_EQ(p.size(), 4u);
  EXPECT_EQ(p[0], cyc(-6));
  EXPECT_EQ(p[1], cyc(11));
  EXPECT_EQ(p[2], cyc(-6));
  EXPECT_EQ(p[3], cyc(1));
}

TEST(Charpoly, RotationMatrix) {
  CycMatrix m(2, 2);
  m.at(0, 1) = cyc(-1);
  m.at(1, 0) = cyc(1);
  auto p = m.charpoly();
  ASSERT_EQ(p.size(), 3u);
  EXPECT_EQ(p[0], cyc(1));
  EXPECT_EQ(p[1], cyc(0));
  EXPECT_EQ(p[2], cyc(1));
}

TEST(Charpoly, AgreesWithShiftedDeterminant) {
  std::mt19937 rng(414);
  for (int trial = 0; trial < 4; ++trial) {
    CycMatrix m = random_rational_matrix(rng, 3);
    auto p = m.charpoly();
    for (long t = -2; t <= 2; ++t) {
      Cyclotomic lhs;
      Cyclotomic tpow = cyc(1);
      for (const auto& coeff : p) {
        lhs = lhs + coeff * tpow;
        tpow = tpow * cyc(t);
      }
      CycMatrix shifted = CycMatrix::identity(3);
      shifted.scale_in_place(cyc(t));
      Cyclotomic rhs = (shifted - m).det();
      EXPECT_EQ(lhs, rhs);
    }
  }
}

TEST(Inverse, RoundTrip) {
  std::mt19937 rng(415);
  int done = 0;
  while (done < 5) {
    CycMatrix m = random_rational_matrix(rng, 3);
    if (m.det().is_zero()) continue;
    CycMatrix inv = m.inverse();
    EXPECT_TRUE((m * inv) == CycMatrix::identity(3));
    EXPECT_TRUE((inv * m) == CycMatrix::identity(3));
    ++done;
  }
}

TEST(Inverse, SingularThrows) {
  CycMatrix m(2, 2);
  m.at(0, 0) = cyc(1);
  m.at(0, 1) = cyc(2);
  m.at(1, 0) = cyc(2);
  m.at(1, 1) = cyc(4);
  EXPECT_THROW(m.inverse(), std::domain_error);
}

TEST(Numeric, SwapEigenvalues) {
  CycMatrix m(2, 2);
  m.at(0, 1) = cyc(1);
  m.at(1, 0) = cyc(1);
  auto ev = rca::numeric_eigenvalues(m);
  ASSERT_EQ(ev.size(), 2u);
  std::vector<double> re{ev[0].real(), ev[1].real()};
  std::sort(re.begin(), re.end());
  EXPECT_NEAR(re[0], -1.0, 1e-9);
  EXPECT_NEAR(re[1], 1.0, 1e-9);
  EXPECT_NEAR(ev[0].imag(), 0.0, 1e-9);
}
