#include "rca/morphisms.hpp"

#include <gtest/gtest.h>

using rca::cyc;
using rca::Cyclotomic;
using rca::CycMatrix;
using rca::FiniteMatrixGroup;
using rca::LinearEquivariantMap;
using rca::ParamC;

namespace {

CycMatrix diag_group_gen(std::vector<Cyclotomic> d) {
  CycMatrix m(static_cast<long>(d.size()), static_cast<long>(d.size()));
  for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
  return m;
}

CycMatrix row_map(std::vector<std::vector<long>> rows) {
  CycMatrix m(static_cast<long>(rows.size()),
              static_cast<long>(rows[0].size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      m.at(i, j) = cyc(rows[i][j]);
  return m;
}

// phi(x, y) = x between the two faithful Z/2 actions.
LinearEquivariantMap projection_example() {
  FiniteMatrixGroup source =
      FiniteMatrixGroup::close({diag_group_gen({cyc(-1), cyc(1)})});
  FiniteMatrixGroup target = rca::builtin_cyclic(2);
  return LinearEquivariantMap(source, target, row_map({{1, 0}}));
}

// Same projection, but the source flips both coordinates.
LinearEquivariantMap antipodal_example() {
  FiniteMatrixGroup source =
      FiniteMatrixGroup::close({diag_group_gen({cyc(-1), cyc(-1)})});
  FiniteMatrixGroup target = rca::builtin_cyclic(2);
  return LinearEquivariantMap(source, target, row_map({{1, 0}}));
}

}  // namespace

TEST(EquivariantMap, ConstructionValidation) {
  FiniteMatrixGroup source =
      FiniteMatrixGroup::close({diag_group_gen({cyc(-1), cyc(1)})});
  FiniteMatrixGroup target = rca::builtin_cyclic(2);
  // phi(x, y) = y does not intertwine the actions.
  EXPECT_THROW(LinearEquivariantMap(source, target, row_map({{0, 1}})),
               std::invalid_argument);
  // The zero map is equivariant but not surjective.
  EXPECT_THROW(LinearEquivariantMap(source, target, row_map({{0, 0}})),
               std::invalid_argument);
  // Groups of different order cannot share an element identification.
  EXPECT_THROW(LinearEquivariantMap(rca::builtin_cyclic(3), target,
                                    row_map({{1}})),
               std::invalid_argument);
}

TEST(IsMelys, IdentityMapAlways) {
  FiniteMatrixGroup w = rca::builtin_symmetric(3);
  LinearEquivariantMap id(w, w, row_map({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  auto rs = rca::reflection_set(w);
  EXPECT_TRUE(rca::is_melys(id, ParamC::constant(rs, cyc(1, 2))).melys);
  EXPECT_TRUE(rca::is_melys(id, ParamC::constant(rs, cyc(0))).melys);
}

TEST(IsMelys, ProjectionOntoFixedLine) {
  LinearEquivariantMap phi = projection_example();
  auto c = ParamC::constant(phi.target_rs(), cyc(2, 3));
  auto report = rca::is_melys(phi, c);
  EXPECT_TRUE(report.melys);
  EXPECT_TRUE(report.failing_reflections.empty());
}

TEST(IsMelys, AntipodalSourceFails) {
  LinearEquivariantMap phi = antipodal_example();
  auto c = ParamC::constant(phi.target_rs(), cyc(1));
  auto report = rca::is_melys(phi, c);
  EXPECT_FALSE(report.melys);
  ASSERT_EQ(report.failing_reflections.size(), 1u);
  EXPECT_EQ(report.failing_reflections[0], 0);
  // With the parameter off, the condition is vacuous.
  EXPECT_TRUE(
      rca::is_melys(phi, ParamC::constant(phi.target_rs(), cyc(0))).melys);
}

TEST(PullbackC, IdentityKeepsParameters) {
  FiniteMatrixGroup w = rca::builtin_symmetric(3);
  LinearEquivariantMap id(w, w, row_map({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  auto c = ParamC::by_class(id.target_rs(), {cyc(3, 7)});
  ParamC pulled = rca::pullback_c(id, c);
  ASSERT_EQ(pulled.size(), 3);
  for (long s = 0; s < 3; ++s) EXPECT_EQ(pulled.value(s), cyc(3, 7));
}

TEST(PullbackC, ProjectionCarriesWeight) {
  LinearEquivariantMap phi = projection_example();
  ParamC pulled =
      rca::pullback_c(phi, ParamC::constant(phi.target_rs(), cyc(2, 3)));
  ASSERT_EQ(pulled.size(), 1);
  EXPECT_EQ(pulled.value(0), cyc(2, 3));
}

TEST(PullbackC, ZeroPullsToZero) {
  LinearEquivariantMap phi = projection_example();
  ParamC pulled =
      rca::pullback_c(phi, ParamC::constant(phi.target_rs(), cyc(0)));
  for (long s = 0; s < pulled.size(); ++s)
    EXPECT_TRUE(pulled.value(s).is_zero());
}

TEST(PullbackC, CyclicFourPreservesPerReflectionValues) {
  // diag(i, 1) on the source, i on the target; three reflections each.
  FiniteMatrixGroup source = FiniteMatrixGroup::close(
      {diag_group_gen({rca::Cyclotomic::root_of_unity(1, 4), cyc(1)})});
  FiniteMatrixGroup target = rca::builtin_cyclic(4);
  LinearEquivariantMap phi(source, target, row_map({{1, 0}}));
  auto c = ParamC::by_reflection({cyc(1, 2), cyc(1, 3), cyc(1, 5)});
  EXPECT_TRUE(rca::is_melys(phi, c).melys);
  ParamC pulled = rca::pullback_c(phi, c);
  ASSERT_EQ(pulled.size(), 3);
  for (long s = 0; s < 3; ++s) {
    EXPECT_EQ(phi.source_rs().data[s].element, phi.target_rs().data[s].element);
    EXPECT_EQ(pulled.value(s), c.value(s));
  }
}

TEST(PullbackC, RequiresMelys) {
  LinearEquivariantMap phi = antipodal_example();
  EXPECT_THROW(
      rca::pullback_c(phi, ParamC::constant(phi.target_rs(), cyc(1))),
      std::invalid_argument);
}

TEST(PullbackForm, IdentityAndProjection) {
  FiniteMatrixGroup w = rca::builtin_symmetric(3);
  LinearEquivariantMap id(w, w, row_map({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  auto report =
      rca::pullbackform_check(id, ParamC::by_class(id.target_rs(), {cyc(1, 2)}));
  EXPECT_TRUE(report.ok) << report.detail;
  EXPECT_TRUE(report.lambda_preserved);
  EXPECT_TRUE(report.h_zero);

  LinearEquivariantMap phi = projection_example();
  auto report2 =
      rca::pullbackform_check(phi, ParamC::constant(phi.target_rs(), cyc(5, 4)));
  EXPECT_TRUE(report2.ok) << report2.detail;
}

TEST(PullbackForm, ScaledProjectionAbsorbsConstants) {
  // phi(x, y) = 2x: the pulled root is 2x, d log of which is d log x.
  FiniteMatrixGroup source =
      FiniteMatrixGroup::close({diag_group_gen({cyc(-1), cyc(1)})});
  FiniteMatrixGroup target = rca::builtin_cyclic(2);
  LinearEquivariantMap phi(source, target, row_map({{2, 0}}));
  auto c = ParamC::constant(phi.target_rs(), cyc(1, 6));
  EXPECT_TRUE(rca::is_melys(phi, c).melys);
  EXPECT_EQ(rca::pullback_c(phi, c).value(0), cyc(1, 6));
  auto report = rca::pullbackform_check(phi, c);
  EXPECT_TRUE(report.ok) << report.detail;
}

TEST(PullbackForm, CyclicFourEigenvaluesPreserved) {
  FiniteMatrixGroup source = FiniteMatrixGroup::close(
      {diag_group_gen({rca::Cyclotomic::root_of_unity(1, 4), cyc(1)})});
  FiniteMatrixGroup target = rca::builtin_cyclic(4);
  LinearEquivariantMap phi(source, target, row_map({{1, 0}}));
  auto report = rca::pullbackform_check(
      phi, ParamC::by_reflection({cyc(1, 2), cyc(1, 3), cyc(1, 5)}));
  EXPECT_TRUE(report.ok) << report.detail;
  EXPECT_TRUE(report.lambda_preserved);
}

TEST(Composition, MelysChain) {
  FiniteMatrixGroup g3 =
      FiniteMatrixGroup::close({diag_group_gen({cyc(-1), cyc(1), cyc(1)})});
  FiniteMatrixGroup g2 =
      FiniteMatrixGroup::close({diag_group_gen({cyc(-1), cyc(1)})});
  FiniteMatrixGroup g1 = rca::builtin_cyclic(2);
  LinearEquivariantMap phi(g3, g2, row_map({{1, 0, 0}, {0, 1, 0}}));
  LinearEquivariantMap psi(g2, g1, row_map({{1, 0}}));
  auto c1 = ParamC::constant(psi.target_rs(), cyc(1, 2));
  ASSERT_TRUE(rca::is_melys(psi, c1).melys);
  ParamC pulled = rca::pullback_c(psi, c1);
  EXPECT_TRUE(rca::is_melys(phi, pulled).melys);
  // The composite map is melys for the original parameter directly.
  LinearEquivariantMap chain(g3, g1, row_map({{1, 0, 0}}));
  EXPECT_TRUE(rca::is_melys(chain, c1).melys);
  EXPECT_EQ(rca::pullback_c(chain, c1).value(0), cyc(1, 2));
}

TEST(ProjectiveTwist, IdentityNormalization) {
  EXPECT_EQ(rca::projective_twist(cyc(0)), cyc(0));
  EXPECT_EQ(rca::projective_twist(cyc(3)), cyc(3));
  EXPECT_EQ(rca::projective_twist(cyc(1, 2)), cyc(1, 2));
}
