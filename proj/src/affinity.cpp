#include "rca/affinity.hpp"

#include <stdexcept>
#include <utility>

#include "rca/group_algebra.hpp"

namespace rca {

namespace {

// For a reflection-free group the b test rejects every integer twist in
// [1-n, -1], but nothing in that band is a known obstruction.
bool possibly_slack(const ReflectionSet& rs, long n, const Cyclotomic& omega) {
  if (!rs.data.empty() || !omega.is_rational()) return false;
  Rational q = omega.rational_part();
  return q.get_den() == 1 && q <= -1 && q >= 1 - n;
}

}  // namespace

AffinityReport ab_decision(const AffinityInput& input) {
  const FiniteMatrixGroup& w = input.group;
  long n = w.dim();
  if (n < 2)
    throw std::invalid_argument("ambient dimension must be at least 2");
  ReflectionSet rs = reflection_set(w);
  if (!input.c.is_equivariant(rs))
    throw std::invalid_argument(
        "reflection parameter must be constant on conjugacy classes");

  Cyclotomic rho = rho_c(rs, input.c);
  AlgebraElement z = central_z(w, rs, input.c);
  AlgebraElement z0 = central_z0(w, rs, input.c);
  CycMatrix mz = center_mult_matrix(w, z);
  CycMatrix neg_mz0 = center_mult_matrix(w, z0);
  neg_mz0.scale_in_place(cyc(-1));

  AffinityReport rep;
  rep.a_hits = integer_eigen_members(mz, rho - cyc(n) - input.omega, false);
  rep.b_hits = integer_eigen_members(neg_mz0, rho - input.omega, true);
  rep.exactness_ok = rep.a_hits.empty();
  rep.conservative_ok = rep.b_hits.empty();
  rep.affine = rep.exactness_ok && rep.conservative_ok;
  rep.approx.c_lambda = numeric_central_spectrum(w, z);
  rep.approx.d_lambda = numeric_central_spectrum(w, z0);
  if (!rep.conservative_ok && possibly_slack(rs, n, input.omega))
    rep.note =
        "reflection-free group with an integer twist between 1-n and -1: "
        "the failed conservative test is not a known obstruction here";
  return rep;
}

std::optional<ExactnessWitness> exactness_witness(const AffinityInput& input) {
  AffinityReport rep = ab_decision(input);
  if (rep.a_hits.empty()) return std::nullopt;
  Cyclotomic rho = rho_c(reflection_set(input.group), input.c);
  ExactnessWitness wit;
  wit.m = rep.a_hits.front();
  wit.weight = input.omega - rho;
  wit.c_value = wit.weight + cyc(input.group.dim() + wit.m);
  return wit;
}

std::vector<SurfacePoint> criterion_surface(
    const FiniteMatrixGroup& w, const std::vector<ParamC>& cs,
    const std::vector<Cyclotomic>& omegas) {
  std::vector<SurfacePoint> out;
  out.reserve(cs.size() * omegas.size());
  for (std::size_t i = 0; i < cs.size(); ++i) {
    for (std::size_t j = 0; j < omegas.size(); ++j) {
      SurfacePoint pt;
      pt.c_index = static_cast<long>(i);
      pt.omega_index = static_cast<long>(j);
      pt.report = ab_decision(AffinityInput{w, cs[i], omegas[j]});
      out.push_back(std::move(pt));
    }
  }
  return out;
}

}  // namespace rca
