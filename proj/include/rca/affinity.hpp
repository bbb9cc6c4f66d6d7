#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "rca/group.hpp"

namespace rca {

// One parameter point for the quotient of projective space by a linear group:
// the group itself, a class-constant reflection parameter, and the twist.
struct AffinityInput {
  FiniteMatrixGroup group;
  ParamC c;
  Cyclotomic omega;
};

// Floating snapshots of the two central spectra behind the integer tests;
// diagnostic only, the decision itself is exact.
struct ApproxSpectrum {
  std::vector<std::complex<double>> c_lambda;
  std::vector<std::complex<double>> d_lambda;
  bool approximate = true;
};

struct AffinityReport {
  bool exactness_ok = true;     // no hit m >= 0 on the a side
  bool conservative_ok = true;  // no hit m >= 1 on the b side
  bool affine = true;           // both of the above; "not affine" is never claimed
  std::vector<long> a_hits;     // ascending
  std::vector<long> b_hits;     // ascending
  ApproxSpectrum approx;
  std::string note;  // set when a failed b test is known to be possibly slack
};

// Runs both integer-eigenvalue tests for the spherical parameter.  Throws
// std::invalid_argument for a one-dimensional space or a parameter that is
// not constant on conjugacy classes.
AffinityReport ab_decision(const AffinityInput& input);

// When exactness fails, the smallest a-side hit m, the spectral value it came
// from, and the standard-module weight c_value - n - m = omega - rho where the
// collision happens.
struct ExactnessWitness {
  long m = 0;
  Cyclotomic c_value;
  Cyclotomic weight;
};
std::optional<ExactnessWitness> exactness_witness(const AffinityInput& input);

// ab_decision over a rectangular grid, row-major: all omegas for cs[0], then
// all omegas for cs[1], and so on.
struct SurfacePoint {
  long c_index = 0;
  long omega_index = 0;
  AffinityReport report;
};
std::vector<SurfacePoint> criterion_surface(const FiniteMatrixGroup& w,
                                            const std::vector<ParamC>& cs,
                                            const std::vector<Cyclotomic>& omegas);

}  // namespace rca
