#ifndef FRAMETWIRL_WIGNER_HPP
#define FRAMETWIRL_WIGNER_HPP

#include "frametwirl/qubit.hpp"

namespace frametwirl {

// Velocity magnitudes throughout this module are proper velocities (celerity):
// gamma = sqrt(1 + v^2) and gamma*beta = v. The closed forms below are exact
// in this parametrization.

/// Pure boost with proper velocity v in [0, 1) along a unit direction.
struct BoostVector {
  BoostVector(const Vec3& dir, double v);
  Vec3 direction;
  double magnitude;
};

/// Momentum of a massive particle as the dimensionless ratio p/m >= 0 along a
/// unit direction.
struct MomentumVector {
  MomentumVector(const Vec3& dir, double p_over_m);
  Vec3 direction;
  double magnitude_over_mass;
};

/// Rotation induced on the spin by a boost. The pair (angle, axis) is
/// reported in the spin-exponent convention: the spin transforms by
/// U = exp(+i angle axis.J), which acts on 3-vectors as the matrix rotation
/// by -angle about axis. axis_defined is false for the degenerate cases
/// (collinear directions, v = 0 or p = 0), where axis is set to z-hat.
struct WignerRotation {
  double angle = 0.0;  // [0, pi]
  Vec3 axis = Vec3(0, 0, 1);
  bool axis_defined = false;
};

struct WignerSecondOrder {
  double cos_phi = 1.0;
  Vec3 sin_phi_axis = Vec3::Zero();  // sin(phi) * axis, unnormalized
};

/// F(v) = v / (1 + sqrt(1 + v^2)); the per-unit-momentum rotation strength.
double rapidity_factor(double v);

/// Closed-form rotation for a pure boost acting on a momentum eigenstate.
WignerRotation wigner_exact(const BoostVector& v, const MomentumVector& p);

/// Expansion of the closed form to second order in p/m:
///   cos phi       ~ 1 - (1/2) F^2 (p/m)^2 (1 - (v.p)^2)
///   sin phi * axis ~ [F (p/m) - (1/2) F^2 (p/m)^2 (v.p)] (v x p)
WignerSecondOrder wigner_second_order(const BoostVector& v,
                                      const MomentumVector& p);

/// Independent check: composes the three 4x4 boost matrices
/// L^-1(Lambda p) L(v) L(p), verifies the result is a spatial rotation
/// (residue above 1e-9 throws), and extracts the rotation in the same
/// spin-exponent convention as wigner_exact.
WignerRotation lorentz_oracle(const BoostVector& v, const MomentumVector& p);

}  // namespace frametwirl

#endif
