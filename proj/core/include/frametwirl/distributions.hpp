#ifndef FRAMETWIRL_DISTRIBUTIONS_HPP
#define FRAMETWIRL_DISTRIBUTIONS_HPP

#include <stdexcept>

#include "frametwirl/qubit.hpp"
#include "frametwirl/rng.hpp"

namespace frametwirl {

struct UnderflowError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SamplerError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// von Mises-Fisher on S^3, centred at the identity point (1,0,0,0) of the
/// hypersphere, in hyperspherical coordinates (psi, theta, phi).
struct VmfS3Params {
  double kappa;
};

/// von Mises-Fisher on S^2 with mean direction mu (unit) and concentration
/// kappa. Normalized as kappa / (4 pi sinh kappa) * exp(kappa mu.n), the
/// p = 3 normalization that integrates to 1 over the sphere.
struct VmfS2Params {
  Vec3 mu;
  double kappa;
};

/// Smooth bump weight exp[-1/(delta^2 (1 - v^2))] on [0, 1).
struct BumpParams {
  double delta;
};

/// Momentum magnitude delta-peaked at p0 (expressed as p0/m), with direction
/// concentration kappa_p.
struct MomentumSpec {
  double p0_over_m;
  double kappa_p;
};

struct S3Sample {
  double psi;
  double theta;
  double phi;
};

/// Density against the measure sin^2(psi) sin(theta) dpsi dtheta dphi:
/// kappa / (4 pi^2 I_1(kappa)) * exp(kappa cos psi).
double vmf_s3_density(double psi, double theta, double phi,
                      const VmfS3Params& params);

/// Density against the solid-angle measure on S^2; rejects non-unit
/// directions.
double vmf_s2_density(const Vec3& direction, const VmfS2Params& params);

/// Bump density on [0, 1), normalized by bump_norm(delta).
double bump_density(double v, const BumpParams& params);

/// N(delta) = integral_0^1 exp[-1/(delta^2 (1 - v^2))] dv, to absolute
/// accuracy 1e-12. Throws UnderflowError when exp(-1/delta^2) underflows
/// (delta below ~0.037) and the value is not representable.
double bump_norm(double delta);

/// Samplers. Deterministic given the rng stream; rejection samplers throw
/// SamplerError after 1e6 consecutive rejections.
S3Sample sample_vmf_s3(const VmfS3Params& params, Rng& rng);
Vec3 sample_vmf_s2(const VmfS2Params& params, Rng& rng);
double sample_bump(const BumpParams& params, Rng& rng);

/// T^(v)_n = integral_0^1 v^2 F(v)^n h2(v) dv for n in {1, 2}, with h2 the
/// bump density. Evaluated in shifted form so the exp(-1/delta^2) scale
/// cancels between numerator and normalization.
double t_velocity(int n, const BumpParams& params);

/// T^(p)_n = (p0/m)^n for the delta-peaked magnitude distribution. The
/// n-th power (rather than a fixed square) is what makes the sharp-knowledge
/// limit of the boost channel a first-order rotation; the validate command
/// confirms this numerically.
double t_momentum(int n, const MomentumSpec& spec);

}  // namespace frametwirl

#endif
