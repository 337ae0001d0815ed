#include "frametwirl/distributions.hpp"

#include <cmath>

#include "frametwirl/quadrature.hpp"
#include "frametwirl/special_functions.hpp"
#include "frametwirl/wigner.hpp"

namespace frametwirl {

namespace {

constexpr int kMaxRejections = 1000000;

void check_kappa(double kappa, const char* who) {
  if (!(kappa > 0.0) || !std::isfinite(kappa)) {
    throw std::domain_error(std::string(who) + ": kappa must be finite and > 0");
  }
}

/// Colatitude cosine t with density proportional to exp(kappa t) on [-1, 1],
/// by inverse CDF. Stable for any kappa > 0.
double sample_exp_cosine(double kappa, Rng& rng) {
  const double u = rng.uniform_pos();
  if (kappa < 1e-8) {
    return 2.0 * u - 1.0;
  }
  const double e2k = std::exp(-2.0 * kappa);
  // t = 1 + log(u + (1-u) e^(-2 kappa)) / kappa, clamped against rounding.
  const double t = 1.0 + std::log(u + (1.0 - u) * e2k) / kappa;
  return std::min(1.0, std::max(-1.0, t));
}

/// Orthonormal pair spanning the plane perpendicular to unit vector n.
void perpendicular_frame(const Vec3& n, Vec3& e1, Vec3& e2) {
  const Vec3 ref = std::abs(n.z()) < 0.9 ? Vec3(0, 0, 1) : Vec3(1, 0, 0);
  e1 = n.cross(ref).normalized();
  e2 = n.cross(e1);
}

double bump_shifted(double v, double delta) {
  // exp[-1/(d^2(1-v^2))] * exp(1/d^2) = exp[-v^2/(d^2(1-v^2))]
  const double one_minus = 1.0 - v * v;
  if (one_minus <= 0.0) return 0.0;
  return std::exp(-v * v / (delta * delta * one_minus));
}

double bump_norm_shifted(double delta) {
  return gl_integrate_adaptive(
      [delta](double v) { return bump_shifted(v, delta); }, 0.0, 1.0, 1e-13);
}

}  // namespace

double vmf_s3_density(double psi, double theta, double phi,
                      const VmfS3Params& params) {
  check_kappa(params.kappa, "vmf_s3_density");
  (void)theta;
  (void)phi;
  const double kappa = params.kappa;
  // kappa e^(kappa cos psi) / (4 pi^2 I_1(kappa)), in scaled form so large
  // kappa does not overflow.
  return kappa * std::exp(kappa * (std::cos(psi) - 1.0)) /
         (4.0 * M_PI * M_PI * bessel_i_scaled(1, kappa));
}

double vmf_s2_density(const Vec3& direction, const VmfS2Params& params) {
  check_kappa(params.kappa, "vmf_s2_density");
  if (std::abs(direction.norm() - 1.0) > 1e-9) {
    throw std::invalid_argument("vmf_s2_density: direction must be unit length");
  }
  if (std::abs(params.mu.norm() - 1.0) > 1e-9) {
    throw std::invalid_argument("vmf_s2_density: mu must be unit length");
  }
  const double kappa = params.kappa;
  const double t = params.mu.dot(direction);
  // kappa e^(kappa(t-1)) / (2 pi (1 - e^(-2 kappa)))
  return kappa * std::exp(kappa * (t - 1.0)) /
         (2.0 * M_PI * -std::expm1(-2.0 * kappa));
}

double bump_density(double v, const BumpParams& params) {
  if (!(params.delta > 0.0)) {
    throw std::domain_error("bump_density: delta must be > 0");
  }
  if (v < 0.0 || v >= 1.0) return 0.0;
  return bump_shifted(v, params.delta) / bump_norm_shifted(params.delta);
}

double bump_norm(double delta) {
  if (!(delta > 0.0)) throw std::domain_error("bump_norm: delta must be > 0");
  const double scale = std::exp(-1.0 / (delta * delta));
  if (scale == 0.0) {
    throw UnderflowError("bump_norm: exp(-1/delta^2) underflows for delta=" +
                         std::to_string(delta));
  }
  return scale * bump_norm_shifted(delta);
}

S3Sample sample_vmf_s3(const VmfS3Params& params, Rng& rng) {
  check_kappa(params.kappa, "sample_vmf_s3");
  const double kappa = params.kappa;
  S3Sample s{};
  // Axis uniform on S^2.
  const double ct = 1.0 - 2.0 * rng.uniform();
  s.theta = std::acos(std::min(1.0, std::max(-1.0, ct)));
  s.phi = 2.0 * M_PI * rng.uniform();
  // Colatitude psi: target density sin^2(psi) e^(kappa cos psi) dpsi, i.e.
  // sqrt(1-t^2) e^(kappa t) dt. Propose t from e^(kappa t) dt (exact inverse
  // CDF) and accept with probability sqrt(1-t^2).
  for (int attempt = 0; attempt < kMaxRejections; ++attempt) {
    const double t = sample_exp_cosine(kappa, rng);
    if (rng.uniform() < std::sqrt(std::max(0.0, 1.0 - t * t))) {
      s.psi = std::acos(std::min(1.0, std::max(-1.0, t)));
      return s;
    }
  }
  throw SamplerError("sample_vmf_s3: rejection cap reached");
}

Vec3 sample_vmf_s2(const VmfS2Params& params, Rng& rng) {
  check_kappa(params.kappa, "sample_vmf_s2");
  if (std::abs(params.mu.norm() - 1.0) > 1e-9) {
    throw std::invalid_argument("sample_vmf_s2: mu must be unit length");
  }
  const double t = sample_exp_cosine(params.kappa, rng);
  const double s = std::sqrt(std::max(0.0, 1.0 - t * t));
  const double az = 2.0 * M_PI * rng.uniform();
  Vec3 e1, e2;
  perpendicular_frame(params.mu, e1, e2);
  return t * params.mu + s * (std::cos(az) * e1 + std::sin(az) * e2);
}

double sample_bump(const BumpParams& params, Rng& rng) {
  if (!(params.delta > 0.0)) {
    throw std::domain_error("sample_bump: delta must be > 0");
  }
  // Uniform proposal; the shifted bump is its own acceptance probability
  // with maximum 1 at v = 0.
  for (int attempt = 0; attempt < kMaxRejections; ++attempt) {
    const double v = rng.uniform();
    if (rng.uniform() < bump_shifted(v, params.delta)) return v;
  }
  throw SamplerError("sample_bump: rejection cap reached");
}

double t_velocity(int n, const BumpParams& params) {
  if (n != 1 && n != 2) throw std::invalid_argument("t_velocity: n must be 1 or 2");
  bump_norm(params.delta);  // propagate the underflow error contract
  const double delta = params.delta;
  const double norm = bump_norm_shifted(delta);
  const double num = gl_integrate_adaptive(
      [delta, n](double v) {
        const double f = rapidity_factor(v);
        return v * v * (n == 1 ? f : f * f) * bump_shifted(v, delta);
      },
      0.0, 1.0, 1e-14);
  return num / norm;
}

double t_momentum(int n, const MomentumSpec& spec) {
  if (n != 1 && n != 2) throw std::invalid_argument("t_momentum: n must be 1 or 2");
  if (spec.p0_over_m < 0.0) {
    throw std::domain_error("t_momentum: p0_over_m must be >= 0");
  }
  return n == 1 ? spec.p0_over_m : spec.p0_over_m * spec.p0_over_m;
}

}  // namespace frametwirl
