#include "frametwirl/qubit.hpp"

#include <cmath>
#include <stdexcept>

namespace frametwirl {

namespace {
constexpr Complex kI{0.0, 1.0};
}

Matrix2c pauli(int j) {
  Matrix2c m;
  switch (j) {
    case 1:
      m << 0, 1, 1, 0;
      break;
    case 2:
      m << 0, -kI, kI, 0;
      break;
    case 3:
      m << 1, 0, 0, -1;
      break;
    default:
      throw std::invalid_argument("pauli: index must be 1, 2 or 3");
  }
  return m;
}

Matrix2c identity2() { return Matrix2c::Identity(); }

QubitState::QubitState(const Matrix2c& m) {
  const Matrix2c herm = 0.5 * (m + m.adjoint());
  const double residue = (m - herm).norm();
  if (residue > 1e-9) {
    throw std::invalid_argument("QubitState: anti-Hermitian residue exceeds 1e-9");
  }
  const double trace_defect = std::abs(herm.trace().real() - 1.0) +
                              std::abs(herm.trace().imag());
  if (trace_defect > 1e-9) {
    throw std::invalid_argument("QubitState: trace differs from 1 by more than 1e-9");
  }
  m_ = herm;
}

Vec3 QubitState::bloch() const {
  Vec3 r;
  for (int j = 1; j <= 3; ++j) {
    r[j - 1] = (m_ * pauli(j)).trace().real();
  }
  return r;
}

double QubitState::purity() const { return (m_ * m_).trace().real(); }

double QubitState::min_eigenvalue() const {
  // Hermitian 2x2: eigenvalues tr/2 +- sqrt((tr/2)^2 - det).
  const double half_tr = 0.5 * m_.trace().real();
  const double det = m_.determinant().real();
  const double disc = std::max(half_tr * half_tr - det, 0.0);
  return half_tr - std::sqrt(disc);
}

QubitState ket0_state() {
  Matrix2c m;
  m << 1, 0, 0, 0;
  return QubitState(m);
}

Vec3 EncodingSpec::axis() const {
  return Vec3(std::sin(theta_E) * std::cos(phi_E),
              std::sin(theta_E) * std::sin(phi_E), std::cos(theta_E));
}

QubitState encode_spin(const EncodingSpec& spec) {
  if (spec.theta_E < 0.0 || spec.theta_E > M_PI + 1e-12) {
    throw std::invalid_argument("encode_spin: theta_E outside [0, pi]");
  }
  const Vec3 n = spec.axis();
  const double half = 0.5 * spec.lambda;
  const Matrix2c n_sigma = n[0] * pauli(1) + n[1] * pauli(2) + n[2] * pauli(3);
  const Matrix2c u = std::cos(half) * identity2() - kI * std::sin(half) * n_sigma;
  Eigen::Vector2cd psi = u * Eigen::Vector2cd(1.0, 0.0);
  return QubitState(psi * psi.adjoint());
}

QubitState su2_conjugate(const QubitState& rho, const Vec3& axis, double angle) {
  if (std::abs(axis.norm() - 1.0) > 1e-9) {
    throw std::invalid_argument("su2_conjugate: axis must be a unit vector");
  }
  const double half = 0.5 * angle;
  const Matrix2c n_sigma =
      axis[0] * pauli(1) + axis[1] * pauli(2) + axis[2] * pauli(3);
  const Matrix2c u = std::cos(half) * identity2() + kI * std::sin(half) * n_sigma;
  return QubitState(u * rho.matrix() * u.adjoint());
}

Matrix2c pauli_conjugate_sum(const QubitState& rho, const Vec3& weights) {
  Matrix2c out = Matrix2c::Zero();
  for (int j = 1; j <= 3; ++j) {
    out += weights[j - 1] * pauli(j) * rho.matrix() * pauli(j);
  }
  return out;
}

Vec3 to_bloch(const QubitState& rho) { return rho.bloch(); }

QubitState from_bloch(const Vec3& r) {
  if (r.norm() > 1.0 + 1e-9) {
    throw std::invalid_argument("from_bloch: Bloch vector norm exceeds 1");
  }
  Matrix2c m = 0.5 * identity2();
  for (int j = 1; j <= 3; ++j) {
    m += 0.5 * r[j - 1] * pauli(j);
  }
  return QubitState(m);
}

double trace_distance(const QubitState& rho1, const QubitState& rho2) {
  const Matrix2c d = rho1.matrix() - rho2.matrix();
  // Hermitian traceless-ish 2x2: |lambda_1| + |lambda_2| via trace and det.
  const double half_tr = 0.5 * d.trace().real();
  const double det = d.determinant().real();
  const double disc = std::max(half_tr * half_tr - det, 0.0);
  const double l1 = half_tr + std::sqrt(disc);
  const double l2 = half_tr - std::sqrt(disc);
  return 0.5 * (std::abs(l1) + std::abs(l2));
}

}  // namespace frametwirl
