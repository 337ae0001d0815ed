#ifndef FRAMETWIRL_QUBIT_HPP
#define FRAMETWIRL_QUBIT_HPP

#include <Eigen/Dense>
#include <complex>

namespace frametwirl {

using Complex = std::complex<double>;
using Matrix2c = Eigen::Matrix2cd;
using Vec3 = Eigen::Vector3d;

Matrix2c pauli(int j);  // j = 1,2,3 -> sigma_x, sigma_y, sigma_z
Matrix2c identity2();

/// Spin-1/2 density matrix. Construction symmetrizes (m + m^dag)/2 and
/// rejects inputs whose anti-Hermitian residue or trace defect exceeds 1e-9.
///
/// Positivity is deliberately not enforced here: the truncated-expansion
/// channels in channels.hpp produce states whose smallest eigenvalue can dip
/// below zero by the truncation order. Callers that require a physical state
/// check min_eigenvalue() themselves.
class QubitState {
 public:
  explicit QubitState(const Matrix2c& m);

  const Matrix2c& matrix() const { return m_; }
  Complex operator()(int r, int c) const { return m_(r, c); }

  Vec3 bloch() const;
  double purity() const;         // Tr(rho^2)
  double min_eigenvalue() const;

 private:
  Matrix2c m_;
};

/// |0><0| with J_z|0> = +1/2 |0>.
QubitState ket0_state();

struct EncodingSpec {
  double theta_E = 0.0;  // [0, pi]
  double phi_E = 0.0;    // [0, 2*pi)
  double lambda = 0.0;   // message parameter, radians

  Vec3 axis() const;  // unit vector E-hat
};

/// Alice's unitary encoding: |psi> = exp(-i lambda E.sigma/2) |0>.
QubitState encode_spin(const EncodingSpec& spec);

/// U rho U^dag with U = cos(angle/2) I + i sin(angle/2) axis.sigma.
/// With this sign, the Bloch vector rotates by -angle about axis
/// (equivalently +angle about -axis). The axis must be unit length.
QubitState su2_conjugate(const QubitState& rho, const Vec3& axis, double angle);

/// sum_j w_j sigma_j rho sigma_j (a plain matrix: trace sums the weights).
Matrix2c pauli_conjugate_sum(const QubitState& rho, const Vec3& weights);

Vec3 to_bloch(const QubitState& rho);
QubitState from_bloch(const Vec3& r);  // rejects |r| > 1 + 1e-9

/// (1/2) ||rho1 - rho2||_1; for qubits this is half the Euclidean Bloch
/// distance.
double trace_distance(const QubitState& rho1, const QubitState& rho2);

}  // namespace frametwirl

#endif
