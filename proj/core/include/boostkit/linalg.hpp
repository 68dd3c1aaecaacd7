#pragma once

#include <Eigen/Dense>
#include <complex>

namespace boostkit {

using cplx = std::complex<double>;
using Mat2c = Eigen::Matrix2cd;
using Mat4c = Eigen::Matrix4cd;
using Mat4d = Eigen::Matrix4d;
using Vec3d = Eigen::Vector3d;
using Vec4d = Eigen::Vector4d;

/// Largest entry magnitude; the residual norm used throughout.
inline double max_abs(const Eigen::MatrixXcd& m) {
  return m.cwiseAbs().maxCoeff();
}

inline double max_abs(const Eigen::MatrixXd& m) {
  return m.cwiseAbs().maxCoeff();
}

inline double hermiticity_residual(const Eigen::MatrixXcd& m) {
  return max_abs(Eigen::MatrixXcd(m - m.adjoint()));
}

inline double anti_hermiticity_residual(const Eigen::MatrixXcd& m) {
  return max_abs(Eigen::MatrixXcd(m + m.adjoint()));
}

/// Matrix exponential of a small dense complex matrix by scaling and
/// squaring with a Taylor kernel. Accurate to ~1e-15 for ||A|| <= 4.
Eigen::MatrixXcd expm(const Eigen::MatrixXcd& a);

/// Pauli matrices sigma_1, sigma_2, sigma_3.
const std::array<Mat2c, 3>& pauli_matrices();

}  // namespace boostkit
