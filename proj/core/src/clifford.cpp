#include "boostkit/clifford.hpp"

#include <cmath>
#include <stdexcept>

namespace boostkit::clifford {

namespace {

Mat4c block_diag(const Mat2c& a, const Mat2c& b) {
  Mat4c m = Mat4c::Zero();
  m.topLeftCorner<2, 2>() = a;
  m.bottomRightCorner<2, 2>() = b;
  return m;
}

Mat4c anti_block(const Mat2c& a, const Mat2c& b) {
  Mat4c m = Mat4c::Zero();
  m.topRightCorner<2, 2>() = a;
  m.bottomLeftCorner<2, 2>() = b;
  return m;
}

}  // namespace

GammaSet make_gamma(const std::string& representation) {
  if (representation != "dirac") {
    throw std::invalid_argument("unsupported gamma representation: " + representation);
  }
  const auto& sigma = pauli_matrices();
  GammaSet g;
  g.representation = representation;
  g.gamma[0] = block_diag(Mat2c::Identity(), -Mat2c::Identity());
  for (int k = 0; k < 3; ++k) {
    g.gamma[k + 1] = anti_block(sigma[k], -sigma[k]);
  }
  return g;
}

SpinTensor spin_tensor(const GammaSet& g) {
  SpinTensor s;
  const cplx i(0.0, 1.0);
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      s.s[mu][nu] = i / 4.0 * (g.gamma[mu] * g.gamma[nu] - g.gamma[nu] * g.gamma[mu]);
    }
  }
  return s;
}

std::array<Mat4c, 3> sigma_vector(const SpinTensor& s) {
  // Sigma_1 = S^{23}, Sigma_2 = S^{31}, Sigma_3 = S^{12}
  return {s(2, 3), s(3, 1), s(1, 2)};
}

std::array<Mat4c, 3> k_vector(const SpinTensor& s) {
  return {s(0, 1), s(0, 2), s(0, 3)};
}

SpinorTransform finite_spinor_boost(const SpinTensor& s, const Vec3d& eta) {
  const cplx i(0.0, 1.0);
  const auto k = k_vector(s);
  Mat4c arg = i * (eta[0] * k[0] + eta[1] * k[1] + eta[2] * k[2]);
  return {Mat4c(expm(arg)), TransformKind::boost};
}

VectorTransform finite_vector_boost(const Vec3d& eta) {
  const double r = eta.norm();
  Mat4d lambda = Mat4d::Identity();
  if (r == 0.0) return {lambda};
  const Vec3d n = eta / r;
  const double ch = std::cosh(r);
  const double sh = std::sinh(r);
  lambda(0, 0) = ch;
  for (int j = 0; j < 3; ++j) {
    lambda(0, j + 1) = -sh * n[j];
    lambda(j + 1, 0) = -sh * n[j];
    for (int k = 0; k < 3; ++k) {
      lambda(j + 1, k + 1) = (j == k ? 1.0 : 0.0) + (ch - 1.0) * n[j] * n[k];
    }
  }
  return {lambda};
}

SpinorTransform finite_spinor_rotation(const SpinTensor& s, const Vec3d& axis_angle) {
  const cplx i(0.0, 1.0);
  const auto sig = sigma_vector(s);
  Mat4c arg = -i * (axis_angle[0] * sig[0] + axis_angle[1] * sig[1] + axis_angle[2] * sig[2]);
  return {Mat4c(expm(arg)), TransformKind::rotation};
}

VectorTransform finite_vector_rotation(const Vec3d& axis_angle) {
  Mat4d lambda = Mat4d::Identity();
  const double theta = axis_angle.norm();
  if (theta == 0.0) return {lambda};
  Eigen::Matrix3d r =
      Eigen::AngleAxisd(theta, Vec3d(axis_angle / theta)).toRotationMatrix();
  lambda.bottomRightCorner<3, 3>() = r;
  return {lambda};
}

double check_lorentz_algebra(const SpinTensor& s) {
  const cplx i(0.0, 1.0);
  double worst = 0.0;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      for (int rho = 0; rho < 4; ++rho)
        for (int sg = 0; sg < 4; ++sg) {
          Mat4c comm = s(mu, nu) * s(rho, sg) - s(rho, sg) * s(mu, nu);
          Mat4c rhs = i * (Metric::g(nu, rho) * s(mu, sg) - Metric::g(mu, rho) * s(nu, sg) -
                           Metric::g(nu, sg) * s(mu, rho) + Metric::g(mu, sg) * s(nu, rho));
          worst = std::max(worst, max_abs(Eigen::MatrixXcd(comm - rhs)));
        }
  return worst;
}

double clifford_closure_residual(const GammaSet& g) {
  double worst = 0.0;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      Mat4c anti = g.gamma[mu] * g.gamma[nu] + g.gamma[nu] * g.gamma[mu];
      Mat4c expect = 2.0 * Metric::g(mu, nu) * Mat4c::Identity();
      worst = std::max(worst, max_abs(Eigen::MatrixXcd(anti - expect)));
    }
  return worst;
}

double dirac_adjoint_residual(const GammaSet& g, const SpinTensor& s) {
  double worst = 0.0;
  const Mat4c& g0 = g.gamma[0];
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      Mat4c lhs = g0 * s(mu, nu).adjoint() * g0;
      worst = std::max(worst, max_abs(Eigen::MatrixXcd(lhs - s(mu, nu))));
    }
  return worst;
}

double boost_covariance_residual(const GammaSet& g, const SpinTensor& s, const Vec3d& eta) {
  const SpinorTransform sp = finite_spinor_boost(s, eta);
  const VectorTransform lam = finite_vector_boost(eta);
  const Mat4c sp_inv = sp.matrix.inverse();
  double worst = 0.0;
  for (int mu = 0; mu < 4; ++mu) {
    Mat4c lhs = sp_inv * g.gamma[mu] * sp.matrix;
    Mat4c rhs = Mat4c::Zero();
    for (int nu = 0; nu < 4; ++nu) rhs += lam.lambda(mu, nu) * g.gamma[nu];
    worst = std::max(worst, max_abs(Eigen::MatrixXcd(lhs - rhs)));
  }
  return worst;
}

}  // namespace boostkit::clifford
