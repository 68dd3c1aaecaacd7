#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "boostkit/clifford.hpp"

using namespace boostkit;
using namespace boostkit::clifford;

namespace {
const GammaSet& gammas() {
  static const GammaSet g = make_gamma("dirac");
  return g;
}
const SpinTensor& spin() {
  static const SpinTensor s = spin_tensor(gammas());
  return s;
}

Mat4c block_diag(const Mat2c& a) {
  Mat4c m = Mat4c::Zero();
  m.topLeftCorner<2, 2>() = a;
  m.bottomRightCorner<2, 2>() = a;
  return m;
}

Mat4c anti_block(const Mat2c& a) {
  Mat4c m = Mat4c::Zero();
  m.topRightCorner<2, 2>() = a;
  m.bottomLeftCorner<2, 2>() = a;
  return m;
}
}  // namespace

TEST_CASE("gamma matrices satisfy the Clifford algebra") {
  const auto& g = gammas();
  CHECK(clifford_closure_residual(g) < 1e-12);

  // (gamma^0)^2 = I, (gamma^1)^2 = -I
  CHECK(max_abs(Eigen::MatrixXcd(g.gamma[0] * g.gamma[0] - Mat4c::Identity())) < 1e-15);
  CHECK(max_abs(Eigen::MatrixXcd(g.gamma[1] * g.gamma[1] + Mat4c::Identity())) < 1e-15);

  // {gamma^1, gamma^2} = 0
  CHECK(max_abs(Eigen::MatrixXcd(g.gamma[1] * g.gamma[2] + g.gamma[2] * g.gamma[1])) <
        1e-15);

  // hermiticity pattern
  CHECK(hermiticity_residual(g.gamma[0]) < 1e-15);
  for (int k = 1; k < 4; ++k) CHECK(anti_hermiticity_residual(g.gamma[k]) < 1e-15);

  // gamma^0 block-diagonal with blocks (I, -I)
  Mat4c g0_expect = Mat4c::Zero();
  g0_expect.diagonal() << 1, 1, -1, -1;
  CHECK(max_abs(Eigen::MatrixXcd(g.gamma[0] - g0_expect)) == 0.0);
}

TEST_CASE("make_gamma rejects unknown representations") {
  CHECK_THROWS_AS((void)make_gamma("weyl"), std::invalid_argument);
}

TEST_CASE("spin tensor antisymmetry and Dirac adjoint property") {
  const auto& s = spin();
  for (int mu = 0; mu < 4; ++mu) {
    CHECK(max_abs(Eigen::MatrixXcd(s(mu, mu))) == 0.0);
    for (int nu = 0; nu < 4; ++nu)
      CHECK(max_abs(Eigen::MatrixXcd(s(mu, nu) + s(nu, mu))) < 1e-15);
  }
  CHECK(dirac_adjoint_residual(gammas(), s) < 1e-12);
}

TEST_CASE("S^{12} and S^{01} equal the Sigma_3 and K_1 block forms") {
  const auto& s = spin();
  const auto& sigma = pauli_matrices();
  const cplx i(0.0, 1.0);
  CHECK(max_abs(Eigen::MatrixXcd(s(1, 2) - block_diag(0.5 * sigma[2]))) < 1e-15);
  CHECK(max_abs(Eigen::MatrixXcd(s(0, 1) - anti_block(0.5 * i * sigma[0]))) < 1e-15);
}

TEST_CASE("sigma_vector: block form, commutators, spectrum") {
  const auto sv = sigma_vector(spin());
  const auto& sigma = pauli_matrices();
  const cplx i(0.0, 1.0);

  CHECK(max_abs(Eigen::MatrixXcd(sv[0] - block_diag(0.5 * sigma[0]))) < 1e-15);
  for (int a = 0; a < 3; ++a) {
    CHECK(hermiticity_residual(sv[a]) < 1e-15);
    CHECK(max_abs(Eigen::MatrixXcd(sv[a] * sv[a] - 0.25 * Mat4c::Identity())) < 1e-15);
    CHECK(std::abs(sv[a].trace()) < 1e-15);
  }
  // [Sigma_1, Sigma_2] = i Sigma_3
  Mat4c comm = sv[0] * sv[1] - sv[1] * sv[0];
  CHECK(max_abs(Eigen::MatrixXcd(comm - i * sv[2])) < 1e-14);

  // eigenvalues {+1/2, -1/2}, each twice
  Eigen::SelfAdjointEigenSolver<Mat4c> es(sv[2]);
  CHECK(es.eigenvalues()[0] == doctest::Approx(-0.5));
  CHECK(es.eigenvalues()[1] == doctest::Approx(-0.5));
  CHECK(es.eigenvalues()[2] == doctest::Approx(0.5));
  CHECK(es.eigenvalues()[3] == doctest::Approx(0.5));
}

TEST_CASE("k_vector: block form, anti-hermiticity, commutators") {
  const auto kv = k_vector(spin());
  const auto sv = sigma_vector(spin());
  const auto& sigma = pauli_matrices();
  const cplx i(0.0, 1.0);

  CHECK(max_abs(Eigen::MatrixXcd(kv[2] - anti_block(0.5 * i * sigma[2]))) < 1e-15);
  const Mat4c& g0 = gammas().gamma[0];
  for (int a = 0; a < 3; ++a) {
    CHECK(anti_hermiticity_residual(kv[a]) < 1e-15);
    CHECK(max_abs(Eigen::MatrixXcd(g0 * kv[a].adjoint() * g0 - kv[a])) < 1e-15);
    // eigenvalues {+i/2, -i/2}, each twice
    Eigen::ComplexEigenSolver<Mat4c> es(kv[a]);
    int plus = 0, minus = 0;
    for (int n = 0; n < 4; ++n) {
      CHECK(std::abs(es.eigenvalues()[n].real()) < 1e-14);
      if (es.eigenvalues()[n].imag() > 0) ++plus; else ++minus;
      CHECK(std::abs(std::abs(es.eigenvalues()[n].imag()) - 0.5) < 1e-14);
    }
    CHECK(plus == 2);
    CHECK(minus == 2);
  }
  // [K_1, K_2] = -i Sigma_3
  Mat4c comm = kv[0] * kv[1] - kv[1] * kv[0];
  CHECK(max_abs(Eigen::MatrixXcd(comm + i * sv[2])) < 1e-14);
}

TEST_CASE("finite spinor boost: identity, composition, Dirac-unitarity") {
  const auto& s = spin();
  CHECK(max_abs(Eigen::MatrixXcd(finite_spinor_boost(s, Vec3d::Zero()).matrix -
                                 Mat4c::Identity())) < 1e-15);

  const auto b1 = finite_spinor_boost(s, Vec3d(0.4, 0, 0));
  const auto b2 = finite_spinor_boost(s, Vec3d(0.9, 0, 0));
  const auto b12 = finite_spinor_boost(s, Vec3d(1.3, 0, 0));
  CHECK(max_abs(Eigen::MatrixXcd(b1.matrix * b2.matrix - b12.matrix)) < 1e-13);

  // gamma^0 S^dagger gamma^0 S = I, but S is not unitary
  const Mat4c& g0 = gammas().gamma[0];
  const Mat4c sm = b2.matrix;
  CHECK(max_abs(Eigen::MatrixXcd(g0 * sm.adjoint() * g0 * sm - Mat4c::Identity())) < 1e-13);
  CHECK(max_abs(Eigen::MatrixXcd(sm.adjoint() * sm - Mat4c::Identity())) > 1e-3);
}

TEST_CASE("covariance identity at eta = 0.7 x-hat") {
  CHECK(boost_covariance_residual(gammas(), spin(), Vec3d(0.7, 0, 0)) < 1e-10);
}

TEST_CASE("covariance for random rapidities |eta| <= 2") {
  std::mt19937_64 rng(0xc0ffee);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_real_distribution<double> mag(0.0, 2.0);
  for (int n = 0; n < 50; ++n) {
    Vec3d dir(unit(rng), unit(rng), unit(rng));
    if (dir.norm() < 1e-9) dir = Vec3d::UnitZ();
    const Vec3d eta = mag(rng) * dir.normalized();
    CHECK(boost_covariance_residual(gammas(), spin(), eta) < 1e-9);
  }
}

TEST_CASE("finite vector boost: textbook entries, metric preservation, inverse") {
  CHECK(max_abs(Eigen::MatrixXd(finite_vector_boost(Vec3d::Zero()).lambda -
                                Mat4d::Identity())) == 0.0);

  const double eta = 0.8;
  const Mat4d lam = finite_vector_boost(Vec3d(eta, 0, 0)).lambda;
  Vec4d x(1.0, 2.0, 0.0, 0.0);
  Vec4d xp = lam * x;
  CHECK(xp[0] == doctest::Approx(std::cosh(eta) * 1.0 - std::sinh(eta) * 2.0));
  CHECK(xp[1] == doctest::Approx(-std::sinh(eta) * 1.0 + std::cosh(eta) * 2.0));

  Mat4d g = Mat4d::Zero();
  g.diagonal() << 1, -1, -1, -1;
  CHECK(max_abs(Eigen::MatrixXd(lam.transpose() * g * lam - g)) < 1e-10);
  CHECK(lam.determinant() == doctest::Approx(1.0));

  const Mat4d inv = finite_vector_boost(Vec3d(-eta, 0, 0)).lambda;
  CHECK(max_abs(Eigen::MatrixXd(lam * inv - Mat4d::Identity())) < 1e-12);
}

TEST_CASE("spinor rotations: unitarity and double cover") {
  const auto& s = spin();
  CHECK(max_abs(Eigen::MatrixXcd(finite_spinor_rotation(s, Vec3d::Zero()).matrix -
                                 Mat4c::Identity())) < 1e-15);

  const double two_pi = 2.0 * std::numbers::pi;
  const Mat4c full = finite_spinor_rotation(s, Vec3d(0, 0, two_pi)).matrix;
  CHECK(max_abs(Eigen::MatrixXcd(full + Mat4c::Identity())) < 1e-12);
  const Mat4c twice = finite_spinor_rotation(s, Vec3d(0, 0, 2 * two_pi)).matrix;
  CHECK(max_abs(Eigen::MatrixXcd(twice - Mat4c::Identity())) < 1e-12);

  const Mat4c r = finite_spinor_rotation(s, Vec3d(0.3, -0.9, 0.5)).matrix;
  CHECK(max_abs(Eigen::MatrixXcd(r.adjoint() * r - Mat4c::Identity())) < 1e-13);
}

TEST_CASE("rotation covariance matches the vector rotation") {
  const auto& g = gammas();
  const auto& s = spin();
  const Vec3d aa(0.2, 0.7, -1.1);
  const Mat4c sp = finite_spinor_rotation(s, aa).matrix;
  const Mat4d lam = finite_vector_rotation(aa).lambda;
  const Mat4c sp_inv = sp.inverse();
  for (int mu = 0; mu < 4; ++mu) {
    Mat4c rhs = Mat4c::Zero();
    for (int nu = 0; nu < 4; ++nu) rhs += lam(mu, nu) * g.gamma[nu];
    CHECK(max_abs(Eigen::MatrixXcd(sp_inv * g.gamma[mu] * sp - rhs)) < 1e-10);
  }
}

TEST_CASE("Lorentz algebra closes; perturbation is detected") {
  const auto& s = spin();
  CHECK(check_lorentz_algebra(s) < 1e-12);

  SpinTensor broken = s;
  broken.s[0][1] = Mat4c::Zero();
  broken.s[1][0] = Mat4c::Zero();
  CHECK(check_lorentz_algebra(broken) > 1e-2);

  // [S^{12}, S^{23}] = -i S^{13} under g = diag(+,-,-,-)
  const cplx i(0.0, 1.0);
  Mat4c comm = s(1, 2) * s(2, 3) - s(2, 3) * s(1, 2);
  CHECK(max_abs(Eigen::MatrixXcd(comm + i * s(1, 3))) < 1e-14);
}
