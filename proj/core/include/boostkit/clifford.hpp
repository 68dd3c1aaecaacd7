#pragma once

#include <array>
#include <string>

#include "boostkit/linalg.hpp"

// Gamma-matrix algebra, the 4x4 spin tensor S^{mu nu}, rotation (Sigma) and
// boost (K) generators, and finite Lorentz transformations on spinors and
// 4-vectors. Metric convention g = diag(+1,-1,-1,-1) throughout.
namespace boostkit::clifford {

struct Metric {
  static constexpr std::array<int, 4> signature{1, -1, -1, -1};
  static constexpr double g(int mu, int nu) {
    return mu == nu ? static_cast<double>(signature[mu]) : 0.0;
  }
};

struct GammaSet {
  std::array<Mat4c, 4> gamma;
  std::string representation;
};

/// Only "dirac" (standard representation, gamma^0 = diag(I,-I)) is supported.
/// Throws std::invalid_argument on any other label.
GammaSet make_gamma(const std::string& representation = "dirac");

/// S^{mu nu} = i(gamma^mu gamma^nu - gamma^nu gamma^mu)/4, all 16 entries.
struct SpinTensor {
  std::array<std::array<Mat4c, 4>, 4> s;
  const Mat4c& operator()(int mu, int nu) const { return s[mu][nu]; }
};

SpinTensor spin_tensor(const GammaSet& g);

/// Rotation generators Sigma_i = eps_{ijk} S^{jk} / 2. Hermitian, Sigma_i^2 = I/4.
std::array<Mat4c, 3> sigma_vector(const SpinTensor& s);

/// Boost generators K_i = S^{0i}. Anti-Hermitian.
std::array<Mat4c, 3> k_vector(const SpinTensor& s);

enum class TransformKind { rotation, boost, mixed };

struct SpinorTransform {
  Mat4c matrix;
  TransformKind kind;
};

struct VectorTransform {
  Mat4d lambda;
};

/// Finite spinor boost S(eta) = exp(+i eta . K). With the vector boost below
/// this satisfies S^{-1} gamma^mu S = Lambda^mu_nu gamma^nu.
SpinorTransform finite_spinor_boost(const SpinTensor& s, const Vec3d& eta);

/// Standard boost matrix: for eta along x, t' = t cosh(eta) - x sinh(eta).
VectorTransform finite_vector_boost(const Vec3d& eta);

/// Finite spinor rotation S = exp(-i theta n . Sigma) for axis_angle = theta*n.
/// Unitary; a 2*pi rotation gives -I (double cover).
SpinorTransform finite_spinor_rotation(const SpinTensor& s, const Vec3d& axis_angle);

/// Active spatial rotation by |axis_angle| about its direction (block-diagonal
/// Lambda with R in the spatial corner). Covariant partner of the spinor form.
VectorTransform finite_vector_rotation(const Vec3d& axis_angle);

/// Max-entry residual of [S^{mu nu}, S^{rho sigma}]
///   - i (g^{nu rho} S^{mu sigma} - g^{mu rho} S^{nu sigma}
///        - g^{nu sigma} S^{mu rho} + g^{mu sigma} S^{nu rho})
/// over all index combinations.
double check_lorentz_algebra(const SpinTensor& s);

/// Max-entry residual of {gamma^mu, gamma^nu} - 2 g^{mu nu} I over all mu,nu.
double clifford_closure_residual(const GammaSet& g);

/// Max-entry residual of gamma^0 (S^{mu nu})^dagger gamma^0 - S^{mu nu}.
double dirac_adjoint_residual(const GammaSet& g, const SpinTensor& s);

/// Max-entry residual of S(Lambda)^{-1} gamma^mu S(Lambda) - Lambda^mu_nu gamma^nu
/// for the boost with rapidity vector eta.
double boost_covariance_residual(const GammaSet& g, const SpinTensor& s, const Vec3d& eta);

}  // namespace boostkit::clifford
