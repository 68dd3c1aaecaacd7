#include "boostkit/pauli.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <unsupported/Eigen/KroneckerProduct>

namespace boostkit::pauli {

namespace {

Mat2c sigma_dot(const Vec3d& v) {
  const auto& sigma = pauli_matrices();
  return v[0] * sigma[0] + v[1] * sigma[1] + v[2] * sigma[2];
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  return Eigen::kroneckerProduct(a, b).eval();
}

/// Diagonal spatial part (p - eA)^2/2m + e Phi_0 over the plane-wave modes.
Eigen::MatrixXcd spatial_operator(const FieldConfig& cfg, const PlaneWaveBasis& basis) {
  const auto ks = basis.k_points();
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(ks.size(), ks.size());
  for (std::size_t i = 0; i < ks.size(); ++i) {
    const Vec3d kin = ks[i] - cfg.charge * cfg.vector_potential;
    h(i, i) = kin.squaredNorm() / (2.0 * cfg.mass) + cfg.charge * cfg.scalar_potential;
  }
  return h;
}

}  // namespace

void FieldConfig::validate(double tol) const {
  if (mass <= 0.0) throw std::invalid_argument("mass must be positive");
  if (phi_samples && phi_samples->size() >= 3) {
    if (sample_spacing <= 0.0) throw std::invalid_argument("sample spacing must be positive");
    if (sample_axis < 0 || sample_axis > 2)
      throw std::invalid_argument("sample axis must be 0, 1 or 2");
    const auto& phi = *phi_samples;
    for (std::size_t i = 1; i + 1 < phi.size(); ++i) {
      const double grad = (phi[i + 1] - phi[i - 1]) / (2.0 * sample_spacing);
      if (std::abs(-grad - e_field[sample_axis]) > tol)
        throw std::invalid_argument("sampled potential inconsistent with e_field");
    }
  }
}

std::vector<Vec3d> PlaneWaveBasis::k_points() const {
  if (modes_per_axis < 1 || dims < 1 || dims > 3 || box_length <= 0.0)
    throw std::invalid_argument("invalid plane-wave basis descriptor");
  const double dk = 2.0 * std::numbers::pi / box_length;
  std::vector<int> modes(modes_per_axis);
  for (int i = 0; i < modes_per_axis; ++i) modes[i] = i - modes_per_axis / 2;

  std::vector<Vec3d> ks;
  const int total = size();
  ks.reserve(total);
  for (int idx = 0; idx < total; ++idx) {
    int rest = idx;
    Vec3d k = Vec3d::Zero();
    for (int d = 0; d < dims; ++d) {
      k[d] = dk * modes[rest % modes_per_axis];
      rest /= modes_per_axis;
    }
    ks.push_back(k);
  }
  return ks;
}

int PlaneWaveBasis::size() const {
  int n = 1;
  for (int d = 0; d < dims; ++d) n *= modes_per_axis;
  return n;
}

PauliOperator build_h0(const FieldConfig& cfg, const PlaneWaveBasis& basis) {
  cfg.validate();
  const int n = basis.size();
  const Eigen::MatrixXcd space = spatial_operator(cfg, basis);
  const Mat2c spin = -(cfg.charge / (2.0 * cfg.mass)) * sigma_dot(cfg.b_field);
  Eigen::MatrixXcd h = kron(Eigen::MatrixXcd::Identity(2, 2), space) +
                       kron(spin, Eigen::MatrixXcd::Identity(n, n));
  return {std::move(h), OperatorLabel::h0, n};
}

PauliOperator build_h1(const FieldConfig& cfg) {
  cfg.validate();
  const cplx i(0.0, 1.0);
  Eigen::MatrixXcd h = i * (cfg.charge / (2.0 * cfg.mass)) * sigma_dot(cfg.e_field);
  return {std::move(h), OperatorLabel::h1, 1};
}

PauliOperator build_full_pauli(const FieldConfig& cfg, const PlaneWaveBasis& basis) {
  cfg.validate();
  const int n = basis.size();
  const Eigen::MatrixXcd space = spatial_operator(cfg, basis);
  const cplx i(0.0, 1.0);

  // -(e/m) Sigma.B + (e/m) K.E on the 4-component spinor:
  // Sigma = (1/2) diag(sigma, sigma), K = (i/2) antidiag(sigma, sigma).
  const Mat2c sb = sigma_dot(cfg.b_field);
  const Mat2c se = sigma_dot(cfg.e_field);
  Mat4c spin = Mat4c::Zero();
  const double c = cfg.charge / (2.0 * cfg.mass);
  spin.topLeftCorner<2, 2>() = -c * sb;
  spin.bottomRightCorner<2, 2>() = -c * sb;
  spin.topRightCorner<2, 2>() = i * c * se;
  spin.bottomLeftCorner<2, 2>() = i * c * se;

  Eigen::MatrixXcd h = kron(Eigen::MatrixXcd::Identity(4, 4), space) +
                       kron(spin, Eigen::MatrixXcd::Identity(n, n));
  return {std::move(h), OperatorLabel::full, n};
}

std::pair<Eigen::VectorXcd, Eigen::VectorXcd> basis_change_pm(
    const Eigen::VectorXcd& phi, const Eigen::VectorXcd& chi) {
  if (phi.size() != chi.size())
    throw std::invalid_argument("basis_change_pm: mismatched dimensions");
  return {phi + chi, phi - chi};
}

Eigen::MatrixXcd pm_transform(const PauliOperator& full) {
  if (full.label != OperatorLabel::full)
    throw std::invalid_argument("pm_transform expects a full 4-component operator");
  const int half = static_cast<int>(full.matrix.rows()) / 2;
  Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(2 * half, 2 * half);
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(half, half);
  p.topLeftCorner(half, half) = id;
  p.topRightCorner(half, half) = id;
  p.bottomLeftCorner(half, half) = id;
  p.bottomRightCorner(half, half) = -id;
  // P^{-1} = P / 2
  return p * full.matrix * p / 2.0;
}

double off_block_residual(const Eigen::MatrixXcd& transformed) {
  const int half = static_cast<int>(transformed.rows()) / 2;
  const double upper = max_abs(Eigen::MatrixXcd(transformed.topRightCorner(half, half)));
  const double lower = max_abs(Eigen::MatrixXcd(transformed.bottomLeftCorner(half, half)));
  return std::max(upper, lower);
}

double check_commutation(const FieldConfig& cfg, const PlaneWaveBasis& basis) {
  const PauliOperator h0 = build_h0(cfg, basis);
  const PauliOperator h1 = build_h1(cfg);
  const int n = basis.size();
  const Eigen::MatrixXcd h1x = kron(h1.matrix, Eigen::MatrixXcd::Identity(n, n));
  return max_abs(Eigen::MatrixXcd(h0.matrix * h1x - h1x * h0.matrix));
}

SpectrumResult splitting_spectrum(const FieldConfig& cfg, const PlaneWaveBasis& basis) {
  cfg.validate();
  if (cfg.b_field.norm() != 0.0)
    throw std::invalid_argument("splitting_spectrum requires B = 0");

  const PauliOperator h0 = build_h0(cfg, basis);
  const int n = basis.size();
  const Eigen::MatrixXcd h1x =
      kron(build_h1(cfg).matrix, Eigen::MatrixXcd::Identity(n, n));

  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> plus(h0.matrix + h1x);
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> minus(h0.matrix - h1x);
  if (plus.info() != Eigen::Success || minus.info() != Eigen::Success)
    throw std::runtime_error("eigendecomposition failed");

  const int dim = static_cast<int>(h0.matrix.rows());
  SpectrumResult out;
  std::vector<bool> used(dim, false);
  for (int i = 0; i < dim; ++i) {
    // Pair across branches by maximal eigenvector overlap.
    int best = -1;
    double best_overlap = -1.0;
    for (int j = 0; j < dim; ++j) {
      if (used[j]) continue;
      const double ov =
          std::abs(plus.eigenvectors().col(i).dot(minus.eigenvectors().col(j)));
      if (ov > best_overlap) {
        best_overlap = ov;
        best = j;
      }
    }
    used[best] = true;
    out.plus_branch.push_back(plus.eigenvalues()[i]);
    out.minus_branch.push_back(minus.eigenvalues()[best]);
    out.pair_splittings.push_back(plus.eigenvalues()[i] - minus.eigenvalues()[best]);
  }

  int ground = 0;
  for (int i = 1; i < dim; ++i)
    if (out.plus_branch[i].real() < out.plus_branch[ground].real()) ground = i;
  out.splitting = out.pair_splittings[ground];
  out.splitting_magnitude = std::abs(out.splitting);
  return out;
}

Eigen::MatrixXd schrodinger_1d(const std::vector<double>& e_phi, double mass,
                               double spacing) {
  const int n = static_cast<int>(e_phi.size());
  if (n < 3) throw std::invalid_argument("schrodinger_1d needs at least 3 grid points");
  if (mass <= 0.0 || spacing <= 0.0)
    throw std::invalid_argument("mass and spacing must be positive");
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
  const double hop = 1.0 / (2.0 * mass * spacing * spacing);
  for (int i = 0; i < n; ++i) {
    h(i, i) = 2.0 * hop + e_phi[i];
    h(i, (i + 1) % n) -= hop;
    h(i, (i + n - 1) % n) -= hop;
  }
  return h;
}

}  // namespace boostkit::pauli
