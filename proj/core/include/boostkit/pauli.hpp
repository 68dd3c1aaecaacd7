#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "boostkit/linalg.hpp"

// Semi-nonrelativistic Hamiltonian with the boost-generator (K.E) coupling,
// the psi_+/psi_- block diagonalization, and the electrostatic splitting
// spectrum. Natural units (hbar = c = 1).
namespace boostkit::pauli {

/// Uniform external fields. Optional 1D samples of the scalar potential let a
/// consistency check compare E against -grad(Phi) by central differences.
struct FieldConfig {
  Vec3d e_field{0, 0, 0};
  Vec3d b_field{0, 0, 0};
  double scalar_potential = 0.0;     // uniform Phi_0
  Vec3d vector_potential{0, 0, 0};   // uniform A_0
  double charge = 1.0;
  double mass = 1.0;

  // Optional samples Phi(x_i) on a uniform axis-aligned 1D grid, for the
  // E = -grad(Phi) consistency check only.
  std::optional<std::vector<double>> phi_samples;
  double sample_spacing = 1.0;
  int sample_axis = 0;

  /// Throws std::invalid_argument if mass <= 0 or the sampled potential
  /// gradient disagrees with e_field beyond tol.
  void validate(double tol = 1e-8) const;
};

/// Finite plane-wave basis: periodic box of length box_length per axis,
/// modes n in [-(modes_per_axis-1)/2, ... ] with k = 2 pi n / L.
struct PlaneWaveBasis {
  int modes_per_axis = 5;
  int dims = 1;
  double box_length = 10.0;

  std::vector<Vec3d> k_points() const;
  int size() const;  // number of spatial modes
};

enum class OperatorLabel { h0, h1, full, block };

struct PauliOperator {
  Eigen::MatrixXcd matrix;
  OperatorLabel label;
  int spatial_dim = 1;  // spatial basis size; spin factor is 2 (or 4 for full)
};

/// H0 = (p - eA)^2/2m + e Phi - (e/2m) sigma.B on spatial (x) spin.
/// Basis ordering is spin-major: index = s * N + ik.
PauliOperator build_h0(const FieldConfig& cfg, const PlaneWaveBasis& basis);

/// H1 = i (e/2m) sigma.E, the bare 2x2 spin operator (identity in space).
PauliOperator build_h1(const FieldConfig& cfg);

/// Eq.-14-style 4-component operator: (p - eA)^2/2m + e Phi
/// - (e/m) Sigma.B + (e/m) K.E, with Sigma and K the 4x4 generator blocks.
/// Component-major ordering: 4 blocks of spatial size N in order
/// (phi_up, phi_dn, chi_up, chi_dn).
PauliOperator build_full_pauli(const FieldConfig& cfg, const PlaneWaveBasis& basis);

/// psi_+ = phi + chi, psi_- = phi - chi (unnormalized).
/// Throws std::invalid_argument on mismatched dimensions.
std::pair<Eigen::VectorXcd, Eigen::VectorXcd> basis_change_pm(
    const Eigen::VectorXcd& phi, const Eigen::VectorXcd& chi);

/// Apply the psi_+/psi_- change of basis to a full 4-component operator;
/// returns the transformed matrix (block-diagonal when the coupling is the
/// uniform i(e/2m) sigma.E term).
Eigen::MatrixXcd pm_transform(const PauliOperator& full);

/// Max-entry magnitude of the two off-diagonal blocks of a pm-transformed
/// full operator.
double off_block_residual(const Eigen::MatrixXcd& transformed);

/// Max-entry norm of [H0, H1] on the given basis (H1 expanded over space).
double check_commutation(const FieldConfig& cfg, const PlaneWaveBasis& basis);

/// Eigenvalues of H0 + H1 and H0 - H1 paired by eigenvector overlap.
struct SpectrumResult {
  std::vector<cplx> plus_branch;        // eigenvalue of H0 + H1, per pair
  std::vector<cplx> minus_branch;       // matched eigenvalue of H0 - H1
  std::vector<cplx> pair_splittings;    // (plus - minus) = 2 eps_1 per pair
  cplx splitting;                       // 2 eps_1 of the lowest-Re(E) pair
  double splitting_magnitude = 0.0;     // |2 eps_1|
  double hermitian_tolerance = 1e-10;   // |Im| below this marks a real eigenvalue
};

/// Requires B = 0 (uniform E is structural in FieldConfig); throws otherwise.
/// Eigenvalues are reported as complex: H1 is anti-Hermitian, so the
/// splitting is imaginary with |2 eps_1| = (e/m)|E|.
SpectrumResult splitting_spectrum(const FieldConfig& cfg, const PlaneWaveBasis& basis);

/// Lattice Schroedinger/Pauli spatial operator p^2/2m + ePhi on a periodic
/// 1D grid (central second difference), spin-free. Used by the Dirac
/// nonrelativistic-limit comparison.
Eigen::MatrixXd schrodinger_1d(const std::vector<double>& e_phi, double mass,
                               double spacing);

}  // namespace boostkit::pauli
