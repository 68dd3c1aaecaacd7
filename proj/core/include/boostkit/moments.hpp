#pragma once

#include <vector>

#include "boostkit/linalg.hpp"

// 4D orbital-angular-momentum and electromagnetic-moment tensors of charged
// particle systems, and the multipole expansion of the static 4-potential.
// Natural units, charges in units of e, |v| < 1.
namespace boostkit::moments {

struct ChargedParticle {
  double rest_mass = 1.0;   // > 0
  double charge = 1.0;      // units of e
  Vec4d position{0, 0, 0, 0};  // (t, x, y, z)
  Vec3d velocity{0, 0, 0};     // |v| < 1

  double gamma() const;
  Vec4d four_velocity() const;   // u = gamma (1, v); u.u = 1
  Vec4d four_momentum() const;   // p = m u
  double relativistic_mass() const { return gamma() * rest_mass; }
};

struct ParticleSystem {
  std::vector<ChargedParticle> particles;
  double common_time = 0.0;

  /// Throws std::invalid_argument if empty, |v| >= 1, m <= 0, or any
  /// particle's time coordinate differs from common_time.
  void validate() const;
};

struct OrbitalTensor {
  Mat4d l;  // L^{mu nu}, antisymmetric
};

struct MomentTensor {
  Mat4d m;  // M^{mu nu}, antisymmetric
};

/// L^{mu nu} = sum_n (x^mu p^nu - x^nu p^mu).
OrbitalTensor orbital_tensor(const ParticleSystem& sys);

/// M^{mu nu} = (1/2) sum_n e_n (x^mu u^nu - x^nu u^mu) dtau/dt
///           = (1/2) sum_n e_n (x^mu (1,v)^nu - x^nu (1,v)^mu).
/// The dtau/dt = 1/gamma factor from the delta-function current makes the
/// per-particle identity M = (e/2m') L exact with m' = gamma m.
MomentTensor moment_tensor(const ParticleSystem& sys);

/// Max-entry |M^{mu nu} - (e/2m') L^{mu nu}|. Requires all particles to share
/// one charge and one speed (single m'); throws std::invalid_argument otherwise.
double verify_moment_relation(const ParticleSystem& sys);

/// (M^{23}, M^{31}, M^{12})
Vec3d magnetic_moment(const MomentTensor& m);

/// (M^{01}, M^{02}, M^{03})
Vec3d electric_moment(const MomentTensor& m);

struct LoopSegment {
  Vec3d midpoint;
  Vec3d dl;        // direction * length
  double current;
};

struct StaticCurrentLoop {
  std::vector<LoopSegment> segments;

  /// Residual of sum(dl) relative to sum(|dl|); ~0 for a closed loop.
  double closure_residual() const;
};

enum class MultipoleOrder { monopole, dipole };

/// Static multipole expansion of A^mu at field_point, truncated at `order`.
/// Monopole: (1/4pi|x|) * integral(J^mu); dipole adds x.p_el/(4pi|x|^3) to A^0
/// and (m x x)/(4pi|x|^3) to A, with m from the moment tensor rearrangement.
/// Throws std::invalid_argument if the field point is inside the source radius.
Vec4d multipole_potential(const ParticleSystem& sys, const Vec3d& field_point,
                          MultipoleOrder order);
Vec4d multipole_potential(const StaticCurrentLoop& loop, const Vec3d& field_point,
                          MultipoleOrder order);

/// Brute-force static potential: sum of e_n (1,v)^mu / (4pi|x - x_n|) over
/// particles, or I dl / (4pi|x - mid|) over segments. Throws on a field point
/// coincident with a source point.
Vec4d exact_potential_oracle(const ParticleSystem& sys, const Vec3d& field_point);
Vec4d exact_potential_oracle(const StaticCurrentLoop& loop, const Vec3d& field_point);

/// Relative residual of sum over segments of (x_i J_j + x_j J_i) |dl|, the
/// discrete form of the symmetric-moment identity for divergence-free currents.
double check_antisymmetry_identity(const StaticCurrentLoop& loop);

}  // namespace boostkit::moments
