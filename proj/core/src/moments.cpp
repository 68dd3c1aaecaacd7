#include "boostkit/moments.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace boostkit::moments {

namespace {
constexpr double four_pi = 4.0 * std::numbers::pi;

double source_radius(const ParticleSystem& sys) {
  double r = 0.0;
  for (const auto& p : sys.particles) r = std::max(r, p.position.tail<3>().norm());
  return r;
}

double source_radius(const StaticCurrentLoop& loop) {
  double r = 0.0;
  for (const auto& s : loop.segments) r = std::max(r, s.midpoint.norm());
  return r;
}
}  // namespace

double ChargedParticle::gamma() const {
  const double v2 = velocity.squaredNorm();
  if (v2 >= 1.0) throw std::invalid_argument("particle speed must satisfy |v| < 1");
  return 1.0 / std::sqrt(1.0 - v2);
}

Vec4d ChargedParticle::four_velocity() const {
  const double g = gamma();
  Vec4d u;
  u << g, g * velocity[0], g * velocity[1], g * velocity[2];
  return u;
}

Vec4d ChargedParticle::four_momentum() const { return rest_mass * four_velocity(); }

void ParticleSystem::validate() const {
  if (particles.empty()) throw std::invalid_argument("particle system is empty");
  for (const auto& p : particles) {
    if (p.rest_mass <= 0.0) throw std::invalid_argument("rest mass must be positive");
    if (p.velocity.squaredNorm() >= 1.0)
      throw std::invalid_argument("particle speed must satisfy |v| < 1");
    if (p.position[0] != common_time)
      throw std::invalid_argument("all particles must share common_time");
  }
}

OrbitalTensor orbital_tensor(const ParticleSystem& sys) {
  sys.validate();
  Mat4d l = Mat4d::Zero();
  for (const auto& pt : sys.particles) {
    const Vec4d x = pt.position;
    const Vec4d p = pt.four_momentum();
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = mu + 1; nu < 4; ++nu) {
        const double v = x[mu] * p[nu] - x[nu] * p[mu];
        l(mu, nu) += v;
        l(nu, mu) -= v;
      }
  }
  return {l};
}

MomentTensor moment_tensor(const ParticleSystem& sys) {
  sys.validate();
  Mat4d m = Mat4d::Zero();
  for (const auto& pt : sys.particles) {
    const Vec4d x = pt.position;
    // u dtau/dt = (1, v)
    Vec4d w;
    w << 1.0, pt.velocity[0], pt.velocity[1], pt.velocity[2];
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = mu + 1; nu < 4; ++nu) {
        const double v = 0.5 * pt.charge * (x[mu] * w[nu] - x[nu] * w[mu]);
        m(mu, nu) += v;
        m(nu, mu) -= v;
      }
  }
  return {m};
}

double verify_moment_relation(const ParticleSystem& sys) {
  sys.validate();
  const double e0 = sys.particles.front().charge;
  const double s0 = sys.particles.front().velocity.norm();
  const double m0 = sys.particles.front().rest_mass;
  for (const auto& p : sys.particles) {
    if (p.charge != e0)
      throw std::invalid_argument("moment relation requires equal charges");
    if (std::abs(p.velocity.norm() - s0) > 1e-14 || p.rest_mass != m0)
      throw std::invalid_argument("moment relation requires a single relativistic mass");
  }
  const double m_rel = sys.particles.front().relativistic_mass();
  const Mat4d lhs = moment_tensor(sys).m;
  const Mat4d rhs = (e0 / (2.0 * m_rel)) * orbital_tensor(sys).l;
  return max_abs(Eigen::MatrixXd(lhs - rhs));
}

Vec3d magnetic_moment(const MomentTensor& m) {
  return Vec3d(m.m(2, 3), m.m(3, 1), m.m(1, 2));
}

Vec3d electric_moment(const MomentTensor& m) {
  return Vec3d(m.m(0, 1), m.m(0, 2), m.m(0, 3));
}

double StaticCurrentLoop::closure_residual() const {
  Vec3d total = Vec3d::Zero();
  double scale = 0.0;
  for (const auto& s : segments) {
    total += s.dl;
    scale += s.dl.norm();
  }
  return scale > 0.0 ? total.norm() / scale : 0.0;
}

Vec4d multipole_potential(const ParticleSystem& sys, const Vec3d& x, MultipoleOrder order) {
  sys.validate();
  const double r = x.norm();
  if (r <= source_radius(sys))
    throw std::invalid_argument("field point inside source radius");

  Vec4d a = Vec4d::Zero();
  // monopole: integral of J^mu = sum e (1, v)
  for (const auto& p : sys.particles) {
    a[0] += p.charge;
    a.tail<3>() += p.charge * p.velocity;
  }
  a /= four_pi * r;

  if (order == MultipoleOrder::dipole) {
    Vec3d dip_el = Vec3d::Zero();
    for (const auto& p : sys.particles)
      dip_el += p.charge * Vec3d(p.position.tail<3>());
    a[0] += x.dot(dip_el) / (four_pi * r * r * r);

    const Vec3d mag = magnetic_moment(moment_tensor(sys));
    a.tail<3>() += mag.cross(x) / (four_pi * r * r * r);
  }
  return a;
}

Vec4d multipole_potential(const StaticCurrentLoop& loop, const Vec3d& x, MultipoleOrder order) {
  const double r = x.norm();
  if (r <= source_radius(loop))
    throw std::invalid_argument("field point inside source radius");

  Vec4d a = Vec4d::Zero();
  Vec3d mono = Vec3d::Zero();
  Vec3d mag = Vec3d::Zero();
  for (const auto& s : loop.segments) {
    mono += s.current * s.dl;
    mag += 0.5 * s.midpoint.cross(s.current * s.dl);
  }
  a.tail<3>() = mono / (four_pi * r);
  if (order == MultipoleOrder::dipole) {
    a.tail<3>() += mag.cross(x) / (four_pi * r * r * r);
  }
  return a;
}

Vec4d exact_potential_oracle(const ParticleSystem& sys, const Vec3d& x) {
  sys.validate();
  Vec4d a = Vec4d::Zero();
  for (const auto& p : sys.particles) {
    const Vec3d d = x - Vec3d(p.position.tail<3>());
    const double r = d.norm();
    if (r == 0.0) throw std::invalid_argument("field point coincides with a source point");
    a[0] += p.charge / (four_pi * r);
    a.tail<3>() += p.charge * p.velocity / (four_pi * r);
  }
  return a;
}

Vec4d exact_potential_oracle(const StaticCurrentLoop& loop, const Vec3d& x) {
  Vec4d a = Vec4d::Zero();
  for (const auto& s : loop.segments) {
    const double r = (x - s.midpoint).norm();
    if (r == 0.0) throw std::invalid_argument("field point coincides with a source point");
    a.tail<3>() += s.current * s.dl / (four_pi * r);
  }
  return a;
}

double check_antisymmetry_identity(const StaticCurrentLoop& loop) {
  Eigen::Matrix3d sym = Eigen::Matrix3d::Zero();
  double scale = 0.0;
  for (const auto& s : loop.segments) {
    const Vec3d j = s.current * s.dl;  // integral J d^3x over the segment
    for (int i = 0; i < 3; ++i)
      for (int k = 0; k < 3; ++k) sym(i, k) += s.midpoint[i] * j[k] + s.midpoint[k] * j[i];
    scale += s.midpoint.norm() * j.norm();
  }
  return scale > 0.0 ? max_abs(Eigen::MatrixXd(sym)) / scale : max_abs(Eigen::MatrixXd(sym));
}

}  // namespace boostkit::moments
