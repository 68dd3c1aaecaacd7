#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include <unsupported/Eigen/KroneckerProduct>

#include "boostkit/clifford.hpp"
#include "boostkit/pauli.hpp"

using namespace boostkit;
using namespace boostkit::pauli;

namespace {

std::vector<double> sorted_real(const Eigen::MatrixXcd& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
  std::vector<double> out(es.eigenvalues().data(),
                          es.eigenvalues().data() + es.eigenvalues().size());
  return out;
}

}  // namespace

TEST_CASE("free H0: eigenvalues k^2/2m, each doubly spin-degenerate") {
  FieldConfig cfg;
  cfg.mass = 2.0;
  PlaneWaveBasis basis{5, 1, 8.0};
  const auto h0 = build_h0(cfg, basis);
  CHECK(hermiticity_residual(h0.matrix) < 1e-12);

  std::vector<double> expect;
  for (const auto& k : basis.k_points()) {
    expect.push_back(k.squaredNorm() / (2.0 * cfg.mass));
    expect.push_back(k.squaredNorm() / (2.0 * cfg.mass));
  }
  std::sort(expect.begin(), expect.end());
  const auto got = sorted_real(h0.matrix);
  REQUIRE(got.size() == expect.size());
  for (std::size_t i = 0; i < got.size(); ++i)
    CHECK(got[i] == doctest::Approx(expect[i]).epsilon(1e-12));
}

TEST_CASE("H0 with B = B0 z: spin splitting e B0 / m at fixed k") {
  FieldConfig cfg;
  cfg.b_field = Vec3d(0, 0, 0.7);
  cfg.charge = 1.3;
  cfg.mass = 1.0;
  PlaneWaveBasis basis{3, 1, 10.0};
  const auto h0 = build_h0(cfg, basis);
  const auto eigs = sorted_real(h0.matrix);

  // each spatial level k^2/2m carries sigma_3 = +-1 partners at -+ e B0 / 2m,
  // a splitting of e B0 / m at fixed k
  const double half = cfg.charge * 0.7 / (2.0 * cfg.mass);
  std::vector<double> expect;
  for (const auto& k : basis.k_points()) {
    expect.push_back(k.squaredNorm() / (2.0 * cfg.mass) - half);
    expect.push_back(k.squaredNorm() / (2.0 * cfg.mass) + half);
  }
  std::sort(expect.begin(), expect.end());
  REQUIRE(eigs.size() == expect.size());
  for (std::size_t i = 0; i < eigs.size(); ++i)
    CHECK(eigs[i] == doctest::Approx(expect[i]).epsilon(1e-12));
  CHECK(eigs.front() == doctest::Approx(-half));
}

TEST_CASE("constant scalar potential shifts the whole H0 spectrum") {
  FieldConfig cfg;
  PlaneWaveBasis basis{5, 1, 10.0};
  const auto base = sorted_real(build_h0(cfg, basis).matrix);
  cfg.scalar_potential = 0.37;
  cfg.charge = 2.0;
  const auto shifted = sorted_real(build_h0(cfg, basis).matrix);
  for (std::size_t i = 0; i < base.size(); ++i)
    CHECK(shifted[i] - base[i] == doctest::Approx(0.74).epsilon(1e-12));
}

TEST_CASE("H1 = i(e/2m) sigma.E: anti-Hermitian with eigenvalues +-i(e/2m)|E|") {
  FieldConfig cfg;
  cfg.e_field = Vec3d(0, 0, 0.5);
  cfg.charge = 1.0;
  cfg.mass = 2.0;
  const auto h1 = build_h1(cfg);
  CHECK(anti_hermiticity_residual(h1.matrix) < 1e-15);

  const double c = cfg.charge * 0.5 / (2.0 * cfg.mass);
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(h1.matrix);
  std::vector<double> ims = {es.eigenvalues()[0].imag(), es.eigenvalues()[1].imag()};
  std::sort(ims.begin(), ims.end());
  CHECK(ims[0] == doctest::Approx(-c));
  CHECK(ims[1] == doctest::Approx(c));
  CHECK(std::abs(es.eigenvalues()[0].real()) < 1e-15);

  // E = (0,0,E0) gives i(e/2m) E0 sigma_3 exactly
  const cplx i(0, 1);
  Eigen::MatrixXcd expect = i * c * Eigen::MatrixXcd(pauli_matrices()[2]);
  CHECK(max_abs(Eigen::MatrixXcd(h1.matrix - expect)) < 1e-15);

  // linearity in |E|
  cfg.e_field *= 2.0;
  CHECK(max_abs(Eigen::MatrixXcd(build_h1(cfg).matrix - 2.0 * h1.matrix)) < 1e-15);

  cfg.e_field = Vec3d::Zero();
  CHECK(max_abs(build_h1(cfg).matrix) == 0.0);
}

TEST_CASE("full Pauli operator block-diagonalizes under the psi+- change") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    FieldConfig cfg;
    cfg.e_field = Vec3d(u(rng), u(rng), u(rng));
    cfg.b_field = Vec3d(u(rng), u(rng), u(rng));
    cfg.scalar_potential = u(rng);
    cfg.vector_potential = Vec3d(u(rng), u(rng), u(rng));
    cfg.charge = 1.0 + 0.5 * u(rng);
    cfg.mass = 1.5 + 0.5 * u(rng);
    PlaneWaveBasis basis{3, 1, 7.0};

    const auto full = build_full_pauli(cfg, basis);
    const Eigen::MatrixXcd t = pm_transform(full);
    CHECK(off_block_residual(t) < 1e-12);

    // diagonal blocks are H0 +- H1
    const int half = static_cast<int>(t.rows()) / 2;
    const auto h0 = build_h0(cfg, basis);
    const Eigen::MatrixXcd h1x = Eigen::MatrixXcd(
        Eigen::kroneckerProduct(build_h1(cfg).matrix,
                                Eigen::MatrixXcd::Identity(basis.size(), basis.size())));
    CHECK(max_abs(Eigen::MatrixXcd(t.topLeftCorner(half, half) - h0.matrix - h1x)) <
          1e-12);
    CHECK(max_abs(Eigen::MatrixXcd(t.bottomRightCorner(half, half) - h0.matrix + h1x)) <
          1e-12);
  }
}

TEST_CASE("full Pauli spin coefficients match the clifford Sigma and K blocks") {
  FieldConfig cfg;
  cfg.e_field = Vec3d(0.3, -0.2, 0.9);
  cfg.b_field = Vec3d(-0.6, 0.1, 0.4);
  cfg.charge = 1.1;
  cfg.mass = 0.9;
  PlaneWaveBasis basis{1, 1, 5.0};  // single k = 0 mode isolates the spin sector

  const auto full = build_full_pauli(cfg, basis);

  const auto g = clifford::make_gamma();
  const auto s = clifford::spin_tensor(g);
  const auto sv = clifford::sigma_vector(s);
  const auto kv = clifford::k_vector(s);
  Mat4c expect = Mat4c::Zero();
  for (int a = 0; a < 3; ++a)
    expect += (cfg.charge / cfg.mass) * (-cfg.b_field[a] * sv[a] + cfg.e_field[a] * kv[a]);
  // remove the scalar spatial part
  expect += (cfg.charge * cfg.scalar_potential +
             (cfg.charge * cfg.vector_potential).squaredNorm() / (2 * cfg.mass)) *
            Mat4c::Identity();
  CHECK(max_abs(Eigen::MatrixXcd(full.matrix - expect)) < 1e-13);
}

TEST_CASE("free full Pauli: doubly duplicated Schroedinger spectrum") {
  FieldConfig cfg;
  PlaneWaveBasis basis{5, 1, 10.0};
  const auto full = build_full_pauli(cfg, basis);
  const auto eigs = sorted_real(full.matrix);
  std::vector<double> expect;
  for (const auto& k : basis.k_points())
    for (int c = 0; c < 4; ++c) expect.push_back(k.squaredNorm() / (2.0 * cfg.mass));
  std::sort(expect.begin(), expect.end());
  for (std::size_t i = 0; i < expect.size(); ++i)
    CHECK(eigs[i] == doctest::Approx(expect[i]).epsilon(1e-12));
}

TEST_CASE("basis_change_pm round trip and edge cases") {
  Eigen::VectorXcd phi(3), chi(3);
  phi << cplx(1, 1), cplx(0, -2), cplx(3, 0);
  chi << cplx(0.5, 0), cplx(1, 1), cplx(-1, 2);

  auto [plus, minus] = basis_change_pm(phi, chi);
  CHECK((0.5 * (plus + minus) - phi).norm() < 1e-15);
  CHECK((0.5 * (plus - minus) - chi).norm() < 1e-15);

  auto [p2, m2] = basis_change_pm(phi, Eigen::VectorXcd::Zero(3));
  CHECK((p2 - phi).norm() == 0.0);
  CHECK((m2 - phi).norm() == 0.0);

  auto [p3, m3] = basis_change_pm(phi, phi);
  CHECK(m3.norm() == 0.0);

  CHECK_THROWS_AS((void)basis_change_pm(phi, Eigen::VectorXcd::Zero(2)),
                  std::invalid_argument);
}

TEST_CASE("applying the +- change twice returns 2x the input") {
  Eigen::VectorXcd phi(2), chi(2);
  phi << cplx(1, 0), cplx(0, 1);
  chi << cplx(2, -1), cplx(0.3, 0.4);
  auto [p, m] = basis_change_pm(phi, chi);
  auto [pp, mm] = basis_change_pm(p, m);
  CHECK((pp - 2.0 * phi).norm() < 1e-15);
  CHECK((mm - 2.0 * chi).norm() < 1e-15);
}

TEST_CASE("commutation: [H0, H1] = 0 iff B = 0 (uniform E)") {
  PlaneWaveBasis basis{3, 1, 10.0};

  FieldConfig cfg;
  cfg.e_field = Vec3d(0.4, 0, 0);
  CHECK(check_commutation(cfg, basis) < 1e-12);

  cfg.e_field = Vec3d::Zero();
  cfg.b_field = Vec3d(0, 0, 1.0);
  CHECK(check_commutation(cfg, basis) == 0.0);

  // B = B0 z, E = E0 x: residual = 2 (e/2m)^2 B0 E0 from [sigma_3, sigma_1]
  cfg.e_field = Vec3d(0.5, 0, 0);
  cfg.b_field = Vec3d(0, 0, 0.8);
  cfg.charge = 1.2;
  cfg.mass = 0.7;
  const double c = cfg.charge / (2.0 * cfg.mass);
  CHECK(check_commutation(cfg, basis) == doctest::Approx(2.0 * c * c * 0.8 * 0.5));

  // linear growth in |B||E|
  cfg.b_field *= 2.0;
  CHECK(check_commutation(cfg, basis) ==
        doctest::Approx(4.0 * c * c * 0.8 * 0.5).epsilon(1e-10));
}

TEST_CASE("splitting spectrum: degeneracy at E = 0 and |2eps1| = (e/m)E0") {
  PlaneWaveBasis basis{5, 1, 10.0};
  FieldConfig cfg;
  cfg.charge = 1.0;
  cfg.mass = 1.0;

  SUBCASE("E = 0 restores exact degeneracy") {
    const auto spec = splitting_spectrum(cfg, basis);
    CHECK(spec.splitting_magnitude < 1e-14);
    for (const auto& d : spec.pair_splittings) CHECK(std::abs(d) < 1e-12);
  }

  SUBCASE("uniform E: every spatial level splits by (e/m)E0") {
    const double e0 = 1e-3;
    cfg.e_field = Vec3d(0, 0, e0);
    const auto spec = splitting_spectrum(cfg, basis);
    CHECK(spec.splitting_magnitude == doctest::Approx(e0).epsilon(1e-10));
    for (const auto& d : spec.pair_splittings) {
      CHECK(std::abs(d) == doctest::Approx(e0).epsilon(1e-10));
      CHECK(std::abs(d.real()) < 1e-12);  // splitting is imaginary
    }

    // linearity under E0 -> 2 E0
    cfg.e_field *= 2.0;
    const auto spec2 = splitting_spectrum(cfg, basis);
    CHECK(std::abs(spec2.splitting_magnitude - 2.0 * spec.splitting_magnitude) < 1e-12);
  }

  SUBCASE("nonzero B rejected") {
    cfg.b_field = Vec3d(0, 0, 0.1);
    CHECK_THROWS_AS((void)splitting_spectrum(cfg, basis), std::invalid_argument);
  }
}

TEST_CASE("field config consistency: sampled potential vs uniform E") {
  FieldConfig cfg;
  cfg.e_field = Vec3d(0.25, 0, 0);
  cfg.sample_spacing = 0.1;
  cfg.sample_axis = 0;
  std::vector<double> phi(11);
  for (int i = 0; i < 11; ++i) phi[i] = -0.25 * (i * 0.1);  // Phi = -E x
  cfg.phi_samples = phi;
  CHECK_NOTHROW(cfg.validate());

  (*cfg.phi_samples)[5] += 0.05;  // break consistency
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}
