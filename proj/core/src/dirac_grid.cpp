#include "boostkit/dirac_grid.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <tuple>

#include "boostkit/pauli.hpp"

namespace boostkit::dirac_grid {

namespace {

std::vector<double> expand_samples(const std::vector<double>& v, int n, const char* what) {
  if (v.empty()) return std::vector<double>(n, 0.0);
  if (v.size() == 1) return std::vector<double>(n, v[0]);
  if (static_cast<int>(v.size()) != n)
    throw std::invalid_argument(std::string(what) + " sample count must match grid size");
  return v;
}

/// Covariant central-difference momentum operator on site scalars,
/// P = -i (U_n shift_+ - U*_{n-1} shift_-) / 2a. Hermitian.
Eigen::MatrixXcd covariant_momentum(const Grid1D& grid, const std::vector<double>& a_x,
                                    double charge) {
  const int n = grid.n_points;
  const double a = grid.spacing;
  Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(n, n);
  const cplx i(0.0, 1.0);
  for (int s = 0; s < n; ++s) {
    const int sp = (s + 1) % n;
    const cplx u = std::exp(-i * charge * a * a_x[s]);  // Peierls phase on link s -> s+1
    p(s, sp) += -i / (2.0 * a) * u;
    p(sp, s) += i / (2.0 * a) * std::conj(u);
  }
  return p;
}

/// Wilson mass operator m + (r/2a)(2 - U shift_+ - U* shift_-). Hermitian.
Eigen::MatrixXcd wilson_mass(const Grid1D& grid, const std::vector<double>& a_x,
                             double charge, double mass, double r) {
  const int n = grid.n_points;
  const double a = grid.spacing;
  Eigen::MatrixXcd w =
      (mass + r / a) * Eigen::MatrixXcd::Identity(n, n);
  const cplx i(0.0, 1.0);
  for (int s = 0; s < n; ++s) {
    const int sp = (s + 1) % n;
    const cplx u = std::exp(-i * charge * a * a_x[s]);
    w(s, sp) -= r / (2.0 * a) * u;
    w(sp, s) -= r / (2.0 * a) * std::conj(u);
  }
  return w;
}

Eigen::MatrixXcd kron2(const Mat2c& spin, const Eigen::MatrixXcd& space) {
  const int n = static_cast<int>(space.rows());
  Eigen::MatrixXcd out(2 * n, 2 * n);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.block(i * n, j * n, n, n) = spin(i, j) * space;
  return out;
}

}  // namespace

void Grid1D::validate() const {
  if (n_points < 16) throw std::invalid_argument("grid needs at least 16 points");
  if (n_points % 2 != 0) throw std::invalid_argument("grid size must be even");
  if (spacing <= 0.0) throw std::invalid_argument("grid spacing must be positive");
}

LatticeDiracOperator build_dirac_1d(const Grid1D& grid, const FieldConfig1D& cfg,
                                    double wilson_r, bool allow_zero_r) {
  grid.validate();
  if (wilson_r > 1.0 || wilson_r < 0.0 || (wilson_r == 0.0 && !allow_zero_r))
    throw std::invalid_argument("wilson_r must lie in (0, 1]");

  const int n = grid.n_points;
  const auto a_x = expand_samples(cfg.a_x, n, "a_x");
  const auto phi = expand_samples(cfg.phi, n, "phi");

  const auto& sigma = pauli_matrices();
  const Eigen::MatrixXcd p = covariant_momentum(grid, a_x, cfg.charge);
  const Eigen::MatrixXcd wm = wilson_mass(grid, a_x, cfg.charge, cfg.mass, wilson_r);

  Eigen::MatrixXcd h = kron2(sigma[0], p) + kron2(sigma[2], wm);
  for (int s = 0; s < n; ++s) {
    const double v = cfg.charge * phi[s];
    h(s, s) += v;
    h(n + s, n + s) += v;
  }
  return {std::move(h), wilson_r, grid};
}

Eigen::MatrixXcd second_order_operator(const Grid1D& grid, const FieldConfig1D& cfg,
                                       double wilson_r) {
  grid.validate();
  if (wilson_r > 1.0 || wilson_r < 0.0)
    throw std::invalid_argument("wilson_r must lie in [0, 1]");

  const int n = grid.n_points;
  const double a = grid.spacing;
  const auto a_x = expand_samples(cfg.a_x, n, "a_x");
  const auto phi = expand_samples(cfg.phi, n, "phi");

  const Eigen::MatrixXcd p = covariant_momentum(grid, a_x, cfg.charge);
  const Eigen::MatrixXcd wm = wilson_mass(grid, a_x, cfg.charge, cfg.mass, wilson_r);
  const Eigen::MatrixXcd spatial = p * p + wm * wm;

  const auto& sigma = pauli_matrices();
  Eigen::MatrixXcd out = kron2(Mat2c::Identity(), spatial);

  // e S^{mu nu} F_{mu nu} = i e sigma_1 E_x with E_x = -dPhi/dx.
  const cplx i(0.0, 1.0);
  Eigen::MatrixXcd efield = Eigen::MatrixXcd::Zero(n, n);
  for (int s = 0; s < n; ++s) {
    const int sp = (s + 1) % n;
    const int sm = (s + n - 1) % n;
    efield(s, s) = -(phi[sp] - phi[sm]) / (2.0 * a);
  }
  out += i * cfg.charge * kron2(sigma[0], efield);
  return out;
}

double lattice_dispersion(double k, double mass, double wilson_r, double spacing) {
  const double mw = mass + (wilson_r / spacing) * (1.0 - std::cos(k * spacing));
  const double s = std::sin(k * spacing) / spacing;
  return std::sqrt(mw * mw + s * s);
}

Eigen::VectorXd hermitian_spectrum(const Eigen::MatrixXcd& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
  if (es.info() != Eigen::Success) throw std::runtime_error("eigendecomposition failed");
  return es.eigenvalues();
}

NonrelComparison nonrel_limit_compare(double well_depth, double well_width,
                                      double mass, const Grid1D& grid,
                                      double wilson_r) {
  grid.validate();
  if (mass <= 0.0) throw std::invalid_argument("mass must be positive");
  if (well_depth < 0.0) throw std::invalid_argument("well depth must be nonnegative");
  if (well_depth >= mass / 2.0)
    throw std::invalid_argument(
        "relativistic regime rejected: well depth must be below m/2 for the "
        "nonrelativistic comparison to be meaningful");

  const int n = grid.n_points;
  const double a = grid.spacing;
  const double center = 0.5 * grid.length();
  std::vector<double> phi(n, 0.0);
  for (int s = 0; s < n; ++s) {
    const double x = s * a;
    if (std::abs(x - center) <= 0.5 * well_width) phi[s] = -well_depth;
  }

  auto discrepancy = [&](double m) {
    FieldConfig1D cfg;
    cfg.phi = phi;
    cfg.mass = m;
    const auto dirac = build_dirac_1d(grid, cfg, wilson_r);
    const Eigen::VectorXd spec = hermitian_spectrum(dirac.matrix);
    double e_dirac = std::numeric_limits<double>::infinity();
    for (int i = 0; i < spec.size(); ++i)
      if (spec[i] > 0.5 * m) e_dirac = std::min(e_dirac, spec[i]);

    const Eigen::MatrixXd hs = pauli::schrodinger_1d(phi, m, a);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(hs);
    const double e_schrod = es.eigenvalues()[0];

    const double bound = e_dirac - m;
    return std::tuple{bound, e_schrod,
                      std::abs(bound - e_schrod) / std::abs(e_schrod)};
  };

  NonrelComparison out;
  auto [b1, s1, d1] = discrepancy(mass);
  auto [b2, s2, d2] = discrepancy(2.0 * mass);
  out.dirac_minus_m = b1;
  out.schrodinger = s1;
  out.rel_discrepancy = d1;
  out.rel_discrepancy_2m = d2;
  out.error_ratio = d1 > 0.0 ? d2 / d1 : 0.0;
  return out;
}

}  // namespace boostkit::dirac_grid
