#include <benchmark/benchmark.h>

#include "boostkit/clifford.hpp"
#include "boostkit/dirac_grid.hpp"
#include "boostkit/moments.hpp"
#include "boostkit/pauli.hpp"

using namespace boostkit;

static void BM_SpinTensor(benchmark::State& state) {
  const auto g = clifford::make_gamma();
  for (auto _ : state) {
    auto s = clifford::spin_tensor(g);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_SpinTensor);

static void BM_FiniteSpinorBoost(benchmark::State& state) {
  const auto s = clifford::spin_tensor(clifford::make_gamma());
  const Vec3d eta(0.3, -0.7, 1.1);
  for (auto _ : state) {
    auto b = clifford::finite_spinor_boost(s, eta);
    benchmark::DoNotOptimize(b);
  }
}
BENCHMARK(BM_FiniteSpinorBoost);

static void BM_BoostCovarianceResidual(benchmark::State& state) {
  const auto g = clifford::make_gamma();
  const auto s = clifford::spin_tensor(g);
  const Vec3d eta(0.5, 0.2, -0.4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(clifford::boost_covariance_residual(g, s, eta));
  }
}
BENCHMARK(BM_BoostCovarianceResidual);

static void BM_MomentTensor(benchmark::State& state) {
  moments::ParticleSystem sys;
  for (int i = 0; i < state.range(0); ++i) {
    moments::ChargedParticle p;
    p.position = Vec4d(0.0, 0.01 * i, -0.02 * i, 0.03 * i);
    p.velocity = Vec3d(0.1, 0.0, 0.2);
    sys.particles.push_back(p);
  }
  for (auto _ : state) {
    auto m = moments::moment_tensor(sys);
    benchmark::DoNotOptimize(m);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MomentTensor)->Range(8, 4096)->Complexity(benchmark::oN);

static void BM_MultipoleVsOracle(benchmark::State& state) {
  moments::StaticCurrentLoop loop;
  const int n = static_cast<int>(state.range(0));
  const double r = 1.0, step = 2.0 * 3.14159265358979312 / n;
  for (int i = 0; i < n; ++i) {
    const double th = (i + 0.5) * step;
    loop.segments.push_back(
        {Vec3d(r * std::cos(th), r * std::sin(th), 0.0),
         r * step * Vec3d(-std::sin(th), std::cos(th), 0.0), 1.0});
  }
  const Vec3d x(6.0, 0.0, 8.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(moments::exact_potential_oracle(loop, x));
  }
}
BENCHMARK(BM_MultipoleVsOracle)->Range(16, 1024);

static void BM_SplittingSpectrum(benchmark::State& state) {
  pauli::FieldConfig cfg;
  cfg.e_field = Vec3d(0, 0, 1e-3);
  pauli::PlaneWaveBasis basis;
  basis.modes_per_axis = static_cast<int>(state.range(0));
  basis.dims = 1;
  for (auto _ : state) {
    auto s = pauli::splitting_spectrum(cfg, basis);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_SplittingSpectrum)->Arg(3)->Arg(9)->Arg(21);

static void BM_BuildDirac1D(benchmark::State& state) {
  dirac_grid::Grid1D grid{static_cast<int>(state.range(0)), 0.1};
  dirac_grid::FieldConfig1D cfg;
  for (auto _ : state) {
    auto op = dirac_grid::build_dirac_1d(grid, cfg, 1.0);
    benchmark::DoNotOptimize(op);
  }
}
BENCHMARK(BM_BuildDirac1D)->Range(64, 1024);

static void BM_DiracSpectrum(benchmark::State& state) {
  dirac_grid::Grid1D grid{static_cast<int>(state.range(0)), 0.1};
  dirac_grid::FieldConfig1D cfg;
  const auto op = dirac_grid::build_dirac_1d(grid, cfg, 1.0);
  for (auto _ : state) {
    auto spec = dirac_grid::hermitian_spectrum(op.matrix);
    benchmark::DoNotOptimize(spec);
  }
}
BENCHMARK(BM_DiracSpectrum)->Range(64, 512);

BENCHMARK_MAIN();
