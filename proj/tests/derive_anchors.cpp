// Prints the oracle runs behind the frozen regression anchors used by the
// unit and acceptance suites. Not part of ctest; rerun after changing any
// numerical path and compare.
#include <cstdio>

#include "oracles.hpp"
#include "pctoeplitz/bmo.hpp"
#include "pctoeplitz/experiments.hpp"
#include "pctoeplitz/hardy.hpp"
#include "pctoeplitz/spectra.hpp"

using namespace pctoeplitz;

int main() {
  const PiecewiseSymbol sgn = sign_symbol();
  auto sgn_fn = [](double t) { return complex{t < kPi ? 1.0 : -1.0, 0.0}; };

  std::printf("== sign coefficients: quadrature vs closed form\n");
  double worst = 0.0;
  for (int k = -9; k <= 9; ++k)
    worst = std::max(worst, std::abs(oracle::quadrature_coefficient(sgn_fn, k, 1 << 16) - oracle::sign_coefficient(k)));
  std::printf("max |quad - closed| = %.3e\n", worst);

  std::printf("== hardy_norm(1+z, p=1): quadrature refinement\n");
  for (int m : {1 << 10, 1 << 14, 1 << 18})
    std::printf("m=%d  %.15f  (4/pi = %.15f)\n", m, oracle::l1_mean({1.0, 1.0}, m), 4.0 / kPi);

  std::printf("== growth oracle (closed-form coefficients, dense convolution, direct midpoint L1)\n");
  for (int n : {64, 256}) {
    std::vector<complex> f(static_cast<std::size_t>(n + 1), 1.0);
    const int out = 16 * (n + 1);
    const auto g = oracle::dense_toeplitz_apply(oracle::sign_coefficient, f, out);
    const int m = 8 * out;
    const double r = oracle::l1_mean(g, m) / oracle::l1_mean(f, m);
    std::printf("n=%d oracle ratio=%.12f\n", n, r);
  }
  std::printf("== growth ladder (implementation)\n");
  const std::vector<int> ladder{64, 256, 1024, 4096};
  for (const auto& [name, sym] : {std::pair{"sgn", sgn},
                                  std::pair{"const", PiecewiseSymbol::trig_polynomial(CoefficientSequence::constant(1.0))},
                                  std::pair{"liplog", lip_log_exemplar_symbol()}}) {
    double lo = 1e300, hi = 0.0;
    for (const auto& row : h1_growth_experiment(sym, ladder)) {
      std::printf("%s n=%d ratio=%.17g out=%d\n", name, row.n, row.ratio, row.out_degree);
      lo = std::min(lo, row.ratio);
      hi = std::max(hi, row.ratio);
    }
    std::printf("%s max/min=%.12f\n", name, hi / lo);
  }

  std::printf("== probe: dilation oracle\n");
  for (int n : {32, 64, 128, 256, 512}) {
    const auto sec = toeplitz_section(sgn, n).entries;
    const Eigen::MatrixXcd shifted = sec - 2.0 * Eigen::MatrixXcd::Identity(n, n);
    std::printf("n=%d sgn-0 sigma=%.17g  sgn-2 sigma=%.17g\n", n, oracle::sigma_min_dilation(sec),
                oracle::sigma_min_dilation(shifted));
  }

  std::printf("== BMO all-intervals vs dyadic at small n\n");
  for (int n : {16, 32, 64}) {
    const GridFunction q = GridFunction::complementary_part(sgn, n);
    const GridFunction s = GridFunction::from_symbol(sgn, n);
    const auto aq = oracle::all_intervals(q.values());
    const auto as = oracle::all_intervals(s.values());
    std::printf("n=%d Q(sgn): dyadic bmo=%.6f all=%.6f  dyadic bmo_log=%.6f all=%.6f | sgn: dyadic bmo=%.6f all=%.6f\n", n,
                bmo_seminorm(q), aq.bmo, bmo_log_seminorm(q), aq.bmo_log, bmo_seminorm(s), as.bmo);
  }
  std::printf("== BMO_log ladders\n");
  const CoefficientSequence poly5(-5, {0.3, -0.2, 0.5, 0.1, 0.7, 1.0, 0.4, -0.6, 0.2, 0.25, -0.15});
  for (int e = 8; e <= 14; ++e) {
    const int n = 1 << e;
    std::printf("n=2^%d Q(sgn) bmo_log=%.12f  poly5 bmo_log=%.12f  sgn vmo(2pi/64)=%.6f\n", e,
                bmo_log_seminorm(GridFunction::complementary_part(sgn, n)),
                bmo_log_seminorm(GridFunction::from_coefficients(poly5, n)),
                vmo_defect(GridFunction::from_symbol(sgn, n), kTwoPi / 64).first);
  }

  std::printf("== lip_log\n");
  for (int n : {64, 256, 1024, 4096}) {
    const GridFunction s = GridFunction::from_symbol(sgn, n);
    const GridFunction e = GridFunction::sample([](double t) { return complex{lip_log_exemplar(t), 0.0}; }, n);
    std::printf("n=%d sgn=%.6f exemplar=%.6f\n", n, lip_log_seminorm(s), lip_log_seminorm(e));
  }

  std::printf("== douglas\n");
  {
    const auto rungs = douglas_spectrum_estimate(sgn, {0.9, 0.99, 0.999}, 4096, 8);
    const auto spec = essential_spectrum(sgn, 2.0, 256).points();
    for (const auto& r : rungs) std::printf("r=%.3f hausdorff=%.6f\n", r.r, hausdorff_distance(r.points, spec));
    for (const auto& r : douglas_spectrum_estimate(sgn, {0.9, 0.99, 0.999}, 16384, 16))
      std::printf("grid=16384 levels=16 r=%.3f hausdorff=%.17g\n", r.r, hausdorff_distance(r.points, spec));
    std::printf("poisson sgn(0.9, pi/2): series=%.15f quadrature=%.15f\n",
                poisson_extension(sgn, 0.9, kPi / 2, poisson_cutoff(0.9)).real(),
                oracle::poisson_quadrature(sgn_fn, 0.9, kPi / 2, 1 << 16).real());
  }

  std::printf("== lindelof (Blaschke a=0.5, degree 50, t=pi)\n");
  {
    const complex a = 0.5;
    std::vector<complex> c(51);
    c[0] = -a;
    for (int k = 1; k <= 50; ++k) c[k] = std::pow(std::conj(a), k - 1) * (1.0 - std::norm(a));
    const auto rep = lindelof_demo(CoefficientSequence(0, c), kPi);
    std::printf("left=%.15f%+.15fi right=%.15f%+.15fi diff=%.3e exact=%.15f\n", rep.left_limit.real(),
                rep.left_limit.imag(), rep.right_limit.real(), rep.right_limit.imag(), rep.difference,
                oracle::blaschke(a, -1.0).real());
  }
  return 0;
}
