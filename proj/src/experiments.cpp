#include "pctoeplitz/experiments.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <chrono>
#include <unsupported/Eigen/FFT>
#include <cmath>

#include "pctoeplitz/errors.hpp"
#include "pctoeplitz/hardy.hpp"
#include "pctoeplitz/spectra.hpp"

namespace pctoeplitz {

namespace {

constexpr int kMaxOutDegree = 1 << 24;

void check_increasing(const std::vector<int>& n_list, int lo, int budget, const char* what) {
  for (std::size_t i = 0; i < n_list.size(); ++i) {
    if (n_list[i] < lo) throw SizeError(std::string(what) + ": sizes out of range");
    if (i > 0 && n_list[i] <= n_list[i - 1])
      throw SizeError(std::string(what) + ": sizes must be strictly increasing");
    if (n_list[i] > budget) throw BudgetError(std::string(what) + ": size exceeds desk budget");
  }
}

int grid_for_degree(int degree) {
  int g = 1;
  while (g < 4 * (degree + 1)) g <<= 1;
  return g;
}

// Value at 0 of the interpolating polynomial through (x_i, y_i).
complex neville_at_zero(const std::vector<double>& x, std::vector<complex> y) {
  const std::size_t n = x.size();
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = 0; i + level < n; ++i)
      y[i] = (x[i + level] * y[i] - x[i] * y[i + 1]) / (x[i + level] - x[i]);
  return y[0];
}

}  // namespace

PiecewiseSymbol sign_symbol() {
  return PiecewiseSymbol::make({Piece{0.0, kPi, CoefficientSequence::constant(1.0)},
                                Piece{kPi, kTwoPi, CoefficientSequence::constant(-1.0)}});
}

double lip_log_exemplar(double theta) {
  const double d = std::abs(std::polar(1.0, theta) - 1.0);
  if (d == 0.0) return 0.0;
  return 1.0 / std::log(8.0 / d);
}

PiecewiseSymbol lip_log_exemplar_symbol(int degree, int samples) {
  if (degree < 0 || samples < 2 * degree + 1) throw SizeError("lip_log_exemplar_symbol: bad sizes");
  std::vector<complex> values(static_cast<std::size_t>(samples));
  for (int j = 0; j < samples; ++j)
    values[static_cast<std::size_t>(j)] = lip_log_exemplar(kTwoPi * j / samples);
  Eigen::FFT<double> fft;
  std::vector<complex> spectrum;
  fft.fwd(spectrum, values);
  std::vector<complex> c(static_cast<std::size_t>(2 * degree + 1));
  for (int k = -degree; k <= degree; ++k) {
    const int idx = k >= 0 ? k : samples + k;
    c[static_cast<std::size_t>(k + degree)] = spectrum[static_cast<std::size_t>(idx)] / static_cast<double>(samples);
  }
  return PiecewiseSymbol::trig_polynomial(CoefficientSequence(-degree, std::move(c)));
}

GrowthTable h1_growth_experiment(const PiecewiseSymbol& symbol, const std::vector<int>& n_list,
                                 double tail_tolerance) {
  check_increasing(n_list, 0, kMaxGrowthDegree, "h1_growth_experiment");
  GrowthTable table;
  for (int n : n_list) {
    const auto t0 = std::chrono::steady_clock::now();
    const CoefficientSequence f(0, std::vector<complex>(static_cast<std::size_t>(n + 1), 1.0));

    int degree = 8 * (n + 1);
    CoefficientSequence image = apply_toeplitz(symbol, f, degree);
    double norm = hardy_norm(image, 1.0, grid_for_degree(degree));
    for (;;) {
      if (2 * degree > kMaxOutDegree)
        throw BudgetError("h1_growth_experiment: output truncation did not settle");
      const int next = 2 * degree;
      CoefficientSequence next_image = apply_toeplitz(symbol, f, next);
      const double next_norm = hardy_norm(next_image, 1.0, grid_for_degree(next));
      const bool settled = std::abs(next_norm - norm) < tail_tolerance * std::abs(next_norm);
      degree = next;
      image = std::move(next_image);
      norm = next_norm;
      if (settled) break;
    }
    const double base = hardy_norm(f, 1.0, grid_for_degree(degree));
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    table.push_back({n, norm / base, degree, elapsed});
  }
  return table;
}

ProbeTable finite_section_probe(const PiecewiseSymbol& symbol, complex lambda,
                                const std::vector<int>& n_list) {
  check_increasing(n_list, 1, kMaxProbeSize, "finite_section_probe");
  ProbeTable table;
  if (n_list.empty()) return table;
  const int largest = n_list.back();
  const CoefficientSequence a = symbol.fourier_coefficients(-(largest - 1), largest - 1);
  for (int n : n_list) {
    Eigen::MatrixXcd m(n, n);
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j) m(j, k) = a[j - k] - (j == k ? lambda : complex{0.0, 0.0});
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(m);
    table.push_back({n, svd.singularValues().minCoeff()});
  }
  return table;
}

IndexConsistencyReport index_consistency(const PiecewiseSymbol& symbol, complex lambda) {
  const auto poly = symbol.global_polynomial();
  if (!poly) throw NotTrigPolynomialError("index_consistency: symbol is not a trigonometric polynomial");

  IndexConsistencyReport report;
  report.fredholm_index = fredholm_index(symbol, 2.0, lambda);

  const CoefficientSequence b = poly->shifted(lambda).trimmed();
  const int degree = b.k_max() - b.k_min();
  if (degree > 0) {
    // companion matrix of the monic polynomial z^{-k_min} b(z)
    const complex lead = b[b.k_max()];
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(degree, degree);
    for (int i = 1; i < degree; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < degree; ++i) companion(i, degree - 1) = -b[b.k_min() + i] / lead;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> eig(companion, false);
    for (int i = 0; i < degree; ++i)
      if (std::abs(eig.eigenvalues()[i]) < 1.0) ++report.roots_inside;
  }
  report.pole_order = std::max(0, -b.k_min());
  const int winding = report.roots_inside + b.k_min();
  report.analytic_index = -winding;
  report.match = report.analytic_index == report.fredholm_index;
  return report;
}

std::vector<double> lindelof_ladder() {
  std::vector<double> m;
  for (int j = 2; j <= 8; ++j) m.push_back(std::pow(10.0, 0.5 * j));
  return m;
}

LindelofReport lindelof_demo(const CoefficientSequence& analytic, double t,
                             const std::vector<double>& ladder) {
  if (!analytic.is_analytic()) throw NotAnalyticError("lindelof_demo: coefficients must have k_min >= 0");
  if (ladder.empty()) throw SizeError("lindelof_demo: empty approach ladder");
  LindelofReport report;
  std::vector<double> h;
  std::vector<complex> left, right;
  for (double m : ladder) {
    if (!(m > 1.0)) throw DomainError("lindelof_demo: ladder entries must exceed 1");
    const double step = 1.0 / m;
    const complex zl = std::polar(1.0 - step, t - step);
    const complex zr = std::polar(1.0 - step, t + step);
    LindelofRow row{m, analytic.evaluate_at(zl), analytic.evaluate_at(zr)};
    report.rows.push_back(row);
    h.push_back(step);
    left.push_back(row.left);
    right.push_back(row.right);
  }
  report.left_limit = neville_at_zero(h, left);
  report.right_limit = neville_at_zero(h, right);
  report.difference = std::abs(report.left_limit - report.right_limit);
  report.boundary_value = analytic.evaluate(t);
  return report;
}

}  // namespace pctoeplitz
