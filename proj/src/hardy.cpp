#include "pctoeplitz/hardy.hpp"

#include <cmath>
#include <numeric>
#include <unsupported/Eigen/FFT>

#include "pctoeplitz/errors.hpp"

namespace pctoeplitz {

namespace {

constexpr double kPoissonTail = 1e-14;
constexpr std::size_t kDirectConvolutionBudget = std::size_t{1} << 20;

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

template <typename Keep>
CoefficientSequence filter_indices(const CoefficientSequence& c, Keep keep) {
  std::vector<complex> out(c.values().begin(), c.values().end());
  for (int k = c.k_min(); k <= c.k_max(); ++k)
    if (!keep(k)) out[static_cast<std::size_t>(k - c.k_min())] = {0.0, 0.0};
  return {c.k_min(), std::move(out)};
}

std::vector<complex> convolve(std::span<const complex> a, std::span<const complex> b) {
  const std::size_t len = a.size() + b.size() - 1;
  const std::size_t n = next_pow2(len);
  std::vector<complex> fa(n), fb(n);
  std::copy(a.begin(), a.end(), fa.begin());
  std::copy(b.begin(), b.end(), fb.begin());
  Eigen::FFT<double> fft;
  std::vector<complex> ta, tb;
  fft.fwd(ta, fa);
  fft.fwd(tb, fb);
  for (std::size_t i = 0; i < n; ++i) ta[i] *= tb[i];
  std::vector<complex> out;
  fft.inv(out, ta);
  out.resize(len);
  return out;
}

}  // namespace

CoefficientSequence riesz_project(const CoefficientSequence& c) {
  return filter_indices(c, [](int k) { return k >= 0; });
}

CoefficientSequence complementary_project(const CoefficientSequence& c) {
  return filter_indices(c, [](int k) { return k < 0; });
}

CoefficientSequence cauchy_singular(const CoefficientSequence& c) {
  std::vector<complex> out(c.values().begin(), c.values().end());
  for (int k = c.k_min(); k < 0 && k <= c.k_max(); ++k)
    out[static_cast<std::size_t>(k - c.k_min())] *= -1.0;
  return {c.k_min(), std::move(out)};
}

ToeplitzSection toeplitz_section(const PiecewiseSymbol& symbol, int n) {
  if (n < 1) throw SizeError("toeplitz_section: n must be >= 1");
  const CoefficientSequence a = symbol.fourier_coefficients(-(n - 1), n - 1);
  ToeplitzSection section{n, Eigen::MatrixXcd(n, n)};
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j) section.entries(j, k) = a[j - k];
  return section;
}

CoefficientSequence apply_toeplitz(const PiecewiseSymbol& symbol, const CoefficientSequence& f,
                                   int out_degree) {
  if (!f.is_analytic()) throw NotAnalyticError("apply_toeplitz: f has negative indices");
  if (out_degree < 0) throw SizeError("apply_toeplitz: out_degree must be >= 0");
  return apply_toeplitz(symbol.fourier_coefficients(-f.k_max(), out_degree - f.k_min()), f,
                        out_degree);
}

CoefficientSequence apply_toeplitz(const CoefficientSequence& a, const CoefficientSequence& f,
                                   int out_degree) {
  if (!f.is_analytic()) throw NotAnalyticError("apply_toeplitz: f has negative indices");
  if (out_degree < 0) throw SizeError("apply_toeplitz: out_degree must be >= 0");
  const int j_lo = -f.k_max();
  const int j_hi = out_degree - f.k_min();
  std::vector<complex> out(static_cast<std::size_t>(out_degree + 1));

  const std::size_t work = f.size() * out.size();
  if (work <= kDirectConvolutionBudget) {
    for (int k = 0; k <= out_degree; ++k) {
      complex acc{0.0, 0.0};
      for (int m = f.k_min(); m <= f.k_max(); ++m) acc += a[k - m] * f[m];
      out[static_cast<std::size_t>(k)] = acc;
    }
    return {0, std::move(out)};
  }

  const CoefficientSequence window = a.restricted(j_lo, j_hi);
  const std::vector<complex> full = convolve(window.values(), f.values());
  // full[q] holds index j_lo + f.k_min() + q
  const int offset = j_lo + f.k_min();
  for (int k = 0; k <= out_degree; ++k) out[static_cast<std::size_t>(k)] = full[static_cast<std::size_t>(k - offset)];
  return {0, std::move(out)};
}

std::vector<complex> evaluate_on_grid(const CoefficientSequence& c, int n) {
  if (n < 1) throw SizeError("evaluate_on_grid: n must be >= 1");
  std::vector<complex> folded(static_cast<std::size_t>(n));
  for (int k = c.k_min(); k <= c.k_max(); ++k) {
    int idx = k % n;
    if (idx < 0) idx += n;
    folded[static_cast<std::size_t>(idx)] += c[k];
  }
  Eigen::FFT<double> fft;
  fft.SetFlag(Eigen::FFT<double>::Unscaled);
  std::vector<complex> values;
  fft.inv(values, folded);
  return values;
}

double hardy_norm(const CoefficientSequence& f, double p, int grid_size) {
  if (!f.is_analytic()) throw NotAnalyticError("hardy_norm: f has negative indices");
  if (!(p >= 1.0)) throw DomainError("hardy_norm: p must be >= 1");
  if (static_cast<long long>(grid_size) < 4LL * (f.k_max() + 1))
    throw GridTooCoarseError("hardy_norm: grid_size must be >= 4 * (degree + 1)");
  if (p == 2.0) {
    double s = 0.0;
    for (complex c : f.values()) s += std::norm(c);
    return std::sqrt(s);
  }
  const std::vector<complex> values = evaluate_on_grid(f, grid_size);
  double s = 0.0;
  if (p == 1.0) {
    for (complex v : values) s += std::abs(v);
    return s / grid_size;
  }
  for (complex v : values) s += std::pow(std::abs(v), p);
  return std::pow(s / grid_size, 1.0 / p);
}

int poisson_cutoff(double r) {
  if (!(r >= 0.0 && r < 1.0)) throw DomainError("poisson_cutoff: r must lie in [0, 1)");
  if (r == 0.0) return 0;
  int k = static_cast<int>(std::ceil(std::log(kPoissonTail) / std::log(r)));
  while (std::pow(r, k) >= kPoissonTail) ++k;
  return k;
}

complex poisson_extension(const PiecewiseSymbol& symbol, double r, double theta, int k_cut) {
  if (!(r >= 0.0 && r < 1.0)) throw DomainError("poisson_extension: r must lie in [0, 1)");
  if (k_cut < 0) throw TruncationError("poisson_extension: k_cut must be >= 0");
  if (r > 0.0 && !(std::pow(r, k_cut) < kPoissonTail))
    throw TruncationError("poisson_extension: r^k_cut must be below 1e-14");
  const CoefficientSequence a = symbol.fourier_coefficients(-k_cut, k_cut);
  complex acc = a[0];
  double weight = 1.0;
  for (int k = 1; k <= k_cut; ++k) {
    weight *= r;
    acc += weight * (a[k] * std::polar(1.0, k * theta) + a[-k] * std::polar(1.0, -k * theta));
  }
  return acc;
}

std::vector<complex> poisson_extension_on_grid(const CoefficientSequence& coeffs, double r, int n) {
  if (!(r >= 0.0 && r < 1.0)) throw DomainError("poisson_extension_on_grid: r must lie in [0, 1)");
  std::vector<complex> damped(coeffs.values().begin(), coeffs.values().end());
  for (int k = coeffs.k_min(); k <= coeffs.k_max(); ++k)
    damped[static_cast<std::size_t>(k - coeffs.k_min())] *= std::pow(r, std::abs(k));
  return evaluate_on_grid(CoefficientSequence(coeffs.k_min(), std::move(damped)), n);
}

int winding_number(const SampledCurve& curve, complex w, double tol) {
  if (!curve.closed) throw DomainError("winding_number: curve must be closed");
  if (curve.points.empty()) throw SizeError("winding_number: empty curve");
  for (complex z : curve.points)
    if (std::abs(z - w) <= tol) throw TooCloseError("winding_number: point lies on the curve");

  const std::size_t n = curve.points.size();
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const complex from = curve.points[i] - w;
    const complex to = curve.points[(i + 1) % n] - w;
    const double step = std::arg(to / from);
    if (std::abs(step) >= kPi)
      throw UnderResolvedError("winding_number: a sample step turns by pi or more; refine sampling");
    total += step;
  }
  return static_cast<int>(std::lround(total / kTwoPi));
}

}  // namespace pctoeplitz
