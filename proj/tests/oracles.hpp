// Independent reference computations used only by the tests. Nothing here
// calls into the code path it is used to check.
#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <vector>

namespace oracle {

using complex = std::complex<double>;
inline constexpr double kPi = std::numbers::pi;

// Midpoint rule for (1/2pi) int a(theta) e^{-ik theta} on m cells.
inline complex quadrature_coefficient(const std::function<complex(double)>& a, int k, int m) {
  complex acc{0.0, 0.0};
  for (int j = 0; j < m; ++j) {
    const double theta = 2.0 * kPi * (j + 0.5) / m;
    acc += a(theta) * std::polar(1.0, -k * theta);
  }
  return acc / static_cast<double>(m);
}

// Closed-form coefficients of the sign symbol: 2/(i pi k) for odd k.
inline complex sign_coefficient(int k) {
  if (k % 2 == 0) return {0.0, 0.0};
  return 2.0 / (complex{0.0, 1.0} * kPi * static_cast<double>(k));
}

// (T_a f)_k = sum_m a_{k-m} f_m for k = 0..out, f given from index 0.
inline std::vector<complex> dense_toeplitz_apply(const std::function<complex(int)>& a,
                                                 const std::vector<complex>& f, int out) {
  std::vector<complex> g(static_cast<std::size_t>(out + 1));
  for (int k = 0; k <= out; ++k)
    for (int m = 0; m < static_cast<int>(f.size()); ++m) g[k] += a(k - m) * f[m];
  return g;
}

// Trigonometric polynomial sum_{k >= 0} c_k e^{ik theta}, summed directly.
inline complex direct_eval(const std::vector<complex>& c, double theta) {
  complex acc{0.0, 0.0};
  for (std::size_t k = 0; k < c.size(); ++k) acc += c[k] * std::polar(1.0, static_cast<double>(k) * theta);
  return acc;
}

// Midpoint-rule L^1 mean of |f| with direct (non-FFT) evaluation.
inline double l1_mean(const std::vector<complex>& c, int m) {
  double acc = 0.0;
  for (int j = 0; j < m; ++j) acc += std::abs(direct_eval(c, 2.0 * kPi * (j + 0.5) / m));
  return acc / m;
}

// Poisson integral (1/2pi) int P_r(theta - phi) a(phi) dphi by the midpoint rule.
inline complex poisson_quadrature(const std::function<complex(double)>& a, double r, double theta, int m) {
  complex acc{0.0, 0.0};
  for (int j = 0; j < m; ++j) {
    const double phi = 2.0 * kPi * (j + 0.5) / m;
    const double kernel = (1.0 - r * r) / (1.0 - 2.0 * r * std::cos(theta - phi) + r * r);
    acc += kernel * a(phi);
  }
  return acc / static_cast<double>(m);
}

inline double mean_osc(const std::vector<complex>& v, int start, int len) {
  const int n = static_cast<int>(v.size());
  complex mean{0.0, 0.0};
  for (int j = 0; j < len; ++j) mean += v[(start + j) % n];
  mean /= static_cast<double>(len);
  double dev = 0.0;
  for (int j = 0; j < len; ++j) dev += std::abs(v[(start + j) % n] - mean);
  return dev / len;
}

// Supremum over every discrete arc (all starts, all lengths 1..n).
struct AllIntervals {
  double bmo = 0.0;
  double bmo_log = 0.0;
};

inline AllIntervals all_intervals(const std::vector<complex>& v) {
  const int n = static_cast<int>(v.size());
  AllIntervals out;
  for (int len = 1; len <= n; ++len)
    for (int s = 0; s < (len == n ? 1 : n); ++s) {
      const double mo = mean_osc(v, s, len);
      const double arc = 2.0 * kPi * len / n;
      out.bmo = std::max(out.bmo, mo);
      out.bmo_log = std::max(out.bmo_log, std::log(4.0 * kPi / arc) * mo);
    }
  return out;
}

inline double all_intervals_vmo(const std::vector<complex>& v, double delta) {
  const int n = static_cast<int>(v.size());
  double out = 0.0;
  for (int len = 1; len <= n; ++len) {
    if (!(2.0 * kPi * len / n < delta)) continue;
    for (int s = 0; s < n; ++s) out = std::max(out, mean_osc(v, s, len));
  }
  return out;
}

inline double all_pairs_lip_log(const std::vector<complex>& v) {
  const int n = static_cast<int>(v.size());
  double out = 0.0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      const double d = std::abs(std::polar(1.0, 2.0 * kPi * a / n) - std::polar(1.0, 2.0 * kPi * b / n));
      out = std::max(out, std::log(4.0 / d) * std::abs(v[a] - v[b]));
    }
  return out;
}

// Smallest singular value from the eigenvalues of [[0, M], [M^*, 0]].
inline double sigma_min_dilation(const Eigen::MatrixXcd& m) {
  const Eigen::Index n = m.rows();
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
  h.topRightCorner(n, n) = m;
  h.bottomLeftCorner(n, n) = m.adjoint();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(h, Eigen::EigenvaluesOnly);
  return eig.eigenvalues().cwiseAbs().minCoeff();
}

// Winding number by summing the continuous change of the angle with a
// fine linear interpolation of each step (no principal-branch shortcut).
inline int winding_by_angle_tracking(const std::vector<complex>& pts, complex w, int substeps = 64) {
  double total = 0.0;
  const std::size_t n = pts.size();
  double prev = std::arg(pts[0] - w);
  for (std::size_t i = 0; i < n; ++i) {
    const complex a = pts[i], b = pts[(i + 1) % n];
    for (int s = 1; s <= substeps; ++s) {
      const double cur = std::arg(a + (b - a) * (static_cast<double>(s) / substeps) - w);
      double d = cur - prev;
      while (d > kPi) d -= 2.0 * kPi;
      while (d < -kPi) d += 2.0 * kPi;
      total += d;
      prev = cur;
    }
  }
  return static_cast<int>(std::lround(total / (2.0 * kPi)));
}

// Exact Blaschke factor (z - a) / (1 - conj(a) z).
inline complex blaschke(complex a, complex z) { return (z - a) / (1.0 - std::conj(a) * z); }

}  // namespace oracle
