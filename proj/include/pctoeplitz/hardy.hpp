#pragma once

#include <Eigen/Dense>
#include <vector>

#include "pctoeplitz/coefficients.hpp"
#include "pctoeplitz/symbol.hpp"

namespace pctoeplitz {

/// Riesz projection P: zeroes every coefficient with k < 0.
CoefficientSequence riesz_project(const CoefficientSequence& c);
/// Q = I - P: keeps the strictly negative indices only.
CoefficientSequence complementary_project(const CoefficientSequence& c);
/// Cauchy singular integral S = 2P - I: negates the k < 0 coefficients.
CoefficientSequence cauchy_singular(const CoefficientSequence& c);

/// Upper-left n x n block of the Toeplitz matrix, entry(j, k) = a_{j-k}.
struct ToeplitzSection {
  int n = 0;
  Eigen::MatrixXcd entries;
};

ToeplitzSection toeplitz_section(const PiecewiseSymbol& symbol, int n);

/// Coefficients k = 0..out_degree of P(a f) for analytic f.
CoefficientSequence apply_toeplitz(const PiecewiseSymbol& symbol, const CoefficientSequence& f,
                                   int out_degree);

/// Same as above with precomputed symbol coefficients covering
/// [-f.k_max(), out_degree - f.k_min()].
CoefficientSequence apply_toeplitz(const CoefficientSequence& symbol_coeffs,
                                   const CoefficientSequence& f, int out_degree);

/// Values of the trigonometric polynomial at theta_j = 2*pi*j/n, j < n.
/// Coefficients are folded modulo n, so the result is exact at the grid for
/// any degree.
std::vector<complex> evaluate_on_grid(const CoefficientSequence& c, int n);

/// ((1/2pi) int |f|^p)^{1/p} for an analytic polynomial f. p = 2 uses
/// Parseval; other p use the trapezoid rule on `grid_size` points, which must
/// be at least 4 * (degree + 1).
double hardy_norm(const CoefficientSequence& f, double p, int grid_size);

/// Smallest k with r^k < 1e-14.
int poisson_cutoff(double r);

/// Harmonic extension sum_{|k| <= k_cut} a_k r^{|k|} e^{ik theta}.
/// Throws TruncationError unless r^{k_cut} < 1e-14.
complex poisson_extension(const PiecewiseSymbol& symbol, double r, double theta, int k_cut);

/// Harmonic extension on the circle of radius r at theta_j = 2*pi*j/n,
/// from coefficients a_k, |k| <= k_cut.
std::vector<complex> poisson_extension_on_grid(const CoefficientSequence& coeffs, double r, int n);

struct SampledCurve {
  std::vector<complex> points;
  bool closed = false;
};

inline constexpr double kWindingDistanceTolerance = 1e-8;

/// Winding number of a closed sampled curve about w. Throws TooCloseError
/// when a sample lies within `tol` of w, UnderResolvedError when a single
/// step turns by pi or more as seen from w.
int winding_number(const SampledCurve& curve, complex w, double tol = kWindingDistanceTolerance);

}  // namespace pctoeplitz
