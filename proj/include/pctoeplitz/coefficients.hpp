#pragma once

#include <complex>
#include <numbers>
#include <span>
#include <vector>

namespace pctoeplitz {

using complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Finitely supported, doubly indexed Fourier coefficients c_k for
/// k in [k_min, k_max]. Coefficients outside the range are zero.
///
/// The sequence doubles as a trigonometric polynomial
/// v(theta) = sum_k c_k e^{i k theta}.
class CoefficientSequence {
 public:
  /// The zero sequence supported on {0}.
  CoefficientSequence();
  /// Throws EmptyError if `coeffs` is empty.
  CoefficientSequence(int k_min, std::vector<complex> coeffs);

  static CoefficientSequence constant(complex c);
  static CoefficientSequence monomial(int k, complex c = 1.0);

  int k_min() const { return k_min_; }
  int k_max() const { return k_min_ + static_cast<int>(coeffs_.size()) - 1; }
  std::size_t size() const { return coeffs_.size(); }
  std::span<const complex> values() const { return coeffs_; }

  /// c_k, zero outside [k_min, k_max].
  complex operator[](int k) const;

  /// True when the index range starts at k >= 0.
  bool is_analytic() const { return k_min_ >= 0; }

  /// v(theta) = sum_k c_k e^{i k theta}.
  complex evaluate(double theta) const;

  /// sum_k c_k z^k at an arbitrary nonzero point (any z when analytic).
  complex evaluate_at(complex z) const;

  /// Range shrunk to the outermost nonzero coefficients. The zero sequence
  /// trims to {0}.
  CoefficientSequence trimmed() const;

  /// Same coefficients re-expressed over [k_min, k_max] (zero padded or cut).
  CoefficientSequence restricted(int k_min, int k_max) const;

  /// Coefficients of the complex conjugate function: d_k = conj(c_{-k}).
  CoefficientSequence conjugate() const;

  /// v - lambda (constant term shifted).
  CoefficientSequence shifted(complex lambda) const;

  CoefficientSequence scaled(complex alpha) const;

  /// True if every coefficient except c_0 is zero.
  bool is_constant() const;

  friend bool operator==(const CoefficientSequence&, const CoefficientSequence&) = default;

 private:
  int k_min_ = 0;
  std::vector<complex> coeffs_;
};

/// Trim-insensitive equality: same trigonometric polynomial.
bool same_polynomial(const CoefficientSequence& a, const CoefficientSequence& b);

}  // namespace pctoeplitz
