#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "pctoeplitz/coefficients.hpp"

namespace pctoeplitz {

/// A boundary is a jump iff |a(t-0) - a(t+0)| exceeds this.
inline constexpr double kJumpTolerance = 1e-10;

/// Angles closer than this to a piece boundary are treated as the boundary.
inline constexpr double kAngleSnap = 1e-12;

/// Reduces an angle into [0, 2*pi).
double normalize_angle(double theta);

/// One arc of the circle carrying a trigonometric polynomial value function.
/// As input, start lies in [0, 2*pi) and end in (0, 2*pi]; an end smaller
/// than start wraps through 0. After validation `end` is stored unwrapped,
/// i.e. start < end <= start + 2*pi.
struct Piece {
  double start = 0.0;
  double end = kTwoPi;
  CoefficientSequence value;

  double length() const { return end - start; }
};

struct JumpPoint {
  double t = 0.0;
  complex left_limit;   // a(t-0)
  complex right_limit;  // a(t+0)
};

/// Piecewise continuous symbol on the unit circle. Immutable after
/// construction.
class PiecewiseSymbol {
 public:
  /// Validates a partition of the circle and classifies every boundary as a
  /// jump or removable. Throws EmptyError or OverlapError.
  static PiecewiseSymbol make(std::vector<Piece> pieces);

  /// Single-piece symbol a(theta) = sum_k c_k e^{ik theta}.
  static PiecewiseSymbol trig_polynomial(CoefficientSequence value);

  const std::vector<Piece>& pieces() const { return pieces_; }
  const std::vector<JumpPoint>& jumps() const { return jumps_; }
  bool has_jumps() const { return !jumps_.empty(); }

  /// Value of the owning piece; the right limit at a jump.
  complex evaluate(double t) const;

  /// (a(t-0), a(t+0)).
  std::pair<complex, complex> one_sided_limits(double t) const;

  /// Exact Fourier coefficients a_k for k in [k_min, k_max].
  CoefficientSequence fourier_coefficients(int k_min, int k_max) const;

  /// The common value function when every piece carries the same
  /// trigonometric polynomial (so the symbol is globally that polynomial).
  std::optional<CoefficientSequence> global_polynomial() const;

  /// Index of the piece owning angle t (right-continuous at boundaries).
  std::size_t piece_index(double t) const;

  /// Symbol conj(a).
  PiecewiseSymbol conjugate() const;
  /// Symbol a - lambda.
  PiecewiseSymbol shifted(complex lambda) const;
  /// Symbol alpha * a.
  PiecewiseSymbol scaled(complex alpha) const;

 private:
  explicit PiecewiseSymbol(std::vector<Piece> pieces);
  std::optional<std::size_t> boundary_at(double t) const;

  std::vector<Piece> pieces_;
  std::vector<JumpPoint> jumps_;
};

inline PiecewiseSymbol make_piecewise_symbol(std::vector<Piece> pieces) {
  return PiecewiseSymbol::make(std::move(pieces));
}

}  // namespace pctoeplitz
