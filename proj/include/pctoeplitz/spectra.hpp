#pragma once

#include <optional>
#include <vector>

#include "pctoeplitz/hardy.hpp"
#include "pctoeplitz/symbol.hpp"

namespace pctoeplitz {

inline constexpr double kArcAngleTolerance = 1e-9;
inline constexpr double kCurveDistanceTolerance = 1e-8;

/// The p-circular arc joining a(t-0) to a(t+0): the points from which the
/// chord is seen at the angle 2*pi/p, arguments taken in [0, 2*pi).
struct ArcP {
  complex z_minus;
  complex z_plus;
  double p = 2.0;
};

/// Argument of z normalised to [0, 2*pi).
double arg_0_2pi(complex z);

/// True iff arg((z_minus - zeta) / (z_plus - zeta)) is within `tol` of 2*pi/p.
/// Throws EndpointError if zeta is within `tol` of an endpoint.
bool arc_membership(const ArcP& arc, complex zeta, double tol = kArcAngleTolerance);

/// Moebius parametrisation zeta(r), r in (0, inf), with
/// (z_minus - zeta) / (z_plus - zeta) = r e^{2 pi i / p}.
complex arc_point(const ArcP& arc, double r);

/// Arc parameters r_j = s_j / (1 - s_j), s_j = j / (m + 1), j = 1..m.
std::vector<double> arc_parameters(int m);

/// Samples z_minus, zeta(r_1), ..., zeta(r_m), z_plus (open curve).
/// Throws DegenerateError when the endpoints coincide.
SampledCurve arc_points(const ArcP& arc, int m);

/// Centre and radius of the circle carrying the arc; empty for p = 2,
/// where the arc is the open chord.
struct Circle {
  complex center;
  double radius = 0.0;
};
std::optional<Circle> arc_circle(const ArcP& arc);

/// Euclidean distance from zeta to the closed arc.
double arc_distance(const ArcP& arc, complex zeta);

enum class Provenance { RangePiece, JumpArc };

struct SpectrumSegment {
  SampledCurve curve;
  Provenance provenance = Provenance::RangePiece;
  std::size_t index = 0;     // piece index or jump index
  double jump_t = 0.0;       // jump location for JumpArc segments
  std::vector<double> parameters;  // theta per range sample; r per arc sample (0 and inf at ends)
};

struct SpectrumDescription {
  std::vector<SpectrumSegment> segments;
  double p = 2.0;
  int resolution = 0;

  /// All sample points, in segment order.
  std::vector<complex> points() const;
};

/// Range curves of every piece plus the p-arc filling every jump.
SpectrumDescription essential_spectrum(const PiecewiseSymbol& symbol, double p, int resolution);

/// Continuous symbols only: the range a(T). Throws HasJumpsError.
SpectrumDescription essential_spectrum_continuous(const PiecewiseSymbol& symbol,
                                                  int resolution = 1024);

bool is_in_essential_spectrum(const PiecewiseSymbol& symbol, double p, complex lambda,
                              double tol = kCurveDistanceTolerance);

/// Closed curve: each piece's range in increasing theta, with the p-arc
/// from a(t-0) to a(t+0) inserted at every jump t.
SampledCurve arc_completed_curve(const PiecewiseSymbol& symbol, double p, int resolution);

/// -wind(arc-completed curve, lambda). Throws InSpectrumError when lambda is
/// in the essential spectrum. The sampling is refined automatically before an
/// UnderResolvedError is propagated.
int fredholm_index(const PiecewiseSymbol& symbol, double p, complex lambda,
                   int resolution = 1024);

struct DouglasRung {
  double r = 0.0;
  std::vector<complex> points;
};

/// Sampled images of annuli {r <= |z| <= 1 - 1/grid} under the harmonic
/// extension, one rung per radius (innermost annulus last).
std::vector<DouglasRung> douglas_spectrum_estimate(const PiecewiseSymbol& symbol,
                                                   const std::vector<double>& radii, int grid,
                                                   int levels = 8);

/// Symmetric Hausdorff distance between two finite point sets.
double hausdorff_distance(const std::vector<complex>& a, const std::vector<complex>& b);

}  // namespace pctoeplitz
