#include "pctoeplitz/spectra.hpp"

#include <algorithm>
#include <boost/math/tools/minima.hpp>
#include <cmath>
#include <limits>

#include "pctoeplitz/errors.hpp"

namespace pctoeplitz {

namespace {

constexpr int kMaxIndexResolution = 1 << 16;

void check_p(double p) {
  if (!(p > 1.0) || !std::isfinite(p)) throw DomainError("p must lie in (1, inf)");
}

// e^{2 pi i / p}, exact for p = 2.
complex arc_rotation(double p) {
  if (p == 2.0) return {-1.0, 0.0};
  return std::polar(1.0, kTwoPi / p);
}

double wrapped_angle_gap(double a, double b) {
  const double d = std::abs(a - b);
  return std::min(d, kTwoPi - d);
}

double segment_distance(complex a, complex b, complex z) {
  const complex ab = b - a;
  const double len2 = std::norm(ab);
  if (len2 == 0.0) return std::abs(z - a);
  const double s = std::clamp(((z - a) * std::conj(ab)).real() / len2, 0.0, 1.0);
  return std::abs(z - (a + s * ab));
}

complex circumcenter(complex a, complex b, complex c) {
  const complex ba = b - a, ca = c - a;
  const double d = 2.0 * (ba.real() * ca.imag() - ba.imag() * ca.real());
  const double nb = std::norm(ba), nc = std::norm(ca);
  return a + complex{(ca.imag() * nb - ba.imag() * nc) / d, (ba.real() * nc - ca.real() * nb) / d};
}

// Minimal |v(theta) - lambda| over a piece's closed arc.
double piece_distance(const Piece& piece, complex lambda) {
  const CoefficientSequence& v = piece.value;
  if (v.is_constant()) return std::abs(v[0] - lambda);
  const int span = v.k_max() - v.k_min() + 1;
  const int m = std::max(64, 32 * span);
  const double h = piece.length() / m;
  std::vector<double> dist(static_cast<std::size_t>(m + 1));
  for (int j = 0; j <= m; ++j)
    dist[static_cast<std::size_t>(j)] = std::abs(v.evaluate(piece.start + j * h) - lambda);

  double best = *std::min_element(dist.begin(), dist.end());
  auto objective = [&](double theta) { return std::abs(v.evaluate(theta) - lambda); };
  for (int j = 0; j <= m; ++j) {
    const double d = dist[static_cast<std::size_t>(j)];
    const bool local = (j == 0 || d <= dist[static_cast<std::size_t>(j - 1)]) &&
                       (j == m || d <= dist[static_cast<std::size_t>(j + 1)]);
    if (!local) continue;
    const double lo = piece.start + std::max(0, j - 1) * h;
    const double hi = piece.start + std::min(m, j + 1) * h;
    const auto [x, fx] = boost::math::tools::brent_find_minima(objective, lo, hi, 52);
    best = std::min(best, fx);
  }
  return best;
}

std::vector<complex> sample_piece(const Piece& piece, int resolution, std::vector<double>* thetas) {
  std::vector<complex> out;
  const int count = piece.value.is_constant() ? 1 : resolution;
  out.reserve(static_cast<std::size_t>(count));
  for (int j = 0; j < count; ++j) {
    const double theta = piece.start + piece.length() * j / resolution;
    out.push_back(piece.value.evaluate(theta));
    if (thetas) thetas->push_back(theta);
  }
  return out;
}

}  // namespace

double arg_0_2pi(complex z) {
  double a = std::arg(z);
  if (a < 0.0) a += kTwoPi;
  if (a >= kTwoPi) a = 0.0;
  return a;
}

bool arc_membership(const ArcP& arc, complex zeta, double tol) {
  check_p(arc.p);
  if (std::abs(zeta - arc.z_minus) <= tol || std::abs(zeta - arc.z_plus) <= tol)
    throw EndpointError("arc_membership: zeta coincides with an arc endpoint");
  const double angle = arg_0_2pi((arc.z_minus - zeta) / (arc.z_plus - zeta));
  return wrapped_angle_gap(angle, kTwoPi / arc.p) <= tol;
}

complex arc_point(const ArcP& arc, double r) {
  const complex rot = r * arc_rotation(arc.p);
  return (arc.z_minus - rot * arc.z_plus) / (1.0 - rot);
}

std::vector<double> arc_parameters(int m) {
  std::vector<double> r(static_cast<std::size_t>(m));
  for (int j = 1; j <= m; ++j) {
    const double s = static_cast<double>(j) / (m + 1);
    r[static_cast<std::size_t>(j - 1)] = s / (1.0 - s);
  }
  return r;
}

SampledCurve arc_points(const ArcP& arc, int m) {
  check_p(arc.p);
  if (m < 1) throw SizeError("arc_points: m must be >= 1");
  if (std::abs(arc.z_minus - arc.z_plus) <= kJumpTolerance)
    throw DegenerateError("arc_points: endpoints coincide");
  SampledCurve curve{{}, false};
  curve.points.reserve(static_cast<std::size_t>(m + 2));
  curve.points.push_back(arc.z_minus);
  for (double r : arc_parameters(m)) curve.points.push_back(arc_point(arc, r));
  curve.points.push_back(arc.z_plus);
  return curve;
}

std::optional<Circle> arc_circle(const ArcP& arc) {
  check_p(arc.p);
  if (arc.p == 2.0) return std::nullopt;
  const complex center = circumcenter(arc.z_minus, arc.z_plus, arc_point(arc, 1.0));
  return Circle{center, std::abs(arc.z_minus - center)};
}

double arc_distance(const ArcP& arc, complex zeta) {
  const auto circle = arc_circle(arc);
  if (!circle) return segment_distance(arc.z_minus, arc.z_plus, zeta);
  const double to_ends = std::min(std::abs(zeta - arc.z_minus), std::abs(zeta - arc.z_plus));
  const complex offset = zeta - circle->center;
  const double rho = std::abs(offset);
  if (rho == 0.0) return std::min(circle->radius, to_ends);
  const complex foot = circle->center + circle->radius * offset / rho;
  if (std::abs(foot - arc.z_minus) == 0.0 || std::abs(foot - arc.z_plus) == 0.0) return to_ends;
  // The chord splits the circle; on the arc the angle is 2pi/p, on the
  // complementary arc it differs by pi.
  const double angle = arg_0_2pi((arc.z_minus - foot) / (arc.z_plus - foot));
  if (wrapped_angle_gap(angle, kTwoPi / arc.p) < kPi / 2) return std::abs(rho - circle->radius);
  return to_ends;
}

std::vector<complex> SpectrumDescription::points() const {
  std::vector<complex> out;
  for (const auto& s : segments) out.insert(out.end(), s.curve.points.begin(), s.curve.points.end());
  return out;
}

SpectrumDescription essential_spectrum(const PiecewiseSymbol& symbol, double p, int resolution) {
  check_p(p);
  if (resolution < 16) throw SizeError("essential_spectrum: resolution must be >= 16");
  SpectrumDescription out;
  out.p = p;
  out.resolution = resolution;
  const bool closed = symbol.pieces().size() == 1;
  for (std::size_t i = 0; i < symbol.pieces().size(); ++i) {
    SpectrumSegment seg;
    seg.provenance = Provenance::RangePiece;
    seg.index = i;
    seg.curve.points = sample_piece(symbol.pieces()[i], resolution, &seg.parameters);
    seg.curve.closed = closed && seg.curve.points.size() > 1;
    out.segments.push_back(std::move(seg));
  }
  for (std::size_t j = 0; j < symbol.jumps().size(); ++j) {
    const JumpPoint& jump = symbol.jumps()[j];
    SpectrumSegment seg;
    seg.provenance = Provenance::JumpArc;
    seg.index = j;
    seg.jump_t = jump.t;
    seg.curve = arc_points({jump.left_limit, jump.right_limit, p}, resolution);
    seg.parameters.push_back(0.0);
    for (double r : arc_parameters(resolution)) seg.parameters.push_back(r);
    seg.parameters.push_back(std::numeric_limits<double>::infinity());
    out.segments.push_back(std::move(seg));
  }
  return out;
}

SpectrumDescription essential_spectrum_continuous(const PiecewiseSymbol& symbol, int resolution) {
  if (symbol.has_jumps()) throw HasJumpsError("essential_spectrum_continuous: symbol has jumps");
  return essential_spectrum(symbol, 2.0, resolution);
}

bool is_in_essential_spectrum(const PiecewiseSymbol& symbol, double p, complex lambda, double tol) {
  check_p(p);
  for (const auto& jump : symbol.jumps()) {
    if (std::abs(jump.left_limit - lambda) <= tol || std::abs(jump.right_limit - lambda) <= tol)
      return true;
  }
  for (const auto& piece : symbol.pieces())
    if (piece_distance(piece, lambda) <= tol) return true;
  for (const auto& jump : symbol.jumps())
    if (arc_distance({jump.left_limit, jump.right_limit, p}, lambda) <= tol) return true;
  return false;
}

SampledCurve arc_completed_curve(const PiecewiseSymbol& symbol, double p, int resolution) {
  check_p(p);
  if (resolution < 1) throw SizeError("arc_completed_curve: resolution must be >= 1");
  SampledCurve curve{{}, true};
  const auto& pieces = symbol.pieces();
  const auto& jumps = symbol.jumps();
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const Piece& piece = pieces[i];
    for (int j = 0; j < resolution; ++j)
      curve.points.push_back(piece.value.evaluate(piece.start + piece.length() * j / resolution));
    const double boundary = normalize_angle(piece.end);
    auto jump = std::find_if(jumps.begin(), jumps.end(), [&](const JumpPoint& jp) {
      return wrapped_angle_gap(jp.t, boundary) < kAngleSnap;
    });
    if (jump == jumps.end()) continue;
    const SampledCurve arc = arc_points({jump->left_limit, jump->right_limit, p}, resolution);
    curve.points.insert(curve.points.end(), arc.points.begin(), arc.points.end());
  }
  return curve;
}

int fredholm_index(const PiecewiseSymbol& symbol, double p, complex lambda, int resolution) {
  if (is_in_essential_spectrum(symbol, p, lambda))
    throw InSpectrumError("lambda in essential spectrum");
  for (int res = std::max(resolution, 1);; res *= 2) {
    try {
      return -winding_number(arc_completed_curve(symbol, p, res), lambda);
    } catch (const UnderResolvedError&) {
      if (res >= kMaxIndexResolution) throw;
    }
  }
}

std::vector<DouglasRung> douglas_spectrum_estimate(const PiecewiseSymbol& symbol,
                                                   const std::vector<double>& radii, int grid,
                                                   int levels) {
  if (radii.empty()) throw SizeError("douglas_spectrum_estimate: radii must be nonempty");
  if (grid < 16) throw SizeError("douglas_spectrum_estimate: grid must be >= 16");
  if (levels < 1) throw SizeError("douglas_spectrum_estimate: levels must be >= 1");
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (!(radii[i] > 0.0 && radii[i] < 1.0))
      throw DomainError("douglas_spectrum_estimate: radii must lie in (0, 1)");
    if (i > 0 && !(radii[i] > radii[i - 1]))
      throw DomainError("douglas_spectrum_estimate: radii must be increasing");
  }
  const double outer = std::max(1.0 - 1.0 / grid, radii.back());
  const int k_cut = poisson_cutoff(outer);
  const CoefficientSequence coeffs = symbol.fourier_coefficients(-k_cut, k_cut);

  std::vector<DouglasRung> rungs;
  for (double r : radii) {
    DouglasRung rung{r, {}};
    const int count = outer > r ? levels : 1;
    for (int l = 0; l < count; ++l) {
      const double rho = count == 1 ? r : r + (outer - r) * l / (count - 1);
      const auto values = poisson_extension_on_grid(coeffs, rho, grid);
      rung.points.insert(rung.points.end(), values.begin(), values.end());
    }
    rungs.push_back(std::move(rung));
  }
  return rungs;
}

double hausdorff_distance(const std::vector<complex>& a, const std::vector<complex>& b) {
  if (a.empty() || b.empty()) throw SizeError("hausdorff_distance: empty point set");
  auto directed = [](const std::vector<complex>& from, const std::vector<complex>& to) {
    double worst = 0.0;
    for (complex x : from) {
      double best = std::numeric_limits<double>::infinity();
      for (complex y : to) best = std::min(best, std::norm(x - y));
      worst = std::max(worst, best);
    }
    return std::sqrt(worst);
  };
  return std::max(directed(a, b), directed(b, a));
}

}  // namespace pctoeplitz
