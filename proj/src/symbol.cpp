#include "pctoeplitz/symbol.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "pctoeplitz/errors.hpp"

namespace pctoeplitz {

namespace {

// Circular distance between two angles.
double angle_distance(double a, double b) {
  const double d = std::abs(normalize_angle(a) - normalize_angle(b));
  return std::min(d, kTwoPi - d);
}

// (1/2pi) * integral over [start, end] of e^{i j theta}.
complex arc_moment(int j, double start, double end) {
  const double length = end - start;
  if (j == 0) return {length / kTwoPi, 0.0};
  const double mid = 0.5 * (start + end);
  return std::polar(std::sin(0.5 * j * length) / (kPi * j), j * mid);
}

}  // namespace

double normalize_angle(double theta) {
  double r = std::fmod(theta, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

PiecewiseSymbol::PiecewiseSymbol(std::vector<Piece> pieces) : pieces_(std::move(pieces)) {
  const std::size_t n = pieces_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Piece& left = pieces_[(i + n - 1) % n];
    const Piece& right = pieces_[i];
    const double t = right.start;
    const complex lo = left.value.evaluate(t);
    const complex hi = right.value.evaluate(t);
    if (std::abs(lo - hi) > kJumpTolerance) jumps_.push_back({t, lo, hi});
  }
}

PiecewiseSymbol PiecewiseSymbol::make(std::vector<Piece> pieces) {
  if (pieces.empty()) throw EmptyError("a symbol needs at least one piece");
  for (auto& p : pieces) {
    if (!std::isfinite(p.start) || !std::isfinite(p.end))
      throw OverlapError("piece angles must be finite");
    const double s = normalize_angle(p.start);
    double e = normalize_angle(p.end);
    if (e == 0.0) e = kTwoPi;
    p.start = s;
    p.end = e > s + kAngleSnap ? e : e + kTwoPi;
  }
  std::sort(pieces.begin(), pieces.end(),
            [](const Piece& a, const Piece& b) { return a.start < b.start; });

  const std::size_t n = pieces.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double next_start = i + 1 < n ? pieces[i + 1].start : pieces[0].start + kTwoPi;
    const double mismatch = pieces[i].end - next_start;
    if (std::abs(mismatch) > kAngleSnap) {
      std::ostringstream msg;
      msg << "piece " << i << (mismatch > 0 ? " overlaps" : " leaves a gap before")
          << " the next piece (mismatch " << mismatch << " rad)";
      throw OverlapError(msg.str());
    }
    pieces[i].end = next_start;
  }
  return PiecewiseSymbol(std::move(pieces));
}

PiecewiseSymbol PiecewiseSymbol::trig_polynomial(CoefficientSequence value) {
  return make({Piece{0.0, kTwoPi, std::move(value)}});
}

std::optional<std::size_t> PiecewiseSymbol::boundary_at(double t) const {
  for (std::size_t i = 0; i < pieces_.size(); ++i)
    if (angle_distance(t, pieces_[i].start) < kAngleSnap) return i;
  return std::nullopt;
}

std::size_t PiecewiseSymbol::piece_index(double t) const {
  if (auto b = boundary_at(t)) return *b;
  const double u = normalize_angle(t);
  auto it = std::upper_bound(pieces_.begin(), pieces_.end(), u,
                             [](double v, const Piece& p) { return v < p.start; });
  if (it == pieces_.begin()) return pieces_.size() - 1;
  return static_cast<std::size_t>(it - pieces_.begin()) - 1;
}

complex PiecewiseSymbol::evaluate(double t) const {
  return pieces_[piece_index(t)].value.evaluate(t);
}

std::pair<complex, complex> PiecewiseSymbol::one_sided_limits(double t) const {
  if (auto b = boundary_at(t)) {
    const std::size_t n = pieces_.size();
    const Piece& right = pieces_[*b];
    const Piece& left = pieces_[(*b + n - 1) % n];
    return {left.value.evaluate(right.start), right.value.evaluate(right.start)};
  }
  const complex v = evaluate(t);
  return {v, v};
}

std::optional<CoefficientSequence> PiecewiseSymbol::global_polynomial() const {
  const CoefficientSequence first = pieces_.front().value.trimmed();
  for (const auto& p : pieces_)
    if (!(p.value.trimmed() == first)) return std::nullopt;
  return first;
}

CoefficientSequence PiecewiseSymbol::fourier_coefficients(int k_min, int k_max) const {
  if (k_max < k_min) throw SizeError("fourier_coefficients: k_max < k_min");
  if (auto poly = global_polynomial()) return poly->restricted(k_min, k_max);

  std::vector<complex> out(static_cast<std::size_t>(k_max - k_min + 1));
  for (const auto& piece : pieces_) {
    const auto& v = piece.value;
    for (int m = v.k_min(); m <= v.k_max(); ++m) {
      const complex c = v[m];
      if (c == complex{0.0, 0.0}) continue;
      for (int k = k_min; k <= k_max; ++k)
        out[static_cast<std::size_t>(k - k_min)] += c * arc_moment(m - k, piece.start, piece.end);
    }
  }
  return {k_min, std::move(out)};
}

PiecewiseSymbol PiecewiseSymbol::conjugate() const {
  auto pieces = pieces_;
  for (auto& p : pieces) p.value = p.value.conjugate();
  return make(std::move(pieces));
}

PiecewiseSymbol PiecewiseSymbol::shifted(complex lambda) const {
  auto pieces = pieces_;
  for (auto& p : pieces) p.value = p.value.shifted(lambda);
  return make(std::move(pieces));
}

PiecewiseSymbol PiecewiseSymbol::scaled(complex alpha) const {
  auto pieces = pieces_;
  for (auto& p : pieces) p.value = p.value.scaled(alpha);
  return make(std::move(pieces));
}

}  // namespace pctoeplitz
