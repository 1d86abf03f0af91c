#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pctoeplitz/coefficients.hpp"
#include "pctoeplitz/symbol.hpp"

namespace pctoeplitz {

/// Samples f(theta_j), theta_j = 2*pi*j/n, n a power of two >= 8.
class GridFunction {
 public:
  explicit GridFunction(std::vector<complex> values);

  static GridFunction sample(const std::function<complex(double)>& f, int n);
  static GridFunction from_symbol(const PiecewiseSymbol& symbol, int n);
  /// Trigonometric polynomial evaluated on the grid (coefficients folded mod n).
  static GridFunction from_coefficients(const CoefficientSequence& c, int n);
  /// Q(a): the anti-analytic part of the symbol synthesised from its
  /// coefficients a_k, -n/2 <= k <= -1.
  static GridFunction complementary_part(const PiecewiseSymbol& symbol, int n);

  int n() const { return static_cast<int>(values_.size()); }
  const std::vector<complex>& values() const { return values_; }
  complex operator[](int j) const;  // wraps around the circle

  GridFunction scaled(complex alpha) const;
  GridFunction affine(complex alpha, complex beta) const;

 private:
  std::vector<complex> values_;
};

/// Arc length of an interval of `length` samples on an n-point grid.
double interval_measure(int length, int n);

/// log(4*pi / |I|).
double log_weight(int length, int n);

/// Discrete (1/|I|) int_I |f - f_I| over samples start .. start+length-1
/// (indices wrap). Throws LengthError unless 1 <= length <= n.
double mean_oscillation(const GridFunction& f, int start, int length);

/// Intervals of the dyadic family: lengths 2, 4, ..., n with starts at every
/// multiple of half the length (the full circle once).
struct DyadicInterval {
  int start;
  int length;
};
std::vector<DyadicInterval> dyadic_intervals(int n);

double bmo_seminorm(const GridFunction& f);
double bmo_log_seminorm(const GridFunction& f);

/// (sup_{|I| < delta} MO, sup_{|I| < delta} log(4pi/|I|) MO) over the
/// dyadic family. Throws DeltaError unless 0 < delta <= 2*pi.
std::pair<double, double> vmo_defect(const GridFunction& f, double delta);

/// sup over sample pairs of log(4/|w - z|) |f(w) - f(z)| with chordal
/// distance; grids finer than 4096 points are subsampled.
double lip_log_seminorm(const GridFunction& f);

struct EmbeddingReport {
  double worst_ratio = 0.0;  // max over I of MO(I) log(4pi/|I|) / ||f||_BMO_log
  double bmo_log = 0.0;
  std::size_t intervals = 0;
};

/// Checks MO(I) <= ||f||_BMO_log / log(4pi/|I|) on every dyadic interval.
EmbeddingReport embedding_check(const GridFunction& f);

enum class OscillationHint { Stable, Diverging };

struct OscillationReport {
  std::vector<int> resolutions;
  std::vector<double> bmo;
  std::vector<double> bmo_log;
  std::vector<double> vmo_defect;      // unweighted, at `delta`
  std::vector<double> vmo_log_defect;  // log-weighted, at `delta`
  double delta = 0.0;
  OscillationHint hint = OscillationHint::Stable;
};

/// Seminorm ladder of Q(a) over the given resolutions. The hint is Stable
/// when the BMO_log estimate moves by less than 1% over the last doubling.
OscillationReport oscillation_ladder(const PiecewiseSymbol& symbol, const std::vector<int>& resolutions,
                                     double delta);

enum class VerdictKind { Bounded, Unbounded, Unknown };

struct H1Verdict {
  VerdictKind kind = VerdictKind::Unknown;
  std::string certificate;
  std::optional<OscillationReport> report;  // Unknown only
};

std::string to_string(VerdictKind kind);
std::string to_string(OscillationHint hint);

/// Boundedness of T_a on H^1: Unbounded for any jump, Bounded for a global
/// trigonometric polynomial, otherwise Unknown with a Q(a) oscillation ladder.
H1Verdict h1_boundedness_verdict(const PiecewiseSymbol& symbol);

}  // namespace pctoeplitz
