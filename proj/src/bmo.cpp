#include "pctoeplitz/bmo.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "pctoeplitz/errors.hpp"
#include "pctoeplitz/hardy.hpp"

namespace pctoeplitz {

namespace {

constexpr int kLipLogMaxPoints = 4096;

bool is_pow2(int n) { return n > 0 && (n & (n - 1)) == 0; }

template <typename Visit>
void for_each_dyadic(int n, Visit visit) {
  for (int length = 2; length <= n; length *= 2) {
    if (length == n) {
      visit(0, length);
      break;
    }
    for (int start = 0; start < n; start += length / 2) visit(start, length);
  }
}

}  // namespace

GridFunction::GridFunction(std::vector<complex> values) : values_(std::move(values)) {
  const int n = static_cast<int>(values_.size());
  if (n < 8 || !is_pow2(n)) throw SizeError("GridFunction: n must be a power of two >= 8");
}

GridFunction GridFunction::sample(const std::function<complex(double)>& f, int n) {
  std::vector<complex> v(static_cast<std::size_t>(std::max(n, 0)));
  for (int j = 0; j < n; ++j) v[static_cast<std::size_t>(j)] = f(kTwoPi * j / n);
  return GridFunction(std::move(v));
}

GridFunction GridFunction::from_symbol(const PiecewiseSymbol& symbol, int n) {
  return sample([&](double t) { return symbol.evaluate(t); }, n);
}

GridFunction GridFunction::from_coefficients(const CoefficientSequence& c, int n) {
  return GridFunction(evaluate_on_grid(c, n));
}

GridFunction GridFunction::complementary_part(const PiecewiseSymbol& symbol, int n) {
  if (n < 8 || !is_pow2(n)) throw SizeError("GridFunction: n must be a power of two >= 8");
  return from_coefficients(symbol.fourier_coefficients(-n / 2, -1), n);
}

complex GridFunction::operator[](int j) const {
  const int n = this->n();
  int idx = j % n;
  if (idx < 0) idx += n;
  return values_[static_cast<std::size_t>(idx)];
}

GridFunction GridFunction::scaled(complex alpha) const { return affine(alpha, 0.0); }

GridFunction GridFunction::affine(complex alpha, complex beta) const {
  std::vector<complex> v(values_);
  for (auto& x : v) x = alpha * x + beta;
  return GridFunction(std::move(v));
}

double interval_measure(int length, int n) { return kTwoPi * length / n; }

double log_weight(int length, int n) { return std::log(2.0 * kTwoPi / interval_measure(length, n)); }

double mean_oscillation(const GridFunction& f, int start, int length) {
  if (length < 1 || length > f.n()) throw LengthError("mean_oscillation: length must lie in [1, n]");
  complex mean{0.0, 0.0};
  for (int j = 0; j < length; ++j) mean += f[start + j];
  mean /= static_cast<double>(length);
  double dev = 0.0;
  for (int j = 0; j < length; ++j) dev += std::abs(f[start + j] - mean);
  return dev / length;
}

std::vector<DyadicInterval> dyadic_intervals(int n) {
  std::vector<DyadicInterval> out;
  for_each_dyadic(n, [&](int s, int l) { out.push_back({s, l}); });
  return out;
}

double bmo_seminorm(const GridFunction& f) {
  double best = 0.0;
  for_each_dyadic(f.n(), [&](int s, int l) { best = std::max(best, mean_oscillation(f, s, l)); });
  return best;
}

double bmo_log_seminorm(const GridFunction& f) {
  double best = 0.0;
  for_each_dyadic(f.n(), [&](int s, int l) {
    best = std::max(best, log_weight(l, f.n()) * mean_oscillation(f, s, l));
  });
  return best;
}

std::pair<double, double> vmo_defect(const GridFunction& f, double delta) {
  if (!(delta > 0.0 && delta <= kTwoPi)) throw DeltaError("vmo_defect: delta must lie in (0, 2*pi]");
  double plain = 0.0, weighted = 0.0;
  for_each_dyadic(f.n(), [&](int s, int l) {
    if (!(interval_measure(l, f.n()) < delta)) return;
    const double mo = mean_oscillation(f, s, l);
    plain = std::max(plain, mo);
    weighted = std::max(weighted, log_weight(l, f.n()) * mo);
  });
  return {plain, weighted};
}

double lip_log_seminorm(const GridFunction& f) {
  const int n = f.n();
  const int stride = std::max(1, n / kLipLogMaxPoints);
  const int m = n / stride;
  std::vector<complex> v(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) v[static_cast<std::size_t>(j)] = f[j * stride];
  // chordal distance depends only on the index gap
  std::vector<double> weight(static_cast<std::size_t>(m));
  for (int d = 1; d < m; ++d) {
    const double chord = 2.0 * std::abs(std::sin(kPi * d / m));
    weight[static_cast<std::size_t>(d)] = std::log(4.0 / chord);
  }
  double best = 0.0;
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      best = std::max(best, weight[static_cast<std::size_t>(b - a)] *
                                std::abs(v[static_cast<std::size_t>(a)] - v[static_cast<std::size_t>(b)]));
  return best;
}

EmbeddingReport embedding_check(const GridFunction& f) {
  EmbeddingReport report;
  report.bmo_log = bmo_log_seminorm(f);
  for_each_dyadic(f.n(), [&](int s, int l) {
    ++report.intervals;
    if (report.bmo_log == 0.0) return;
    const double bound = report.bmo_log / log_weight(l, f.n());
    report.worst_ratio = std::max(report.worst_ratio, mean_oscillation(f, s, l) / bound);
  });
  return report;
}

OscillationReport oscillation_ladder(const PiecewiseSymbol& symbol, const std::vector<int>& resolutions,
                                     double delta) {
  OscillationReport report;
  report.delta = delta;
  for (int n : resolutions) {
    const GridFunction q = GridFunction::complementary_part(symbol, n);
    const auto [plain, weighted] = vmo_defect(q, delta);
    report.resolutions.push_back(n);
    report.bmo.push_back(bmo_seminorm(q));
    report.bmo_log.push_back(bmo_log_seminorm(q));
    report.vmo_defect.push_back(plain);
    report.vmo_log_defect.push_back(weighted);
  }
  const auto& b = report.bmo_log;
  if (b.size() >= 2) {
    const double last = b.back(), prev = b[b.size() - 2];
    const double scale = std::max(std::abs(last), std::abs(prev));
    if (scale > 0.0 && std::abs(last - prev) >= 0.01 * scale) report.hint = OscillationHint::Diverging;
  }
  return report;
}

std::string to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::Bounded: return "Bounded";
    case VerdictKind::Unbounded: return "Unbounded";
    case VerdictKind::Unknown: return "Unknown";
  }
  return "Unknown";
}

std::string to_string(OscillationHint hint) {
  return hint == OscillationHint::Stable ? "Stable" : "Diverging";
}

H1Verdict h1_boundedness_verdict(const PiecewiseSymbol& symbol) {
  if (symbol.has_jumps()) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "jump at t=%.3f", symbol.jumps().front().t);
    return {VerdictKind::Unbounded, buf, std::nullopt};
  }
  if (symbol.global_polynomial()) return {VerdictKind::Bounded, "trigonometric polynomial", std::nullopt};
  return {VerdictKind::Unknown, "no structural certificate",
          oscillation_ladder(symbol, {256, 512, 1024, 2048, 4096}, kTwoPi / 64)};
}

}  // namespace pctoeplitz
