#include "pctoeplitz/coefficients.hpp"

#include <algorithm>

#include "pctoeplitz/errors.hpp"

namespace pctoeplitz {

CoefficientSequence::CoefficientSequence() : k_min_(0), coeffs_{complex{0.0, 0.0}} {}

CoefficientSequence::CoefficientSequence(int k_min, std::vector<complex> coeffs)
    : k_min_(k_min), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw EmptyError("coefficient sequence must not be empty");
}

CoefficientSequence CoefficientSequence::constant(complex c) { return {0, {c}}; }

CoefficientSequence CoefficientSequence::monomial(int k, complex c) { return {k, {c}}; }

complex CoefficientSequence::operator[](int k) const {
  if (k < k_min_ || k > k_max()) return {0.0, 0.0};
  return coeffs_[static_cast<std::size_t>(k - k_min_)];
}

complex CoefficientSequence::evaluate(double theta) const {
  const complex z = std::polar(1.0, theta);
  complex acc{0.0, 0.0};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc * std::polar(1.0, k_min_ * theta);
}

complex CoefficientSequence::evaluate_at(complex z) const {
  complex acc{0.0, 0.0};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return k_min_ == 0 ? acc : acc * std::pow(z, k_min_);
}

CoefficientSequence CoefficientSequence::trimmed() const {
  auto nonzero = [](complex c) { return c != complex{0.0, 0.0}; };
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), nonzero);
  if (first == coeffs_.end()) return {};
  auto last = std::find_if(coeffs_.rbegin(), coeffs_.rend(), nonzero).base();
  return {k_min_ + static_cast<int>(first - coeffs_.begin()), std::vector<complex>(first, last)};
}

CoefficientSequence CoefficientSequence::restricted(int k_min, int k_max) const {
  if (k_max < k_min) throw SizeError("restricted: k_max < k_min");
  std::vector<complex> out(static_cast<std::size_t>(k_max - k_min + 1));
  for (int k = k_min; k <= k_max; ++k) out[static_cast<std::size_t>(k - k_min)] = (*this)[k];
  return {k_min, std::move(out)};
}

CoefficientSequence CoefficientSequence::conjugate() const {
  std::vector<complex> out(coeffs_.size());
  std::transform(coeffs_.rbegin(), coeffs_.rend(), out.begin(),
                 [](complex c) { return std::conj(c); });
  return {-k_max(), std::move(out)};
}

CoefficientSequence CoefficientSequence::shifted(complex lambda) const {
  const int lo = std::min(k_min_, 0);
  const int hi = std::max(k_max(), 0);
  CoefficientSequence out = restricted(lo, hi);
  out.coeffs_[static_cast<std::size_t>(-lo)] -= lambda;
  return out;
}

CoefficientSequence CoefficientSequence::scaled(complex alpha) const {
  CoefficientSequence out = *this;
  for (auto& c : out.coeffs_) c *= alpha;
  return out;
}

bool CoefficientSequence::is_constant() const {
  for (int k = k_min_; k <= k_max(); ++k)
    if (k != 0 && (*this)[k] != complex{0.0, 0.0}) return false;
  return true;
}

bool same_polynomial(const CoefficientSequence& a, const CoefficientSequence& b) {
  return a.trimmed() == b.trimmed();
}

}  // namespace pctoeplitz
