#include "sercor/stat_functions.hpp"

#include <algorithm>
#include <cmath>

#include "sercor/errors.hpp"

namespace sercor {

double normal_cdf(double x) { return 0.5 * std::erfc(-x * M_SQRT1_2); }

double two_sided_p(double t) { return std::erfc(std::abs(t) * M_SQRT1_2); }

double kolmogorov_q(double lambda) {
  if (lambda <= 0.0) return 1.0;
  double sum = 0.0;
  double sign = 1.0;
  for (int k = 1; k <= 200; ++k) {
    const double term = std::exp(-2.0 * k * k * lambda * lambda);
    sum += sign * term;
    if (term < 1e-16) break;
    sign = -sign;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

KsResult ks_test_standard_normal(std::vector<double> sample) {
  if (sample.empty()) throw DimensionError("ks test requires a non-empty sample");
  std::sort(sample.begin(), sample.end());
  const double n = static_cast<double>(sample.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const double f = normal_cdf(sample[i]);
    d = std::max(d, std::abs((i + 1) / n - f));
    d = std::max(d, std::abs(f - i / n));
  }
  const double sqrt_n = std::sqrt(n);
  const double lambda = (sqrt_n + 0.12 + 0.11 / sqrt_n) * d;
  return {d, kolmogorov_q(lambda)};
}

}  // namespace sercor
