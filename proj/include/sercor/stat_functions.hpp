#pragma once

#include <cstddef>
#include <vector>

namespace sercor {

// Standard normal CDF via erfc; absolute error well below 1e-12.
double normal_cdf(double x);

// Two-sided normal p-value 2*(1 - Phi(|t|)).
double two_sided_p(double t);

// Complement of the Kolmogorov distribution, Q(lambda) = 2 sum (-1)^{k-1} exp(-2 k^2 lambda^2).
double kolmogorov_q(double lambda);

struct KsResult {
  double distance;  // sup |F_n - Phi|
  double p_value;   // asymptotic, with Stephens' small-sample correction
};

// One-sample Kolmogorov-Smirnov test of `sample` against N(0,1).
KsResult ks_test_standard_normal(std::vector<double> sample);

}  // namespace sercor
