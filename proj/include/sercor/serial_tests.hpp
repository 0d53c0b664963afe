#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "sercor/lag_moments.hpp"
#include "sercor/residual_maker.hpp"

namespace sercor {

struct RegressionData {
  Eigen::VectorXd y;  // n responses
  Eigen::MatrixXd x;  // n x p design
};

struct GammaSequence {
  Eigen::VectorXd gamma;  // gamma_tau = sum_{i>tau} e_i e_{i-tau}, tau = 0..q
  int q;
};

// gamma_0 is the residual sum of squares; |gamma_tau| <= gamma_0.
GammaSequence gamma_sequence(const Eigen::VectorXd& residuals, int q);

struct NuisanceEstimates {
  double sigma2_hat = 0.0;  // gamma_0 / (n - p)
  double nu4_hat = 0.0;     // fourth cumulant of the standardized errors
  bool clamped = false;     // raw nu4 estimate fell below -2 and was clamped
  bool estimated = true;    // false when the caller supplied nu4
};

double estimate_sigma2(double gamma0, int n, int p);

// nu4_hat = (sum e_i^4 - 3 sigma2^2 tr(R o R)) / (sigma2^2 tr((R o R)^2)),
// with tr(R o R) = sum_i r_ii^2 and tr((R o R)^2) = sum_{i,j} r_ij^4.
NuisanceEstimates estimate_nu4(const Eigen::VectorXd& residuals,
                               const ResidualMaker& r, double sigma2_hat);

enum class TestKind { LagTau, Portmanteau, DurbinWatson };

enum class VarianceMode {
  Exact,                   // full quadratic form in the v matrix
  GaussianDesignShortcut,  // n^2 v_tt / m0^2 leading-order approximation
};

// Fourth-cumulant handling: estimate from residuals, or assert a known value
// (0 for Gaussian errors).
struct Nu4Mode {
  static Nu4Mode estimate() { return {}; }
  static Nu4Mode known(double value) { return {false, value}; }
  static Nu4Mode gaussian() { return known(0.0); }

  bool estimate_from_data = true;
  double known_value = 0.0;
};

struct TestOptions {
  double alpha = 0.05;
  VarianceMode variance = VarianceMode::Exact;
  Nu4Mode nu4 = Nu4Mode::estimate();
  bool robust = false;  // standardized-residual variant (D R in place of R)
};

struct TestReport {
  TestKind kind = TestKind::LagTau;
  int tau_or_q = 0;
  double statistic = 0.0;
  std::optional<double> p_value;  // absent for Durbin-Watson
  bool reject = false;
  double alpha = 0.05;
  std::optional<NuisanceEstimates> nuisance;
  std::vector<int> lags;    // lag order of m/v below (empty for Durbin-Watson)
  Eigen::VectorXd m;        // moment means over `lags`
  Eigen::MatrixXd v;        // scaled covariance matrix over `lags`
  bool robust = false;
  VarianceMode variance_mode = VarianceMode::Exact;
};

// The operator replacing R in the moment formulas when standardized residuals
// e_j / sqrt(r_jj) are used: G = D R with D = diag(r_jj^{-1/2}), W = G G' = D R D.
struct StandardizedResidualOperator {
  Eigen::VectorXd scale;  // r_jj^{-1/2}
  Eigen::MatrixXd g;      // D R
  Eigen::MatrixXd w;      // D R D
};

StandardizedResidualOperator robust_transform(const ResidualMaker& r);

// Precomputes everything that depends only on the design (R, moment kernels,
// the traces feeding nu4_hat) so repeated tests on the same design cost one
// matrix-vector product per response vector. Immutable and thread-safe.
class SerialTestEngine {
 public:
  // `lags` = lag set the engine can test: {0, tau} for a single lag-tau test,
  // {0..q} for a portmanteau test (0 is added if missing).
  SerialTestEngine(const Eigen::MatrixXd& x, std::vector<int> lags, bool robust);

  const ResidualMaker& residual_maker() const { return rm_; }
  const MomentKernel& kernel() const { return kernel_; }

  TestReport lag_test(const Eigen::VectorXd& y, int tau, const TestOptions& opt) const;
  TestReport portmanteau_test(const Eigen::VectorXd& y, int q, const TestOptions& opt) const;

 private:
  NuisanceEstimates nuisance(const Eigen::VectorXd& residuals, double gamma0,
                             const Nu4Mode& mode) const;
  Eigen::VectorXd test_residuals(const Eigen::VectorXd& y) const;

  ResidualMaker rm_;
  bool robust_;
  std::optional<StandardizedResidualOperator> robust_op_;
  MomentKernel kernel_;
  double trace_r_hadamard_r_;  // sum_i r_ii^2
  double sum_r4_;              // sum_{i,j} r_ij^4
};

// One-shot entry points. Lags must satisfy 1 <= tau (or q) < n - p.
TestReport t_tau_test(const RegressionData& data, int tau, const TestOptions& opt = {});
TestReport portmanteau_test(const RegressionData& data, int q, const TestOptions& opt = {});

// d = sum (e_i - e_{i-1})^2 / sum e_i^2, in [0, 4]; reported without a p-value.
TestReport durbin_watson(const Eigen::VectorXd& residuals);

}  // namespace sercor
