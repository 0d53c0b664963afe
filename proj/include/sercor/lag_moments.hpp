#pragma once

#include <Eigen/Dense>
#include <vector>

#include "sercor/residual_maker.hpp"

namespace sercor {

// The lag matrix P_tau has ones where row - column = tau. It is never
// materialized outside test oracles; every contraction below is an index
// shift. tr(P_tau A) is the tau-th superdiagonal sum of A.

double superdiag_sum(const Eigen::MatrixXd& a, int tau);
double subdiag_sum(const Eigen::MatrixXd& a, int tau);

// P_tau * A: row k of A moved to row k + tau, first tau rows zero.
Eigen::MatrixXd shifted_rows_down(const Eigen::MatrixXd& a, int tau);

// m_tau = tr(P_tau R), the null-scaled mean of gamma_tau; m_0 = n - p.
double lag_trace(const ResidualMaker& r, int tau);

// B_tau = R P_tau R, computed as R times the tau-row-shifted copy of R.
Eigen::MatrixXd lag_sandwich(const ResidualMaker& r, int tau);

// n * v_{tau1 tau2} under the null:
//   nu4 * sum_i (B_tau1)_ii (B_tau2)_ii + tr(P_tau1 R P_tau2 R) + tr(P_tau1 R P_tau2' R)
double null_cov_kernel(const ResidualMaker& r, int tau1, int tau2, double nu4);

struct GeneralMoments {
  double mean;  // tr(R P_tau1 R Sigma)
  double cov;   // nu4 tr(A_tau1 o A_tau2) + tr(P_tau1 K P_tau2 K) + tr(P_tau1 K P_tau2' K),
                // A_tau = S R P_tau R S, K = R Sigma R, Sigma = S S
};

// Mean/covariance of (gamma_tau1, gamma_tau2) for a general error covariance
// Sigma = sigma_sqrt^2. With Sigma = sigma^2 I this reduces to sigma^2 m_tau
// and sigma^4 null_cov_kernel.
GeneralMoments general_moments(const ResidualMaker& r, const Eigen::MatrixXd& sigma_sqrt,
                               int tau1, int tau2, double nu4);

// nu4-independent pieces of the moment formulas for a fixed lag set, so the
// v matrix can be reassembled cheaply for any fourth-cumulant value:
//   n * v_{t1 t2}(nu4) = nu4 * hadamard(t1, t2) + traces(t1, t2).
//
// The quadratic form behind gamma_tau is eps' A_tau eps with A_tau = G' P_tau G;
// W = G G' drives the trace terms. Instantiations:
//   classic:               G = R,   W = R
//   standardized residual: G = D R, W = D R D
// Both m and v are indexed by position in `lags` (which must contain 0).
class MomentKernel {
 public:
  MomentKernel(const Eigen::MatrixXd& w, const Eigen::MatrixXd& g, int p,
               std::vector<int> lags);

  static MomentKernel classic(const ResidualMaker& r, std::vector<int> lags);

  const std::vector<int>& lags() const { return lags_; }
  int lag_index(int tau) const;  // position of tau in lags(), -1 if absent
  int n() const { return n_; }
  int p() const { return p_; }

  double m(int idx) const { return m_(idx); }
  const Eigen::VectorXd& m_values() const { return m_; }
  double m0() const { return m_(0); }

  Eigen::MatrixXd v(double nu4) const { return (nu4 * hadamard_ + traces_) / n_; }

 private:
  std::vector<int> lags_;
  Eigen::VectorXd m_;
  Eigen::MatrixXd hadamard_;
  Eigen::MatrixXd traces_;
  int n_;
  int p_;
};

struct LagMoments {
  Eigen::VectorXd m;  // m_tau, tau = 0..q
  Eigen::MatrixXd v;  // v_{tau1 tau2}, (q+1) x (q+1)
};

LagMoments lag_moments(const ResidualMaker& r, int q, double nu4);

}  // namespace sercor
