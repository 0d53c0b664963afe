#include "sercor/lag_moments.hpp"

#include <algorithm>
#include <string>

#include "sercor/errors.hpp"

namespace sercor {

namespace {

void check_lag(int tau, int n) {
  if (tau < 0 || tau >= n) {
    throw LagOutOfRange("lag " + std::to_string(tau) + " out of range for n=" +
                        std::to_string(n));
  }
}

// diag of A_tau = G' P_tau G: (A_tau)_ii = sum_{k>=tau} G(k,i) G(k-tau,i).
Eigen::VectorXd quadratic_form_diagonal(const Eigen::MatrixXd& g, int tau) {
  const int n = static_cast<int>(g.rows());
  const int len = n - tau;
  Eigen::VectorXd d(n);
  for (int i = 0; i < n; ++i) {
    d(i) = g.col(i).segment(tau, len).dot(g.col(i).segment(0, len));
  }
  return d;
}

// tr(P_tau1 W P_tau2 W) + tr(P_tau1 W P_tau2' W) for symmetric W, i.e. the
// tau1-th superdiagonal plus subdiagonal sums of M = W P_tau2 W, without
// forming M: M(a,b) = sum_{k>=tau2} W(a,k) W(k-tau2,b).
double lag_pair_traces(const Eigen::MatrixXd& w, int tau1, int tau2) {
  const int n = static_cast<int>(w.rows());
  const int len = n - tau2;
  double sup = 0.0;
  double sub = 0.0;
  for (int j = 0; j + tau1 < n; ++j) {
    sup += w.col(j).segment(tau2, len).dot(w.col(j + tau1).segment(0, len));
    sub += w.col(j + tau1).segment(tau2, len).dot(w.col(j).segment(0, len));
  }
  return sup + sub;
}

}  // namespace

double superdiag_sum(const Eigen::MatrixXd& a, int tau) {
  check_lag(tau, static_cast<int>(a.rows()));
  double s = 0.0;
  for (int j = 0; j + tau < a.cols(); ++j) s += a(j, j + tau);
  return s;
}

double subdiag_sum(const Eigen::MatrixXd& a, int tau) {
  check_lag(tau, static_cast<int>(a.rows()));
  double s = 0.0;
  for (int j = 0; j + tau < a.rows(); ++j) s += a(j + tau, j);
  return s;
}

Eigen::MatrixXd shifted_rows_down(const Eigen::MatrixXd& a, int tau) {
  check_lag(tau, static_cast<int>(a.rows()));
  const int n = static_cast<int>(a.rows());
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n, a.cols());
  out.bottomRows(n - tau) = a.topRows(n - tau);
  return out;
}

double lag_trace(const ResidualMaker& r, int tau) {
  return superdiag_sum(r.matrix(), tau);
}

Eigen::MatrixXd lag_sandwich(const ResidualMaker& r, int tau) {
  check_lag(tau, r.n());
  return r.matrix() * shifted_rows_down(r.matrix(), tau);
}

double null_cov_kernel(const ResidualMaker& r, int tau1, int tau2, double nu4) {
  check_lag(tau1, r.n());
  check_lag(tau2, r.n());
  const Eigen::MatrixXd& w = r.matrix();
  const double hadamard =
      quadratic_form_diagonal(w, tau1).dot(quadratic_form_diagonal(w, tau2));
  return nu4 * hadamard + lag_pair_traces(w, tau1, tau2);
}

GeneralMoments general_moments(const ResidualMaker& r, const Eigen::MatrixXd& sigma_sqrt,
                               int tau1, int tau2, double nu4) {
  const int n = r.n();
  if (sigma_sqrt.rows() != n || sigma_sqrt.cols() != n) {
    throw DimensionError("sigma_sqrt must be n x n with n matching the design");
  }
  check_lag(tau1, n);
  check_lag(tau2, n);

  // G = R S so that the form matrix is A_tau = G' P_tau G = S B_tau S,
  // and W = G G' = R Sigma R.
  const Eigen::MatrixXd g = r.matrix() * sigma_sqrt;
  Eigen::MatrixXd w = g * g.transpose();
  w = 0.5 * (w + w.transpose()).eval();

  GeneralMoments out;
  out.mean = superdiag_sum(w, tau1);
  const double hadamard =
      quadratic_form_diagonal(g, tau1).dot(quadratic_form_diagonal(g, tau2));
  out.cov = nu4 * hadamard + lag_pair_traces(w, tau1, tau2);
  return out;
}

MomentKernel::MomentKernel(const Eigen::MatrixXd& w, const Eigen::MatrixXd& g,
                           int p, std::vector<int> lags)
    : lags_(std::move(lags)), n_(static_cast<int>(w.rows())), p_(p) {
  if (lags_.empty() || lags_.front() != 0) {
    throw LagOutOfRange("moment kernel lag set must start with 0");
  }
  for (int tau : lags_) check_lag(tau, n_);

  const int count = static_cast<int>(lags_.size());
  m_.resize(count);
  Eigen::MatrixXd diag_a(n_, count);
  for (int idx = 0; idx < count; ++idx) {
    m_(idx) = superdiag_sum(w, lags_[idx]);
    diag_a.col(idx) = quadratic_form_diagonal(g, lags_[idx]);
  }
  hadamard_ = diag_a.transpose() * diag_a;
  traces_.resize(count, count);
  for (int i2 = 0; i2 < count; ++i2) {
    for (int i1 = 0; i1 < count; ++i1) {
      traces_(i1, i2) = lag_pair_traces(w, lags_[i1], lags_[i2]);
    }
  }
}

MomentKernel MomentKernel::classic(const ResidualMaker& r, std::vector<int> lags) {
  return MomentKernel(r.matrix(), r.matrix(), r.p(), std::move(lags));
}

int MomentKernel::lag_index(int tau) const {
  auto it = std::find(lags_.begin(), lags_.end(), tau);
  return it == lags_.end() ? -1 : static_cast<int>(it - lags_.begin());
}

LagMoments lag_moments(const ResidualMaker& r, int q, double nu4) {
  if (q < 1) throw LagOutOfRange("lag_moments needs q >= 1");
  check_lag(q, r.n());
  if (nu4 < -2.0) throw DimensionError("nu4 below the theoretical minimum -2");
  std::vector<int> lags(q + 1);
  for (int t = 0; t <= q; ++t) lags[t] = t;
  MomentKernel kernel = MomentKernel::classic(r, std::move(lags));
  return {kernel.m_values(), kernel.v(nu4)};
}

}  // namespace sercor
