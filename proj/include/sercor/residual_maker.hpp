#pragma once

#include <Eigen/Dense>

namespace sercor {

// R = I - X(X'X)^{-1}X', the projector onto the orthogonal complement of the
// design's column space. Symmetric, idempotent, tr R = n - p, R X = 0.
// Immutable after construction; safe to share read-only across threads.
class ResidualMaker {
 public:
  // Builds R from an n x p design via Householder QR. The rank check uses the
  // singular values of the triangular factor (equal to those of X); the design
  // is rejected as singular when sigma_min < 1e-10 * sigma_max.
  static ResidualMaker from_design(const Eigen::MatrixXd& x);

  int n() const { return static_cast<int>(r_.rows()); }
  int p() const { return p_; }

  // The dense symmetric matrix R.
  const Eigen::MatrixXd& matrix() const { return r_; }

  // OLS residuals e = R y.
  Eigen::VectorXd residuals(const Eigen::VectorXd& y) const;

  // r_jj = 1 - h_jj, the leverage complement of observation j.
  double leverage_complement(int j) const { return r_(j, j); }

  static constexpr double kSingularityThreshold = 1e-10;

 private:
  ResidualMaker(Eigen::MatrixXd r, int p) : r_(std::move(r)), p_(p) {}

  Eigen::MatrixXd r_;
  int p_;
};

}  // namespace sercor
