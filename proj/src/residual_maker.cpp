#include "sercor/residual_maker.hpp"

#include <Eigen/QR>
#include <Eigen/SVD>

#include "sercor/errors.hpp"

namespace sercor {

ResidualMaker ResidualMaker::from_design(const Eigen::MatrixXd& x) {
  const int n = static_cast<int>(x.rows());
  const int p = static_cast<int>(x.cols());
  if (p < 1) throw DimensionError("design matrix needs at least one column");
  if (n < 2 || n - p < 1) {
    throw DimensionError("design matrix needs n >= 2 and n - p >= 1, got n=" +
                         std::to_string(n) + " p=" + std::to_string(p));
  }

  Eigen::HouseholderQR<Eigen::MatrixXd> qr(x);
  Eigen::MatrixXd r_factor =
      qr.matrixQR().topRows(p).triangularView<Eigen::Upper>();
  Eigen::BDCSVD<Eigen::MatrixXd> svd(r_factor);
  const auto& sv = svd.singularValues();
  if (!(sv(0) > 0.0) || sv(p - 1) < kSingularityThreshold * sv(0)) {
    throw SingularDesign("design matrix is numerically rank deficient");
  }

  Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(n, p);
  Eigen::MatrixXd r = Eigen::MatrixXd::Identity(n, n);
  r.selfadjointView<Eigen::Lower>().rankUpdate(q, -1.0);
  // Mirror the lower triangle so the stored matrix is exactly symmetric.
  r = r.selfadjointView<Eigen::Lower>();
  return ResidualMaker(std::move(r), p);
}

Eigen::VectorXd ResidualMaker::residuals(const Eigen::VectorXd& y) const {
  if (y.size() != r_.rows()) {
    throw DimensionError("response length does not match design row count");
  }
  return r_ * y;
}

}  // namespace sercor
