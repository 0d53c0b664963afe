#pragma once

#include <string>

#include "sercor/serial_tests.hpp"

namespace sercor {

// Delimited dataset: comma-separated, '.' decimal, UTF-8; first column is the
// response y, the remaining p columns are the design X. A single header row is
// auto-detected (any non-numeric token in the first row). Missing or
// non-finite values are rejected, as are ragged rows and n < p + 2.
RegressionData read_dataset(const std::string& path);

// Writes y,x1..xp with a header row, at full double round-trip precision.
void write_dataset(const std::string& path, const Eigen::VectorXd& y,
                   const Eigen::MatrixXd& x);

}  // namespace sercor
