#pragma once

#include <Eigen/Dense>

namespace pdflow {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using Index = Eigen::Index;

} // namespace pdflow
