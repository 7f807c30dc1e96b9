#pragma once

#include <Eigen/Core>
#include <vector>

namespace aligncross {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Neuron indices within one layer, 0-based.
using IndexList = std::vector<int>;

}  // namespace aligncross
