// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

#include <cstdint>

namespace herdsense {

using Scalar = double;

template <typename S>
using VecT = Eigen::Matrix<S, Eigen::Dynamic, 1>;
template <typename S>
using MatT = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <typename S>
using RowMatT = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

using Vec = VecT<Scalar>;
using Mat = MatT<Scalar>;
// Row-major layout for row-wise distance scans.
using RowMat = RowMatT<Scalar>;

using Eigen::Index;

}  // namespace herdsense
