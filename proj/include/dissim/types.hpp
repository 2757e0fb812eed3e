#pragma once

#include <Eigen/Dense>
#include <cstdint>

namespace dissim {

using Scalar = double;
using Index = Eigen::Index;

template <typename T>
using DenseMatrix = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;
template <typename T>
using DenseVector = Eigen::Matrix<T, Eigen::Dynamic, 1>;

using Matrix = DenseMatrix<Scalar>;
using Vector = DenseVector<Scalar>;

/// A streamline is a D x n matrix: column j holds point j. A single point is
/// a length-1 streamline (a D x 1 matrix), so point clouds and polylines share
/// one representation.
using Streamline = Matrix;

/// Image of one object under the dissimilarity projection: one distance per
/// prototype, length p.
using EmbeddedVector = Vector;

/// Row i is the embedded vector of object i: an N x p matrix.
using EmbeddedDataset = Matrix;

}  // namespace dissim
