#pragma once

#include <vector>

#include <Eigen/Dense>

// Dense reference computations. Nothing here knows about band structure or
// Green generators, so results can be used to check the structured code.

namespace greendecay::oracle {

using DenseMatrix = Eigen::MatrixXd;

struct DenseLU {
  DenseMatrix lower;  ///< unit lower triangular
  DenseMatrix upper;
};

/// Textbook Doolittle elimination, no pivoting. Throws ZeroPivotError.
DenseLU dense_lu_no_pivot(const DenseMatrix& a);

/// Inverse via the no-pivot LU when every column is strictly diagonally
/// dominant, partial pivoting otherwise. Throws Error when singular to
/// working precision.
DenseMatrix dense_inverse(const DenseMatrix& a);

/// Determinant by fraction-free (Bareiss) elimination with row swaps.
/// Meant for small matrices.
double determinant(const DenseMatrix& a);

struct SymmetricEigen {
  std::vector<double> values;  ///< ascending
  DenseMatrix vectors;         ///< columns match `values`
  int sweeps = 0;
};

/// Cyclic Jacobi rotations until the off-diagonal Frobenius norm drops to
/// 1e-12 ||A||_F. Throws HypothesisError for non-symmetric input.
SymmetricEigen symmetric_eigen(const DenseMatrix& a);

/// Eigenvalues only, ascending.
std::vector<double> symmetric_spectrum(const DenseMatrix& a);

}  // namespace greendecay::oracle
