#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "greendecay/banded_matrix.hpp"
#include "greendecay/green.hpp"

namespace greendecay {

/// LU factorization A = L R of a strongly regular lower band matrix of order
/// r, computed without pivoting by eliminating one column at a time on a
/// rolling window of at most r rows.
///
/// Step k produces the pivot gamma(k) = R(k,k), the pivot row remainder
/// X(k) = R(k, k+1:N) and the elimination vector f(k), whose length is
/// min(r, N - k). The elementary factor applied at step k is
///
///   L_k = [ 1     0 ]
///         [ -f_k  I ]
///
/// so column k of L below the diagonal is f(k). All accessors are 1-based.
class StructuredLU {
public:
  StructuredLU(std::size_t n, std::size_t r, std::vector<double> gamma,
               std::vector<Eigen::RowVectorXd> x,
               std::vector<Eigen::VectorXd> f, Eigen::MatrixXd upper);

  std::size_t n() const noexcept { return n_; }
  std::size_t r() const noexcept { return r_; }

  /// k in 1 .. N.
  double gamma(std::size_t k) const { return gamma_.at(k - 1); }
  /// k in 1 .. N - 1.
  const Eigen::RowVectorXd& x(std::size_t k) const { return x_.at(k - 1); }
  /// k in 1 .. N - 1.
  const Eigen::VectorXd& f(std::size_t k) const { return f_.at(k - 1); }

  /// Upper triangular factor R.
  const Eigen::MatrixXd& upper() const noexcept { return upper_; }

  /// Unit lower triangular factor L reassembled from the f(k).
  Eigen::MatrixXd lower() const;

  /// Elementary factor L_k; (r+1) x (r+1) for k <= N - r, otherwise
  /// (N-k+1) x (N-k+1).
  Eigen::MatrixXd elementary(std::size_t k) const;

  /// Product of the trailing elementary factors L_{N-1} ... L_{N-r+1}, the
  /// r x r block L^{-1}(N-r+1:N, N-r+1:N).
  Eigen::MatrixXd trailing_elimination() const;

private:
  std::size_t n_;
  std::size_t r_;
  std::vector<double> gamma_;
  std::vector<Eigen::RowVectorXd> x_;
  std::vector<Eigen::VectorXd> f_;
  Eigen::MatrixXd upper_;
};

/// Pivots with |gamma| below this abort the factorization.
inline constexpr double kPivotFloor = 1e-300;

/// Throws ZeroPivotError carrying the failing step.
StructuredLU structured_lu(const BandedMatrix& a);

/// Lower Green generators of L^{-1} together with the trailing pieces.
///
/// For k = 1 .. N - r the partition of L_k gives
///   p_L(k) = e_1^T,  d_L(k) = 0,  a_L(k) = -f_k e_1^T + J,  q_L(k) = e_r
/// with J the r x r upper shift. For the trailing steps i = N-r+1 .. N-1,
/// L_i = [p_L(i); a_L(i)] with p_L(i) of size 1 x r_i and a_L(i) of size
/// (r_i - 1) x r_i, r_i = N - i + 1. `trailing_block` is the r x r factor
/// product (the generator usually written p_L(N-r+1)).
struct LInvGenerators {
  std::size_t n = 0;
  std::size_t r = 0;
  std::vector<Eigen::RowVectorXd> p;  // k = 1 .. N - r
  std::vector<Eigen::VectorXd> q;     // k = 1 .. N - r
  std::vector<Eigen::MatrixXd> a;     // k = 1 .. N - r
  std::vector<double> d;              // k = 1 .. N - r
  std::vector<Eigen::RowVectorXd> tail_p;  // i = N - r + 1 .. N - 1
  std::vector<Eigen::MatrixXd> tail_a;     // i = N - r + 1 .. N - 1
  Eigen::MatrixXd trailing_block;
};

LInvGenerators linv_generators(const StructuredLU& slu);

/// Lower Green generators of A^{-1}, computed backwards from p(N) = 1/gamma_N.
GreenGenerators inverse_green_generators(const StructuredLU& slu);
GreenGenerators inverse_green_generators(const BandedMatrix& a);

/// Trailing generator computed as R(N-r+1:N, N-r+1:N)^{-1} times the trailing
/// elimination block, independently of the backward recursion.
Eigen::MatrixXd p_tail_cross_check(const StructuredLU& slu);

/// Trailing (N - ell) x (N - ell) matrix after ell steps of Gaussian
/// elimination without pivoting. Requires 1 <= ell <= N - r.
Eigen::MatrixXd schur_complement(const BandedMatrix& a, std::size_t ell);

}  // namespace greendecay
