#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace greendecay {

/// Block partition used by the Green representation of an N x N matrix of
/// order r: (N - r + 2) block rows and columns, indexed from 0.
///
///   m = (0, 1, ..., 1, r)     n = (r, 1, ..., 1, 0)
///
/// Block row i (1 <= i <= N - r) is scalar row i, block row N - r + 1 holds
/// scalar rows N - r + 1 .. N. Block column 0 holds scalar columns 1 .. r and
/// block column j (1 <= j <= N - r) is scalar column j + r.
struct BlockScheme {
  std::size_t n = 0;
  std::size_t r = 0;
  std::vector<std::size_t> row_sizes;  // m_0 .. m_{N-r+1}
  std::vector<std::size_t> col_sizes;  // n_0 .. n_{N-r+1}

  std::size_t last() const noexcept { return n - r + 1; }
};

/// Throws ShapeError unless N > r >= 1.
BlockScheme block_scheme(std::size_t n, std::size_t r);

/// Lower Green generators of an N x N matrix of order r:
///
///   B'(i, j) = p(i) a(i-1) ... a(j+1) q(j),   0 <= j < i <= N - r + 1
///
/// p(i) is 1 x r for i <= N - r and r x r for i = N - r + 1 (the trailing
/// block usually written P_{N-r+1}); q(j) is r x 1 for j >= 1 and q(0) = I_r;
/// a(k) is r x r for k = 1 .. N - r. Accessors take the block indices above.
class GreenGenerators {
public:
  GreenGenerators(BlockScheme scheme, std::vector<Eigen::MatrixXd> p,
                  std::vector<Eigen::MatrixXd> q,
                  std::vector<Eigen::MatrixXd> a);

  const BlockScheme& scheme() const noexcept { return scheme_; }
  std::size_t n() const noexcept { return scheme_.n; }
  std::size_t r() const noexcept { return scheme_.r; }

  /// i in 1 .. N - r + 1.
  const Eigen::MatrixXd& p(std::size_t i) const { return p_.at(i - 1); }
  /// j in 0 .. N - r.
  const Eigen::MatrixXd& q(std::size_t j) const { return q_.at(j); }
  /// k in 1 .. N - r.
  const Eigen::MatrixXd& a(std::size_t k) const { return a_.at(k - 1); }
  /// The r x r trailing generator p(N - r + 1).
  const Eigen::MatrixXd& trailing() const { return p_.back(); }

private:
  BlockScheme scheme_;
  std::vector<Eigen::MatrixXd> p_;
  std::vector<Eigen::MatrixXd> q_;
  std::vector<Eigen::MatrixXd> a_;
};

/// Ordered product a(i-1) a(i-2) ... a(j+1); identity when j >= i - 1.
/// Requires 0 <= j and i <= N - r + 1.
Eigen::MatrixXd transition_product(const GreenGenerators& g, std::size_t i,
                                   std::size_t j);

/// p(i) * transition_product(i, j) * q(j), an m_i x n_j block.
/// Requires 0 <= j < i <= N - r + 1, throws std::out_of_range otherwise.
Eigen::MatrixXd green_block_entry(const GreenGenerators& g, std::size_t i,
                                  std::size_t j);

/// True when the 1-based scalar position (i, j) lies in the strictly block
/// lower part the generators describe, i.e. j - i <= r - 1.
bool represented(const GreenGenerators& g, std::size_t i, std::size_t j);

/// Scalar entry B(i, j), 1-based. Throws std::out_of_range outside the
/// represented region.
double green_scalar_entry(const GreenGenerators& g, std::size_t i,
                          std::size_t j);

/// Dense reconstruction of the represented part. Entries outside the region
/// are zero with mask == false.
struct LowerReconstruction {
  Eigen::MatrixXd values;
  Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic> mask;
};

LowerReconstruction reconstruct_lower(const GreenGenerators& g);

}  // namespace greendecay
