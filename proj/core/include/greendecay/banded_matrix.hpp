#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace greendecay {

/// Square matrix with declared lower and upper bandwidths.
///
/// Storage is a dense N x N array. Every entry (i, j) with i - j > r_lower or
/// j - i > r_upper is exactly zero; construction masks anything outside the
/// band. Element access through operator() is 1-based, while dense() exposes
/// the 0-based Eigen array for bulk linear algebra.
///
/// A matrix is "one-sided" when r_upper == N - 1.
class BandedMatrix {
public:
  using EntryFn = std::function<double(std::size_t, std::size_t)>;

  /// Samples entry_fn(i, j) (1-based) inside the band.
  /// Throws ShapeError unless N > r_lower >= 1.
  BandedMatrix(std::size_t n, std::size_t r_lower, std::size_t r_upper,
               const EntryFn& entry_fn);

  /// Copies `dense`, zeroing everything outside the declared band.
  static BandedMatrix from_dense(const Eigen::MatrixXd& dense,
                                 std::size_t r_lower, std::size_t r_upper);

  /// Infers the tightest bandwidths of `dense` (r_lower floored at 1).
  static BandedMatrix from_dense(const Eigen::MatrixXd& dense);

  std::size_t size() const noexcept { return n_; }
  std::size_t r_lower() const noexcept { return r_lower_; }
  std::size_t r_upper() const noexcept { return r_upper_; }
  bool one_sided() const noexcept { return r_upper_ + 1 >= n_; }

  bool in_band(std::size_t i, std::size_t j) const noexcept {
    return (i <= j || i - j <= r_lower_) && (j <= i || j - i <= r_upper_);
  }

  /// 1-based element read.
  double operator()(std::size_t i, std::size_t j) const {
    return data_(static_cast<Eigen::Index>(i - 1),
                 static_cast<Eigen::Index>(j - 1));
  }

  const Eigen::MatrixXd& dense() const noexcept { return data_; }

  bool symmetric() const;

private:
  BandedMatrix(Eigen::MatrixXd data, std::size_t r_lower, std::size_t r_upper);

  std::size_t n_;
  std::size_t r_lower_;
  std::size_t r_upper_;
  Eigen::MatrixXd data_;
};

/// Convenience factory mirroring the BandedMatrix constructor.
BandedMatrix make_banded(std::size_t n, std::size_t r_lower,
                         std::size_t r_upper,
                         const BandedMatrix::EntryFn& entry_fn);

/// Smallest mu satisfying the column dominance condition
///
///   mu |A(k,k)| >= sum_{i<k} |A(i,k)| + sum_{i=k+1}^{k+r} |A(i,k)|
///
/// together with per-column ratios. `satisfied` requires mu < 1 and a nonzero
/// diagonal. With a zero diagonal entry the report has mu = +inf and
/// `zero_diagonal` names the first offending (1-based) index.
struct DominanceReport {
  double mu = 0.0;
  double min_diag = 0.0;
  bool satisfied = false;
  std::vector<double> per_column_ratios;
  std::optional<std::size_t> zero_diagonal;
};

DominanceReport dominance_mu(const BandedMatrix& a);

/// Same ratios for a dense matrix whose lower bandwidth is `r_lower`; entries
/// below the band are ignored. Used on Schur complements.
DominanceReport dominance_mu(const Eigen::MatrixXd& a, std::size_t r_lower);

/// Column Gershgorin interval (a, b): a = min_k(|A(k,k)| - off-column sum),
/// b = max_k(|A(k,k)| + off-column sum). a <= 0 is a legitimate result.
std::pair<double, double> gershgorin_interval(const BandedMatrix& a);

/// I_r (+) A (+) I_r with r = r_lower; upper bandwidth is preserved.
BandedMatrix augment(const BandedMatrix& a);

/// 1-norm (maximum absolute column sum).
double norm1(const Eigen::MatrixXd& m);

}  // namespace greendecay
