#include "greendecay/banded_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "greendecay/errors.hpp"

namespace greendecay {

namespace {

void check_shape(std::size_t n, std::size_t r_lower, std::size_t r_upper) {
  if (r_lower < 1)
    throw ShapeError("lower bandwidth must be at least 1");
  if (n <= r_lower)
    throw ShapeError("dimension " + std::to_string(n) +
                     " must exceed lower bandwidth " + std::to_string(r_lower));
  if (r_upper >= n)
    throw ShapeError("upper bandwidth " + std::to_string(r_upper) +
                     " must be below dimension " + std::to_string(n));
}

}  // namespace

BandedMatrix::BandedMatrix(Eigen::MatrixXd data, std::size_t r_lower,
                           std::size_t r_upper)
    : n_(static_cast<std::size_t>(data.rows())),
      r_lower_(r_lower),
      r_upper_(r_upper),
      data_(std::move(data)) {}

BandedMatrix::BandedMatrix(std::size_t n, std::size_t r_lower,
                           std::size_t r_upper, const EntryFn& entry_fn)
    : n_(n), r_lower_(r_lower), r_upper_(r_upper) {
  check_shape(n, r_lower, r_upper);
  const auto en = static_cast<Eigen::Index>(n);
  data_ = Eigen::MatrixXd::Zero(en, en);
  for (std::size_t j = 1; j <= n; ++j) {
    const std::size_t i_lo = j > r_upper ? j - r_upper : 1;
    const std::size_t i_hi = std::min(n, j + r_lower);
    for (std::size_t i = i_lo; i <= i_hi; ++i)
      data_(static_cast<Eigen::Index>(i - 1), static_cast<Eigen::Index>(j - 1)) =
          entry_fn(i, j);
  }
}

BandedMatrix BandedMatrix::from_dense(const Eigen::MatrixXd& dense,
                                      std::size_t r_lower,
                                      std::size_t r_upper) {
  if (dense.rows() != dense.cols())
    throw ShapeError("matrix must be square");
  const auto n = static_cast<std::size_t>(dense.rows());
  check_shape(n, r_lower, r_upper);
  Eigen::MatrixXd masked = Eigen::MatrixXd::Zero(dense.rows(), dense.cols());
  for (Eigen::Index j = 0; j < dense.cols(); ++j)
    for (Eigen::Index i = 0; i < dense.rows(); ++i) {
      const bool inside =
          (i <= j || static_cast<std::size_t>(i - j) <= r_lower) &&
          (j <= i || static_cast<std::size_t>(j - i) <= r_upper);
      if (inside) masked(i, j) = dense(i, j);
    }
  return BandedMatrix(std::move(masked), r_lower, r_upper);
}

BandedMatrix BandedMatrix::from_dense(const Eigen::MatrixXd& dense) {
  if (dense.rows() != dense.cols())
    throw ShapeError("matrix must be square");
  std::size_t lo = 0, up = 0;
  for (Eigen::Index j = 0; j < dense.cols(); ++j)
    for (Eigen::Index i = 0; i < dense.rows(); ++i) {
      if (dense(i, j) == 0.0) continue;
      if (i > j) lo = std::max(lo, static_cast<std::size_t>(i - j));
      if (j > i) up = std::max(up, static_cast<std::size_t>(j - i));
    }
  return from_dense(dense, std::max<std::size_t>(lo, 1), up);
}

bool BandedMatrix::symmetric() const {
  return data_ == data_.transpose();
}

BandedMatrix make_banded(std::size_t n, std::size_t r_lower,
                         std::size_t r_upper,
                         const BandedMatrix::EntryFn& entry_fn) {
  return BandedMatrix(n, r_lower, r_upper, entry_fn);
}

DominanceReport dominance_mu(const Eigen::MatrixXd& a, std::size_t r_lower) {
  const Eigen::Index n = a.rows();
  DominanceReport rep;
  rep.per_column_ratios.resize(static_cast<std::size_t>(n));
  rep.min_diag = std::numeric_limits<double>::infinity();
  for (Eigen::Index k = 0; k < n; ++k) {
    double off = 0.0;
    for (Eigen::Index i = 0; i < k; ++i) off += std::abs(a(i, k));
    const Eigen::Index i_hi =
        std::min<Eigen::Index>(n - 1, k + static_cast<Eigen::Index>(r_lower));
    for (Eigen::Index i = k + 1; i <= i_hi; ++i) off += std::abs(a(i, k));
    const double d = std::abs(a(k, k));
    rep.min_diag = std::min(rep.min_diag, d);
    double ratio;
    if (d == 0.0) {
      ratio = std::numeric_limits<double>::infinity();
      if (!rep.zero_diagonal) rep.zero_diagonal = static_cast<std::size_t>(k + 1);
    } else {
      ratio = off / d;
    }
    rep.per_column_ratios[static_cast<std::size_t>(k)] = ratio;
    rep.mu = std::max(rep.mu, ratio);
  }
  if (n == 0) rep.min_diag = 0.0;
  rep.satisfied = rep.mu < 1.0 && rep.min_diag > 0.0;
  return rep;
}

DominanceReport dominance_mu(const BandedMatrix& a) {
  return dominance_mu(a.dense(), a.r_lower());
}

std::pair<double, double> gershgorin_interval(const BandedMatrix& a) {
  const Eigen::MatrixXd& m = a.dense();
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (Eigen::Index k = 0; k < m.cols(); ++k) {
    const double d = std::abs(m(k, k));
    const double off = m.col(k).cwiseAbs().sum() - d;
    lo = std::min(lo, d - off);
    hi = std::max(hi, d + off);
  }
  return {lo, hi};
}

BandedMatrix augment(const BandedMatrix& a) {
  const std::size_t r = a.r_lower();
  const std::size_t n = a.size();
  const auto big = static_cast<Eigen::Index>(n + 2 * r);
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(big, big);
  m.block(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(r),
          static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n)) =
      a.dense();
  const std::size_t r_upper = a.one_sided() ? n + 2 * r - 1 : a.r_upper();
  return BandedMatrix::from_dense(m, r, r_upper);
}

double norm1(const Eigen::MatrixXd& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().colwise().sum().maxCoeff();
}

}  // namespace greendecay
