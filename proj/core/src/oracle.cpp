#include "greendecay/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "greendecay/errors.hpp"
#include "greendecay/structured_lu.hpp"

namespace greendecay::oracle {

namespace {

using Index = Eigen::Index;

bool strictly_column_dominant(const DenseMatrix& a) {
  for (Index k = 0; k < a.cols(); ++k) {
    const double d = std::abs(a(k, k));
    if (!(a.col(k).cwiseAbs().sum() - d < d)) return false;
  }
  return true;
}

double off_diagonal_norm(const DenseMatrix& a) {
  double s = 0.0;
  for (Index j = 0; j < a.cols(); ++j)
    for (Index i = 0; i < a.rows(); ++i)
      if (i != j) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

}  // namespace

DenseLU dense_lu_no_pivot(const DenseMatrix& a) {
  const Index n = a.rows();
  DenseMatrix u = a;
  DenseMatrix l = DenseMatrix::Identity(n, n);
  for (Index k = 0; k < n; ++k) {
    const double piv = u(k, k);
    if (!(std::abs(piv) >= kPivotFloor))
      throw ZeroPivotError(static_cast<std::size_t>(k + 1), piv);
    for (Index i = k + 1; i < n; ++i) {
      const double m = u(i, k) / piv;
      l(i, k) = m;
      for (Index j = k; j < n; ++j) u(i, j) -= m * u(k, j);
      u(i, k) = 0.0;
    }
  }
  return {l, u};
}

DenseMatrix dense_inverse(const DenseMatrix& a) {
  const Index n = a.rows();
  if (n != a.cols()) throw ShapeError("dense_inverse needs a square matrix");
  const DenseMatrix id = DenseMatrix::Identity(n, n);
  if (strictly_column_dominant(a)) {
    const DenseLU lu = dense_lu_no_pivot(a);
    const DenseMatrix y =
        lu.lower.triangularView<Eigen::UnitLower>().solve(id);
    return lu.upper.triangularView<Eigen::Upper>().solve(y);
  }
  const Eigen::PartialPivLU<DenseMatrix> lu(a);
  const double scale = a.cwiseAbs().maxCoeff();
  const double tiny =
      scale * static_cast<double>(n) * std::numeric_limits<double>::epsilon();
  if (!(lu.matrixLU().diagonal().cwiseAbs().minCoeff() > tiny))
    throw Error("matrix is singular to working precision");
  return lu.solve(id);
}

double determinant(const DenseMatrix& a) {
  const Index n = a.rows();
  if (n == 0) return 1.0;
  DenseMatrix m = a;
  double sign = 1.0;
  double prev = 1.0;
  for (Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0.0) {
      Index swap = -1;
      for (Index i = k + 1; i < n; ++i)
        if (m(i, k) != 0.0) { swap = i; break; }
      if (swap < 0) return 0.0;
      m.row(k).swap(m.row(swap));
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i) {
      for (Index j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      m(i, k) = 0.0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

SymmetricEigen symmetric_eigen(const DenseMatrix& a) {
  const Index n = a.rows();
  if (n != a.cols()) throw ShapeError("symmetric_eigen needs a square matrix");
  const double scale = a.norm();
  if (!((a - a.transpose()).cwiseAbs().maxCoeff() <=
        1e-12 * std::max(scale, 1.0)))
    throw HypothesisError("symmetric_eigen needs a symmetric matrix");

  DenseMatrix m = 0.5 * (a + a.transpose());
  DenseMatrix v = DenseMatrix::Identity(n, n);
  const double target = 1e-12 * scale;
  SymmetricEigen out;

  constexpr int kMaxSweeps = 100;
  while (off_diagonal_norm(m) > target && out.sweeps < kMaxSweeps) {
    ++out.sweeps;
    for (Index p = 0; p + 1 < n; ++p) {
      for (Index q = p + 1; q < n; ++q) {
        const double apq = m(p, q);
        if (apq == 0.0) continue;
        const double theta = (m(q, q) - m(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (Index k = 0; k < n; ++k) {
          const double mkp = m(k, p), mkq = m(k, q);
          m(k, p) = c * mkp - s * mkq;
          m(k, q) = s * mkp + c * mkq;
        }
        for (Index k = 0; k < n; ++k) {
          const double mpk = m(p, k), mqk = m(q, k);
          m(p, k) = c * mpk - s * mqk;
          m(q, k) = s * mpk + c * mqk;
        }
        for (Index k = 0; k < n; ++k) {
          const double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }
  if (off_diagonal_norm(m) > target)
    throw Error("Jacobi iteration did not converge");

  std::vector<Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Index{0});
  std::sort(order.begin(), order.end(),
            [&](Index x, Index y) { return m(x, x) < m(y, y); });
  out.values.reserve(order.size());
  out.vectors.resize(n, n);
  for (Index k = 0; k < n; ++k) {
    const Index src = order[static_cast<std::size_t>(k)];
    out.values.push_back(m(src, src));
    out.vectors.col(k) = v.col(src);
  }
  return out;
}

std::vector<double> symmetric_spectrum(const DenseMatrix& a) {
  return symmetric_eigen(a).values;
}

}  // namespace greendecay::oracle
