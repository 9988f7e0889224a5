#include "greendecay/structured_lu.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "greendecay/errors.hpp"

namespace greendecay {

namespace {

using Index = Eigen::Index;

Index idx(std::size_t v) { return static_cast<Index>(v); }

Eigen::RowVectorXd unit_row(Index size) {
  Eigen::RowVectorXd e = Eigen::RowVectorXd::Zero(size);
  e(0) = 1.0;
  return e;
}

// -f e_1^T + J for an r x r shift J.
Eigen::MatrixXd shifted_transition(const Eigen::VectorXd& f) {
  const Index r = f.size();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(r, r);
  a.col(0) = -f;
  for (Index c = 1; c < r; ++c) a(c - 1, c) = 1.0;
  return a;
}

// [-f, I] of size len x (len + 1).
Eigen::MatrixXd tail_transition(const Eigen::VectorXd& f) {
  const Index len = f.size();
  Eigen::MatrixXd a(len, len + 1);
  a.col(0) = -f;
  a.rightCols(len).setIdentity();
  return a;
}

}  // namespace

StructuredLU::StructuredLU(std::size_t n, std::size_t r,
                           std::vector<double> gamma,
                           std::vector<Eigen::RowVectorXd> x,
                           std::vector<Eigen::VectorXd> f,
                           Eigen::MatrixXd upper)
    : n_(n),
      r_(r),
      gamma_(std::move(gamma)),
      x_(std::move(x)),
      f_(std::move(f)),
      upper_(std::move(upper)) {}

Eigen::MatrixXd StructuredLU::lower() const {
  Eigen::MatrixXd l = Eigen::MatrixXd::Identity(idx(n_), idx(n_));
  for (std::size_t k = 1; k < n_; ++k) {
    const Eigen::VectorXd& fk = f(k);
    l.block(idx(k), idx(k - 1), fk.size(), 1) = fk;
  }
  return l;
}

Eigen::MatrixXd StructuredLU::elementary(std::size_t k) const {
  const Eigen::VectorXd& fk = f(k);
  const Index len = fk.size();
  Eigen::MatrixXd e = Eigen::MatrixXd::Identity(len + 1, len + 1);
  e.block(1, 0, len, 1) = -fk;
  return e;
}

Eigen::MatrixXd StructuredLU::trailing_elimination() const {
  const Index r = idx(r_);
  Eigen::MatrixXd t = Eigen::MatrixXd::Identity(r, r);
  const std::size_t first = n_ - r_ + 1;
  for (std::size_t k = first; k < n_; ++k) {
    Eigen::MatrixXd step = Eigen::MatrixXd::Identity(r, r);
    const Index off = idx(k - first);
    const Eigen::MatrixXd e = elementary(k);
    step.block(off, off, e.rows(), e.cols()) = e;
    t = step * t;
  }
  return t;
}

StructuredLU structured_lu(const BandedMatrix& a) {
  const std::size_t n = a.size();
  const std::size_t r = a.r_lower();
  const Eigen::MatrixXd& m = a.dense();

  std::vector<double> gamma(n);
  std::vector<Eigen::RowVectorXd> x(n - 1);
  std::vector<Eigen::VectorXd> f(n - 1);
  Eigen::MatrixXd upper = Eigen::MatrixXd::Zero(idx(n), idx(n));

  // Working rows: at step k they hold rows k .. k + r_k - 1 of the partially
  // eliminated matrix restricted to columns k .. N.
  Eigen::MatrixXd y = m.topRows(idx(r));

  auto check_pivot = [](std::size_t k, double g) {
    if (!(std::abs(g) >= kPivotFloor)) throw ZeroPivotError(k, g);
  };

  for (std::size_t k = 1; k < n; ++k) {
    const double g = y(0, 0);
    check_pivot(k, g);
    const Index rest = idx(n - k);
    Eigen::RowVectorXd xk = y.row(0).tail(rest);

    Eigen::VectorXd fk;
    Eigen::MatrixXd z;
    const Index rows = y.rows();
    if (k + r <= n) {
      // Bring in row k + r, untouched by earlier steps.
      const Index incoming = idx(k + r - 1);
      fk.resize(idx(r));
      fk.head(rows - 1) = y.col(0).tail(rows - 1);
      fk(idx(r) - 1) = m(incoming, idx(k - 1));
      z.resize(idx(r), rest);
      z.topRows(rows - 1) = y.bottomRightCorner(rows - 1, rest);
      z.row(idx(r) - 1) = m.row(incoming).tail(rest);
    } else {
      fk = y.col(0).tail(rows - 1);
      z = y.bottomRightCorner(rows - 1, rest);
    }
    fk /= g;
    y = z - fk * xk;

    gamma[k - 1] = g;
    upper(idx(k - 1), idx(k - 1)) = g;
    upper.row(idx(k - 1)).tail(rest) = xk;
    x[k - 1] = std::move(xk);
    f[k - 1] = std::move(fk);
  }
  check_pivot(n, y(0, 0));
  gamma[n - 1] = y(0, 0);
  upper(idx(n - 1), idx(n - 1)) = y(0, 0);

  return StructuredLU(n, r, std::move(gamma), std::move(x), std::move(f),
                      std::move(upper));
}

LInvGenerators linv_generators(const StructuredLU& slu) {
  const std::size_t n = slu.n(), r = slu.r();
  LInvGenerators g;
  g.n = n;
  g.r = r;
  for (std::size_t k = 1; k + r <= n; ++k) {
    g.p.push_back(unit_row(idx(r)));
    g.d.push_back(0.0);
    g.a.push_back(shifted_transition(slu.f(k)));
    Eigen::VectorXd e_r = Eigen::VectorXd::Zero(idx(r));
    e_r(idx(r) - 1) = 1.0;
    g.q.push_back(std::move(e_r));
  }
  for (std::size_t i = n - r + 1; i < n; ++i) {
    g.tail_p.push_back(unit_row(idx(n - i + 1)));
    g.tail_a.push_back(tail_transition(slu.f(i)));
  }
  g.trailing_block = slu.trailing_elimination();
  return g;
}

GreenGenerators inverse_green_generators(const StructuredLU& slu) {
  const std::size_t n = slu.n(), r = slu.r();
  const LInvGenerators lg = linv_generators(slu);

  // P_N = 1 / gamma_N, then the trailing steps grow P_k to r_k x r_k.
  Eigen::MatrixXd p_stack(1, 1);
  p_stack(0, 0) = 1.0 / slu.gamma(n);
  for (std::size_t k = n - 1; k + r > n; --k) {
    const std::size_t t = k - (n - r + 1);
    const Eigen::MatrixXd pa = p_stack * lg.tail_a[t];
    const Eigen::RowVectorXd pk =
        (lg.tail_p[t] - slu.x(k) * pa) / slu.gamma(k);
    Eigen::MatrixXd next(pa.rows() + 1, pa.cols());
    next << pk, pa;
    p_stack = std::move(next);
  }
  const Eigen::MatrixXd trailing = p_stack;

  std::vector<Eigen::MatrixXd> p(n - r + 1);
  std::vector<Eigen::MatrixXd> q(n - r + 1);
  std::vector<Eigen::MatrixXd> a(n - r);
  p.back() = trailing;
  q[0] = Eigen::MatrixXd::Identity(idx(r), idx(r));

  for (std::size_t k = n - r; k >= 1; --k) {
    const Eigen::MatrixXd& ak = lg.a[k - 1];
    a[k - 1] = ak;
    q[k] = lg.q[k - 1];

    // P_{k+1} a(k) without forming the product: column 0 is -P f_k, the rest
    // is P shifted right by one column.
    const Index rows = p_stack.rows();
    Eigen::MatrixXd pa(rows, idx(r));
    pa.col(0) = -(p_stack * slu.f(k));
    pa.rightCols(idx(r) - 1) = p_stack.leftCols(idx(r) - 1);

    const Eigen::RowVectorXd pk = (lg.p[k - 1] - slu.x(k) * pa) / slu.gamma(k);
    p[k - 1] = pk;
    Eigen::MatrixXd next(rows + 1, idx(r));
    next << pk, pa;
    p_stack = std::move(next);
  }

  return GreenGenerators(block_scheme(n, r), std::move(p), std::move(q),
                         std::move(a));
}

GreenGenerators inverse_green_generators(const BandedMatrix& a) {
  return inverse_green_generators(structured_lu(a));
}

Eigen::MatrixXd p_tail_cross_check(const StructuredLU& slu) {
  const Index r = idx(slu.r());
  const Index start = idx(slu.n() - slu.r());
  const Eigen::MatrixXd block = slu.upper().block(start, start, r, r);
  return block.triangularView<Eigen::Upper>().solve(slu.trailing_elimination());
}

Eigen::MatrixXd schur_complement(const BandedMatrix& a, std::size_t ell) {
  const std::size_t n = a.size(), r = a.r_lower();
  if (ell < 1 || ell + r > n)
    throw ShapeError("Schur step count must lie in 1 .. N - r (got " +
                     std::to_string(ell) + ")");
  Eigen::MatrixXd m = a.dense();
  for (std::size_t s = 0; s < ell; ++s) {
    const Index si = idx(s);
    const double piv = m(si, si);
    if (!(std::abs(piv) >= kPivotFloor)) throw ZeroPivotError(s + 1, piv);
    const std::size_t last = std::min(n - 1, s + r);
    for (std::size_t i = s + 1; i <= last; ++i) {
      const Index ii = idx(i);
      const double l = m(ii, si) / piv;
      const Index cols = idx(n - s - 1);
      m.row(ii).tail(cols) -= l * m.row(si).tail(cols);
      m(ii, si) = 0.0;
    }
  }
  const Index keep = idx(n - ell);
  return m.bottomRightCorner(keep, keep);
}

}  // namespace greendecay
