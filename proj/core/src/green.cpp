#include "greendecay/green.hpp"

#include <stdexcept>
#include <string>

#include "greendecay/errors.hpp"

namespace greendecay {

namespace {

using Index = Eigen::Index;

Index idx(std::size_t v) { return static_cast<Index>(v); }

// Block row holding scalar row i, and the row offset inside that block.
std::pair<std::size_t, std::size_t> block_row(const BlockScheme& s,
                                              std::size_t i) {
  if (i <= s.n - s.r) return {i, 0};
  return {s.last(), i - (s.n - s.r + 1)};
}

// Block column holding scalar column j, and the column offset inside it.
std::pair<std::size_t, std::size_t> block_col(const BlockScheme& s,
                                              std::size_t j) {
  if (j <= s.r) return {0, j - 1};
  return {j - s.r, 0};
}

}  // namespace

BlockScheme block_scheme(std::size_t n, std::size_t r) {
  if (r < 1 || n <= r)
    throw ShapeError("Green scheme needs N > r >= 1 (N=" + std::to_string(n) +
                     ", r=" + std::to_string(r) + ")");
  BlockScheme s;
  s.n = n;
  s.r = r;
  const std::size_t blocks = n - r + 2;
  s.row_sizes.assign(blocks, 1);
  s.col_sizes.assign(blocks, 1);
  s.row_sizes.front() = 0;
  s.row_sizes.back() = r;
  s.col_sizes.front() = r;
  s.col_sizes.back() = 0;
  return s;
}

GreenGenerators::GreenGenerators(BlockScheme scheme,
                                 std::vector<Eigen::MatrixXd> p,
                                 std::vector<Eigen::MatrixXd> q,
                                 std::vector<Eigen::MatrixXd> a)
    : scheme_(std::move(scheme)),
      p_(std::move(p)),
      q_(std::move(q)),
      a_(std::move(a)) {
  const std::size_t n = scheme_.n, r = scheme_.r, last = scheme_.last();
  if (p_.size() != last || q_.size() != n - r + 1 || a_.size() != n - r)
    throw ShapeError("generator counts do not match the block scheme");
  for (std::size_t i = 1; i <= last; ++i)
    if (this->p(i).rows() != idx(scheme_.row_sizes[i]) || this->p(i).cols() != idx(r))
      throw ShapeError("p(" + std::to_string(i) + ") has wrong shape");
  for (std::size_t j = 0; j < last; ++j)
    if (this->q(j).rows() != idx(r) || this->q(j).cols() != idx(scheme_.col_sizes[j]))
      throw ShapeError("q(" + std::to_string(j) + ") has wrong shape");
  if (!q_.front().isIdentity(0.0)) throw ShapeError("q(0) must be I_r");
  for (std::size_t k = 1; k < last; ++k)
    if (this->a(k).rows() != idx(r) || this->a(k).cols() != idx(r))
      throw ShapeError("a(" + std::to_string(k) + ") has wrong shape");
}

Eigen::MatrixXd transition_product(const GreenGenerators& g, std::size_t i,
                                   std::size_t j) {
  const Index r = idx(g.r());
  Eigen::MatrixXd prod = Eigen::MatrixXd::Identity(r, r);
  if (i > g.scheme().last())
    throw std::out_of_range("block row out of range");
  if (i == 0) return prod;
  for (std::size_t k = i - 1; k > j && k >= 1; --k) prod = prod * g.a(k);
  return prod;
}

Eigen::MatrixXd green_block_entry(const GreenGenerators& g, std::size_t i,
                                  std::size_t j) {
  if (!(j < i && i <= g.scheme().last()))
    throw std::out_of_range("block (" + std::to_string(i) + ", " +
                            std::to_string(j) +
                            ") is outside the strictly lower block part");
  return g.p(i) * transition_product(g, i, j) * g.q(j);
}

bool represented(const GreenGenerators& g, std::size_t i, std::size_t j) {
  const std::size_t n = g.n();
  if (i < 1 || j < 1 || i > n || j > n) return false;
  return block_col(g.scheme(), j).first < block_row(g.scheme(), i).first;
}

double green_scalar_entry(const GreenGenerators& g, std::size_t i,
                          std::size_t j) {
  if (!represented(g, i, j))
    throw std::out_of_range("scalar entry (" + std::to_string(i) + ", " +
                            std::to_string(j) +
                            ") is not described by lower Green generators");
  const auto [bi, row] = block_row(g.scheme(), i);
  const auto [bj, col] = block_col(g.scheme(), j);
  const Eigen::MatrixXd block = green_block_entry(g, bi, bj);
  return block(idx(row), idx(col));
}

LowerReconstruction reconstruct_lower(const GreenGenerators& g) {
  const BlockScheme& s = g.scheme();
  const Index n = idx(s.n);
  const std::size_t r = s.r;
  const std::size_t last = s.last();
  LowerReconstruction out{Eigen::MatrixXd::Zero(n, n),
                          decltype(LowerReconstruction::mask)::Constant(n, n, false)};

  // Sweep each block column downwards, carrying a(i-1)...a(j+1) q(j).
  for (std::size_t bj = 0; bj < last; ++bj) {
    Eigen::MatrixXd carry = g.q(bj);
    const Index c0 = bj == 0 ? 0 : idx(bj + r - 1);
    for (std::size_t bi = bj + 1; bi <= last; ++bi) {
      if (bi > bj + 1) carry = g.a(bi - 1) * carry;
      const Eigen::MatrixXd block = g.p(bi) * carry;
      const Index r0 = idx(bi - 1);
      out.values.block(r0, c0, block.rows(), block.cols()) = block;
      out.mask.block(r0, c0, block.rows(), block.cols()).setConstant(true);
    }
  }
  return out;
}

}  // namespace greendecay
