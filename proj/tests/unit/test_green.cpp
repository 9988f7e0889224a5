#include <doctest.h>

#include <random>
#include <stdexcept>

#include "greendecay/ensemble.hpp"
#include "greendecay/errors.hpp"
#include "greendecay/green.hpp"
#include "greendecay/oracle.hpp"
#include "greendecay/structured_lu.hpp"
#include "support.hpp"

using namespace greendecay;
using greendecay::testing::example_1a;
using greendecay::testing::scaled_identity;
using greendecay::testing::two_by_two;

namespace {

// Generators with a(k) = diag(k + 1) so that products are easy to predict.
GreenGenerators labelled(std::size_t n, std::size_t r) {
  const BlockScheme s = block_scheme(n, r);
  const auto R = static_cast<Eigen::Index>(r);
  std::vector<Eigen::MatrixXd> p, q, a;
  for (std::size_t i = 1; i <= s.last(); ++i)
    p.push_back(Eigen::MatrixXd::Constant(static_cast<Eigen::Index>(s.row_sizes[i]), R,
                                          static_cast<double>(i)));
  q.push_back(Eigen::MatrixXd::Identity(R, R));
  for (std::size_t j = 1; j < s.last(); ++j)
    q.push_back(Eigen::MatrixXd::Constant(R, 1, 1.0 / static_cast<double>(j)));
  for (std::size_t k = 1; k < s.last(); ++k)
    a.push_back(static_cast<double>(k + 1) * Eigen::MatrixXd::Identity(R, R) +
                Eigen::MatrixXd::Constant(R, R, 0.1 * static_cast<double>(k)));
  return GreenGenerators(s, p, q, a);
}

}  // namespace

TEST_CASE("block_scheme sizes") {
  const BlockScheme s1 = block_scheme(5, 1);
  CHECK(s1.row_sizes == std::vector<std::size_t>{0, 1, 1, 1, 1, 1});
  CHECK(s1.col_sizes == std::vector<std::size_t>{1, 1, 1, 1, 1, 0});

  const BlockScheme s2 = block_scheme(7, 3);
  CHECK(s2.row_sizes == std::vector<std::size_t>{0, 1, 1, 1, 1, 3});
  CHECK(s2.col_sizes == std::vector<std::size_t>{3, 1, 1, 1, 1, 0});

  for (std::size_t r : {1, 2, 5}) {
    const BlockScheme s = block_scheme(r + 4, r);
    CHECK(s.row_sizes.size() == 6);
    CHECK(s.col_sizes.size() == 6);
    CHECK(s.last() == 5);
  }
}

TEST_CASE("block_scheme rejects N <= r and r = 0") {
  CHECK_THROWS_AS(block_scheme(3, 3), ShapeError);
  CHECK_THROWS_AS(block_scheme(3, 0), ShapeError);
}

TEST_CASE("generator shapes are validated") {
  const BlockScheme s = block_scheme(4, 1);
  std::vector<Eigen::MatrixXd> p(4, Eigen::MatrixXd::Ones(1, 1));
  std::vector<Eigen::MatrixXd> q(4, Eigen::MatrixXd::Ones(1, 1));
  std::vector<Eigen::MatrixXd> a(3, Eigen::MatrixXd::Ones(1, 1));
  CHECK_NOTHROW(GreenGenerators(s, p, q, a));
  auto bad_q0 = q;
  bad_q0[0](0, 0) = 2.0;
  CHECK_THROWS_AS(GreenGenerators(s, p, bad_q0, a), ShapeError);
  auto short_a = a;
  short_a.pop_back();
  CHECK_THROWS_AS(GreenGenerators(s, p, q, short_a), ShapeError);
  auto wide_p = p;
  wide_p[1] = Eigen::MatrixXd::Ones(1, 2);
  CHECK_THROWS_AS(GreenGenerators(s, wide_p, q, a), ShapeError);
}

TEST_CASE("transition products") {
  const GreenGenerators g = labelled(7, 2);
  const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(2, 2);
  CHECK(transition_product(g, 4, 3) == I);
  CHECK(transition_product(g, 3, 3) == I);
  CHECK(transition_product(g, 3, 0) == g.a(2) * g.a(1));
  CHECK(transition_product(g, 5, 1) == g.a(4) * g.a(3) * g.a(2));
  CHECK_THROWS_AS(transition_product(g, 7, 0), std::out_of_range);
}

TEST_CASE("transition product of zero generators vanishes") {
  const BlockScheme s = block_scheme(6, 2);
  std::vector<Eigen::MatrixXd> p, q, a;
  for (std::size_t i = 1; i <= s.last(); ++i)
    p.push_back(Eigen::MatrixXd::Ones(static_cast<Eigen::Index>(s.row_sizes[i]), 2));
  q.push_back(Eigen::MatrixXd::Identity(2, 2));
  for (std::size_t j = 1; j < s.last(); ++j) q.push_back(Eigen::MatrixXd::Ones(2, 1));
  for (std::size_t k = 1; k < s.last(); ++k) a.push_back(Eigen::MatrixXd::Zero(2, 2));
  const GreenGenerators g(s, p, q, a);
  for (std::size_t i = 2; i <= s.last(); ++i)
    for (std::size_t j = 0; j + 2 <= i; ++j)
      CHECK(transition_product(g, i, j).isZero(0.0));
}

TEST_CASE("semigroup property") {
  // Splitting a(i-1) ... a(j+1) after a(k) gives products over (i, k-1) and
  // (k, j).
  const GreenGenerators g = labelled(9, 3);
  for (std::size_t i = 2; i <= g.scheme().last(); ++i)
    for (std::size_t j = 0; j + 1 < i; ++j)
      for (std::size_t k = j + 1; k < i; ++k) {
        const Eigen::MatrixXd whole = transition_product(g, i, j);
        const Eigen::MatrixXd split = transition_product(g, i, k - 1) * transition_product(g, k, j);
        CHECK((split - whole).cwiseAbs().maxCoeff() <= 1e-14 * whole.cwiseAbs().maxCoeff());
        CHECK(whole.isApprox(transition_product(g, i, k) * g.a(k) * transition_product(g, k, j)));
      }
}

TEST_CASE("green_block_entry follows the display") {
  const GreenGenerators g = labelled(8, 2);
  CHECK(green_block_entry(g, 2, 1) == g.p(2) * g.q(1));
  CHECK(green_block_entry(g, 2, 0) == g.p(2) * g.a(1));
  CHECK(green_block_entry(g, 3, 0).isApprox(g.p(3) * g.a(2) * g.a(1), 1e-15));
  const std::size_t last = g.scheme().last();
  CHECK(green_block_entry(g, last, last - 1) == g.p(last) * g.q(last - 1));
  CHECK(green_block_entry(g, last, 0).rows() == 2);
  CHECK_THROWS_AS(green_block_entry(g, 2, 2), std::out_of_range);
  CHECK_THROWS_AS(green_block_entry(g, last + 1, 0), std::out_of_range);
}

TEST_CASE("2x2 example") {
  const GreenGenerators g = inverse_green_generators(two_by_two());
  CHECK(green_block_entry(g, 2, 0)(0, 0) == -0.25);
  CHECK(green_scalar_entry(g, 2, 1) == -0.25);
  CHECK(green_scalar_entry(g, 1, 1) == 0.5);
  CHECK(green_scalar_entry(g, 2, 2) == 0.5);
  // (1,2) sits in a diagonal block, which the generators do not describe.
  CHECK_FALSE(represented(g, 1, 2));
  CHECK_THROWS_AS(green_scalar_entry(g, 1, 2), std::out_of_range);
  const LowerReconstruction rec = reconstruct_lower(g);
  CHECK(rec.mask(0, 0));
  CHECK(rec.mask(1, 0));
  CHECK(rec.mask(1, 1));
  CHECK_FALSE(rec.mask(0, 1));
  Eigen::MatrixXd expected(2, 2);
  expected << 0.5, 0, -0.25, 0.5;
  CHECK(rec.values == expected);
}

TEST_CASE("scaled identity") {
  const GreenGenerators g = inverse_green_generators(scaled_identity(2, 2.0));
  CHECK(green_scalar_entry(g, 1, 1) == 0.5);
  const LowerReconstruction rec = reconstruct_lower(inverse_green_generators(scaled_identity(6, 4.0)));
  CHECK(rec.values.isApprox(0.25 * Eigen::MatrixXd::Identity(6, 6)));
}

TEST_CASE("represented region is j - i <= r - 1") {
  const GreenGenerators g = inverse_green_generators(example_1a());
  CHECK(represented(g, 1, 3));
  CHECK_FALSE(represented(g, 1, 4));
  CHECK(represented(g, 50, 1));
  CHECK(represented(g, 48, 50));
  CHECK_THROWS_AS(green_scalar_entry(g, 1, 4), std::out_of_range);
  CHECK_THROWS_AS(green_scalar_entry(g, 0, 1), std::out_of_range);
  CHECK_THROWS_AS(green_scalar_entry(g, 51, 1), std::out_of_range);
  const LowerReconstruction rec = reconstruct_lower(g);
  for (Eigen::Index i = 0; i < 50; ++i)
    for (Eigen::Index j = 0; j < 50; ++j) {
      CHECK(rec.mask(i, j) == (j - i <= 2));
      if (!rec.mask(i, j)) CHECK(rec.values(i, j) == 0.0);
    }
}

TEST_CASE("example 1a reconstruction matches the dense inverse") {
  const BandedMatrix a = example_1a();
  const Eigen::MatrixXd inv = oracle::dense_inverse(a.dense());
  const GreenGenerators g = inverse_green_generators(a);
  CHECK(green_scalar_entry(g, 1, 1) == doctest::Approx(0.16071901519080314).epsilon(1e-12));
  const LowerReconstruction rec = reconstruct_lower(g);
  const Eigen::MatrixXd diff =
      rec.mask.select(rec.values - inv, Eigen::MatrixXd::Zero(50, 50));
  CHECK(diff.cwiseAbs().maxCoeff() <= 1e-10);
  CHECK(green_scalar_entry(g, 37, 5) == doctest::Approx(inv(36, 4)).epsilon(1e-12));
}

TEST_CASE("generator norms for dominant matrices") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 40; ++t) {
    const BandedMatrix a = random_dominant_banded(rng);
    const GreenGenerators g = inverse_green_generators(a);
    const std::size_t r = a.r_lower(), last = g.scheme().last();
    const double mu = dominance_mu(a).mu;
    const double gamma = std::pow(mu, 1.0 / static_cast<double>(r));
    for (std::size_t k = 1; k < last; ++k)
      CHECK(g.a(k).cwiseAbs().colwise().sum().maxCoeff() <= 1.0 + 1e-12);
    for (std::size_t i = r + 1; i <= last; i += 3)
      for (std::size_t j = 0; j + r <= i; j += 2) {
        const double bound = std::pow(gamma, static_cast<double>(i - j - r));
        CHECK(transition_product(g, i, j).cwiseAbs().colwise().sum().maxCoeff() <=
              bound * (1.0 + 1e-12) + 1e-300);
      }
  }
}
