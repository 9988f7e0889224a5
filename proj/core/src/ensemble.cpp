#include "greendecay/ensemble.hpp"

#include <algorithm>
#include <cmath>

namespace greendecay {

BandedMatrix random_dominant_banded(std::mt19937_64& rng, std::size_t n,
                                    std::size_t r_lower, std::size_t r_upper,
                                    double mu_target, double sparsity) {
  std::uniform_real_distribution<double> entry(-1.0, 1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::bernoulli_distribution drop(sparsity);
  std::bernoulli_distribution flip(0.5);

  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n),
                                            static_cast<Eigen::Index>(n));
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t i_lo = j > r_upper ? j - r_upper : 0;
    const std::size_t i_hi = std::min(n - 1, j + r_lower);
    double off = 0.0;
    for (std::size_t i = i_lo; i <= i_hi; ++i) {
      if (i == j || drop(rng)) continue;
      const double v = entry(rng);
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = v;
      off += std::abs(v);
    }
    // Columns with no off-diagonal mass still get a nonzero diagonal.
    const double ratio = mu_target * (0.5 + 0.5 * unit(rng));
    double d = off > 0.0 ? off / ratio : 0.5 + unit(rng);
    if (flip(rng)) d = -d;
    m(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(j)) = d;
  }
  return BandedMatrix::from_dense(m, r_lower, r_upper);
}

BandedMatrix random_dominant_banded(std::mt19937_64& rng,
                                    const EnsembleOptions& opts) {
  std::uniform_int_distribution<std::size_t> pick_r(1, opts.max_r);
  const std::size_t r = pick_r(rng);
  std::uniform_int_distribution<std::size_t> pick_n(r + 1,
                                                    std::max(opts.max_n, r + 1));
  const std::size_t n = pick_n(rng);
  std::uniform_real_distribution<double> pick_mu(opts.min_mu, opts.max_mu);
  const double mu = pick_mu(rng);
  std::bernoulli_distribution one_sided(opts.one_sided_fraction);
  const std::size_t r_upper =
      one_sided(rng) ? n - 1
                     : std::uniform_int_distribution<std::size_t>(0, r)(rng);
  return random_dominant_banded(rng, n, r, r_upper, mu,
                                opts.sparsity);
}

}  // namespace greendecay
