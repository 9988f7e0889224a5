#pragma once

#include <cstddef>
#include <random>

#include "greendecay/banded_matrix.hpp"

namespace greendecay {

/// Parameters for random column-dominant banded test matrices.
struct EnsembleOptions {
  std::size_t max_n = 200;
  std::size_t max_r = 8;
  double min_mu = 0.05;
  double max_mu = 0.95;
  /// Probability that a matrix is one-sided (full upper triangle).
  double one_sided_fraction = 0.5;
  /// Probability that an in-band off-diagonal entry is zeroed.
  double sparsity = 0.2;
};

/// Draws a lower band matrix of random order r <= max_r and size
/// r < N <= max_n with entries of mixed sign, then sets every diagonal entry
/// to +-(off-column sum) / mu_k with mu_k <= mu_target, so the dominance
/// condition holds with mu <= mu_target < 1.
BandedMatrix random_dominant_banded(std::mt19937_64& rng,
                                    const EnsembleOptions& opts = {});

/// Same construction with prescribed N, r_lower, r_upper and target mu.
BandedMatrix random_dominant_banded(std::mt19937_64& rng, std::size_t n,
                                    std::size_t r_lower, std::size_t r_upper,
                                    double mu_target, double sparsity = 0.2);

}  // namespace greendecay
