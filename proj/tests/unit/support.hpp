#pragma once

#include <cstddef>

#include <Eigen/Dense>

#include "greendecay/banded_matrix.hpp"

namespace greendecay::testing {

inline BandedMatrix tridiag(std::size_t n, double sub, double diag,
                            double super) {
  return make_banded(n, 1, 1, [=](std::size_t i, std::size_t j) {
    return i == j ? diag : (i > j ? sub : super);
  });
}

inline BandedMatrix example_1a() {
  return make_banded(50, 3, 3, [](std::size_t i, std::size_t j) {
    return i == j ? 6.25 : 0.25;
  });
}

inline BandedMatrix two_by_two() {
  Eigen::MatrixXd m(2, 2);
  m << 2, 0, 1, 2;
  return BandedMatrix::from_dense(m, 1, 0);
}

inline BandedMatrix scaled_identity(std::size_t n, double d) {
  return make_banded(n, 1, 1, [=](std::size_t i, std::size_t j) {
    return i == j ? d : 0.0;
  });
}

}  // namespace greendecay::testing
