#pragma once

#include <filesystem>
#include <iosfwd>

#include "greendecay/banded_matrix.hpp"

namespace greendecay {

// Reader for the Matrix Market coordinate format as published by the
// SuiteSparse Matrix Collection. Supported headers:
//
//   %%MatrixMarket matrix coordinate real|integer general|symmetric|skew-symmetric
//
// Indices are 1-based. Bandwidths are inferred as the tightest band holding
// every stored nonzero, with r_lower floored at 1. Errors are ParseError with
// the offending line number, or ShapeError for non-square input.

BandedMatrix read_matrix_market(std::istream& in);
BandedMatrix read_matrix_market(const std::filesystem::path& path);

/// Writes the nonzeros of `a` as `coordinate real general`.
void write_matrix_market(std::ostream& out, const BandedMatrix& a);

}  // namespace greendecay
