#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "greendecay/banded_matrix.hpp"

namespace greendecay {

enum class BoundKind {
  lu,
  qr,
  dms_spd,
  dms_indefinite,
  frommer,
  chui_hasson,
  varah,
};

std::string_view to_string(BoundKind kind);

/// Where a bound family makes a claim.
enum class BoundRegion {
  lower,     ///< i >= j
  all,       ///< every (i, j)
  off_band,  ///< |i - j| >= r
};

/// Exponential envelope |A^{-1}(i,j)| <= M gamma^{d} with a family-specific
/// exponent d. Chui-Hasson carries a rate only (no constant), Varah carries a
/// constant only (gamma unused, reported as 0).
struct DecayBound {
  BoundKind kind = BoundKind::lu;
  std::optional<double> constant;
  double gamma = 0.0;
  std::size_t r = 1;
  BoundRegion region = BoundRegion::lower;
  /// Frommer's q_1 (the per-r rate); other families leave it unset.
  std::optional<double> q1;
  /// True when the constant is not the literature's own (DMS).
  bool constant_advisory = false;

  bool applies(std::size_t i, std::size_t j) const noexcept;
};

/// Bound value at 1-based (i, j); nullopt outside the family's region.
/// Chui-Hasson returns gamma^{|i-j|} (constant-free).
std::optional<double> eval_bound(const DecayBound& b, std::size_t i,
                                 std::size_t j);

/// gamma = mu^{1/r}, M = (1 + mu^2) / ((1 - mu)(1 - mu^2) min|A(i,i)|),
/// valid for i >= j. Throws DominanceError when the dominance condition
/// fails (mu >= 1 or a zero diagonal).
DecayBound lu_bound(const BandedMatrix& a);

/// 1 / ((1 - mu) min|A(i,i)|), an upper bound on ||A^{-1}||_1 and so on every
/// entry. Throws DominanceError as lu_bound does.
double varah_bound(const BandedMatrix& a);
DecayBound varah_decay_bound(const BandedMatrix& a);

/// Constants and hypothesis checks behind the QR-factorization bound.
struct QRHypothesisReport {
  double c0 = 0.0;     ///< max_k sum_{i<k} sum_{j>k} |A(i,j)|^2
  double k = 0.0;      ///< dominance constant
  double delta = 0.0;  ///< 2 / K
  double mu = 0.0;     ///< delta / sqrt(1 + delta^2)
  double m = 0.0;      ///< 2 mu + 1
  double gamma = 0.0;  ///< (mu r sqrt(r))^{1/r}
  std::size_t r = 1;
  bool energy_ok = false;     ///< every energy sum <= c0
  bool dominance_ok = false;  ///< every column satisfies the K inequality
  /// K >= max{4(3 + 2 C0 r sqrt r), 2 sqrt(r^3 ((sqrt3+1)/2)^{2r} - 1)}.
  bool k_threshold_met = false;
  /// The 2/x_0 term of the threshold is never evaluated.
  bool x0_term_unchecked = true;
  double k_threshold = 0.0;
};

/// Pure formula evaluation for a given K and r (K may be +inf).
QRHypothesisReport qr_constants(double k, std::size_t r);

struct QRBound {
  QRHypothesisReport report;
  DecayBound bound;
};

/// When c0 / k are not supplied they are computed from A: c0 as the largest
/// energy sum and K as the largest constant satisfying every column
/// inequality. Throws HypothesisError when the energy or dominance
/// conditions fail, or when gamma >= 1.
QRBound qr_bound(const BandedMatrix& a, std::optional<double> c0 = {},
                 std::optional<double> k = {});

/// Demko-Moss-Smith rates for a spectrum in [a, b] (definite) or
/// [-b, -a] U [a, b] (indefinite), kappa = b / a:
///   definite:   lambda_0 = ((sqrt(kappa) - 1) / (sqrt(kappa) + 1))^{1/r}
///   indefinite: lambda_1 = ((kappa - 1) / (kappa + 1))^{1/(2r)}
/// The rate is authoritative; the constant is advisory. Defaults:
///   definite:   max(1/a, (1 + sqrt(kappa))^2 / (2b))
///   indefinite: the definite constant for A A^T (spectrum [a^2, b^2],
///               bandwidth 2r), times sqrt(2r + 1) b lambda_1^{-r}, which
///               follows from A^{-1} = A^T (A A^T)^{-1}.
/// Throws HypothesisError unless 0 < a <= b.
DecayBound dms_bound(double a, double b, std::size_t r, bool definite,
                     std::optional<double> constant = {});

/// C q1^{|i-j|/r - 1} for |i-j| >= r with C = 2 / lambda_1,
/// q1 = (sqrt(ke) - 1) / (sqrt(ke) + 1), ke = lambda_{N-1} / lambda_1.
/// Throws HypothesisError unless 0 < lambda_1 <= lambda_{N-1}.
DecayBound frommer_bound(double lambda1, double lambda_nm1, std::size_t r);

/// Rate ((b - a) / (b + a))^{1/(2r)} only. Throws HypothesisError unless
/// 0 < a <= b.
DecayBound chui_hasson_rate(double a, double b, std::size_t r);

}  // namespace greendecay
