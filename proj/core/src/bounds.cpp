#include "greendecay/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "greendecay/errors.hpp"

namespace greendecay {

namespace {

using Index = Eigen::Index;

constexpr double kInf = std::numeric_limits<double>::infinity();

std::size_t distance(std::size_t i, std::size_t j) {
  return i > j ? i - j : j - i;
}

DominanceReport require_dominance(const BandedMatrix& a,
                                  std::string_view who) {
  DominanceReport rep = dominance_mu(a);
  if (!rep.satisfied) {
    std::ostringstream os;
    os << who << " needs column dominance with mu < 1";
    if (rep.zero_diagonal)
      os << "; zero diagonal at index " << *rep.zero_diagonal;
    else
      os << "; smallest admissible mu is " << rep.mu;
    throw DominanceError(rep.mu, os.str());
  }
  return rep;
}

void require_interval(double a, double b, std::string_view who) {
  if (!(a > 0.0) || !(a <= b) || !std::isfinite(b)) {
    std::ostringstream os;
    os << who << " needs 0 < a <= b (got a=" << a << ", b=" << b << ")";
    throw HypothesisError(os.str());
  }
}

}  // namespace

std::string_view to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::lu: return "LU";
    case BoundKind::qr: return "QR";
    case BoundKind::dms_spd: return "DMS-SPD";
    case BoundKind::dms_indefinite: return "DMS-indefinite";
    case BoundKind::frommer: return "Frommer";
    case BoundKind::chui_hasson: return "ChuiHasson";
    case BoundKind::varah: return "Varah";
  }
  return "?";
}

bool DecayBound::applies(std::size_t i, std::size_t j) const noexcept {
  switch (region) {
    case BoundRegion::lower: return i >= j;
    case BoundRegion::all: return true;
    case BoundRegion::off_band: return distance(i, j) >= r;
  }
  return false;
}

std::optional<double> eval_bound(const DecayBound& b, std::size_t i,
                                 std::size_t j) {
  if (!b.applies(i, j)) return std::nullopt;
  const auto d = static_cast<double>(distance(i, j));
  switch (b.kind) {
    case BoundKind::varah:
      return *b.constant;
    case BoundKind::frommer:
      return *b.constant * std::pow(*b.q1, d / static_cast<double>(b.r) - 1.0);
    case BoundKind::chui_hasson:
      return std::pow(b.gamma, d);
    default:
      return *b.constant * std::pow(b.gamma, d);
  }
}

DecayBound lu_bound(const BandedMatrix& a) {
  const DominanceReport rep = require_dominance(a, "LU bound");
  const double mu = rep.mu;
  const double r = static_cast<double>(a.r_lower());
  DecayBound b;
  b.kind = BoundKind::lu;
  b.r = a.r_lower();
  b.region = BoundRegion::lower;
  b.gamma = std::pow(mu, 1.0 / r);
  b.constant = (1.0 + mu * mu) / ((1.0 - mu) * (1.0 - mu * mu) * rep.min_diag);
  return b;
}

double varah_bound(const BandedMatrix& a) {
  const DominanceReport rep = require_dominance(a, "Varah bound");
  return 1.0 / ((1.0 - rep.mu) * rep.min_diag);
}

DecayBound varah_decay_bound(const BandedMatrix& a) {
  DecayBound b;
  b.kind = BoundKind::varah;
  b.constant = varah_bound(a);
  b.r = a.r_lower();
  b.region = BoundRegion::all;
  return b;
}

QRHypothesisReport qr_constants(double k, std::size_t r) {
  QRHypothesisReport rep;
  const double rr = static_cast<double>(r);
  rep.k = k;
  rep.r = r;
  rep.delta = std::isinf(k) ? 0.0 : 2.0 / k;
  rep.mu = rep.delta / std::sqrt(1.0 + rep.delta * rep.delta);
  rep.m = 2.0 * rep.mu + 1.0;
  rep.gamma = std::pow(rep.mu * rr * std::sqrt(rr), 1.0 / rr);
  return rep;
}

QRBound qr_bound(const BandedMatrix& a, std::optional<double> c0,
                 std::optional<double> k) {
  const Eigen::MatrixXd& m = a.dense();
  const Index n = m.rows();
  const std::size_t r = a.r_lower();
  const double rr = static_cast<double>(r);

  // Energy of the upper block strictly north-east of each diagonal entry.
  double energy_max = 0.0;
  for (Index kk = 0; kk + static_cast<Index>(r) < n; ++kk) {
    double s = 0.0;
    for (Index i = 0; i < kk; ++i)
      s += m.row(i).tail(n - kk - 1).squaredNorm();
    energy_max = std::max(energy_max, s);
  }

  // Largest K with |A(k,k)| >= K * colnorm_k + 1 for every column.
  double k_max = kInf;
  bool diag_ok = true;
  for (Index kk = 0; kk < n; ++kk) {
    double s = m.col(kk).head(kk).squaredNorm();
    const Index below =
        std::min<Index>(static_cast<Index>(r), n - kk - 1);
    s += m.col(kk).segment(kk + 1, below).squaredNorm();
    const double slack = std::abs(m(kk, kk)) - 1.0;
    if (slack < 0.0) diag_ok = false;
    if (s > 0.0) k_max = std::min(k_max, slack / std::sqrt(s));
  }

  const double c0_used = c0.value_or(energy_max);
  const double k_used = k.value_or(k_max);

  QRHypothesisReport rep = qr_constants(k_used, r);
  rep.c0 = c0_used;
  rep.energy_ok = energy_max <= c0_used;
  rep.dominance_ok = diag_ok && k_used > 0.0 && k_used <= k_max;
  rep.k_threshold = std::max(
      4.0 * (3.0 + 2.0 * c0_used * rr * std::sqrt(rr)),
      2.0 * std::sqrt(rr * rr * rr *
                          std::pow((std::sqrt(3.0) + 1.0) / 2.0, 2.0 * rr) -
                      1.0));
  rep.k_threshold_met = k_used >= rep.k_threshold;

  if (!rep.energy_ok) {
    std::ostringstream os;
    os << "QR bound: energy sum " << energy_max << " exceeds C0 = " << c0_used;
    throw HypothesisError(os.str());
  }
  if (!rep.dominance_ok) {
    std::ostringstream os;
    os << "QR bound: dominance constant K = " << k_used
       << " not admissible (largest admissible " << k_max << ")";
    throw HypothesisError(os.str());
  }
  if (!(rep.gamma < 1.0)) {
    std::ostringstream os;
    os << "QR bound: rate gamma = " << rep.gamma << " is not below 1";
    throw HypothesisError(os.str());
  }

  DecayBound b;
  b.kind = BoundKind::qr;
  b.constant = rep.m;
  b.gamma = rep.gamma;
  b.r = r;
  b.region = BoundRegion::lower;
  return {rep, b};
}

DecayBound dms_bound(double a, double b, std::size_t r, bool definite,
                     std::optional<double> constant) {
  require_interval(a, b, "DMS bound");
  const double kappa = b / a;
  const double rr = static_cast<double>(r);
  DecayBound out;
  out.r = r;
  out.region = BoundRegion::all;
  out.constant_advisory = true;
  if (definite) {
    const double s = std::sqrt(kappa);
    out.kind = BoundKind::dms_spd;
    out.gamma = std::pow((s - 1.0) / (s + 1.0), 1.0 / rr);
    out.constant =
        constant.value_or(std::max(1.0 / a, (1.0 + s) * (1.0 + s) / (2.0 * b)));
  } else {
    out.kind = BoundKind::dms_indefinite;
    out.gamma = std::pow((kappa - 1.0) / (kappa + 1.0), 1.0 / (2.0 * rr));
    if (constant) {
      out.constant = constant;
    } else {
      const double normal_c = std::max(
          1.0 / (a * a), (1.0 + kappa) * (1.0 + kappa) / (2.0 * b * b));
      // kappa == 1 gives gamma == 0; drop the band shift there.
      const double shift = out.gamma > 0.0 ? std::pow(out.gamma, -rr) : 1.0;
      out.constant = std::sqrt(2.0 * rr + 1.0) * b * normal_c * shift;
    }
  }
  return out;
}

DecayBound frommer_bound(double lambda1, double lambda_nm1, std::size_t r) {
  require_interval(lambda1, lambda_nm1, "Frommer bound");
  const double s = std::sqrt(lambda_nm1 / lambda1);
  DecayBound out;
  out.kind = BoundKind::frommer;
  out.r = r;
  out.region = BoundRegion::off_band;
  out.constant = 2.0 / lambda1;
  out.q1 = (s - 1.0) / (s + 1.0);
  out.gamma = std::pow(*out.q1, 1.0 / static_cast<double>(r));
  return out;
}

DecayBound chui_hasson_rate(double a, double b, std::size_t r) {
  require_interval(a, b, "Chui-Hasson rate");
  DecayBound out;
  out.kind = BoundKind::chui_hasson;
  out.r = r;
  out.region = BoundRegion::all;
  out.gamma = std::pow((b - a) / (b + a), 1.0 / (2.0 * static_cast<double>(r)));
  return out;
}

}  // namespace greendecay
