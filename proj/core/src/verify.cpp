#include "greendecay/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "greendecay/bounds.hpp"
#include "greendecay/ensemble.hpp"
#include "greendecay/green.hpp"
#include "greendecay/oracle.hpp"
#include "greendecay/structured_lu.hpp"

namespace greendecay {

namespace {

using Index = Eigen::Index;

// Tracks the worst observed ratio of (measured / allowed); <= 1 passes.
struct Tally {
  std::string name;
  double worst = 0.0;
  std::size_t failures = 0;

  void observe(double measured, double allowed) {
    const double ratio = allowed > 0.0 ? measured / allowed
                                       : (measured > 0.0 ? INFINITY : 0.0);
    worst = std::max(worst, ratio);
    if (ratio > 1.0) ++failures;
  }

  CheckResult result() const {
    std::ostringstream os;
    os << "worst measured/allowed = " << worst << ", violations = " << failures;
    return {name, failures == 0, os.str()};
  }
};

constexpr double kSlack = 1.0 + 1e-12;

}  // namespace

std::vector<CheckResult> run_invariant_suite(std::uint64_t seed,
                                             std::size_t instances) {
  std::mt19937_64 rng(seed);
  EnsembleOptions opts;
  opts.max_n = 120;

  Tally factor{"factorization L R = A and R matches dense LU"};
  Tally recon{"Green reconstruction matches dense inverse"};
  Tally fnorm{"elimination vectors: ||f_k||_1 <= mu"};
  Tally pivots{"pivot bounds (1-mu^2)|A(k,k)| <= |gamma_k|"};
  Tally schur{"Schur complements keep mu"};
  Tally suffix{"generator suffix of Schur complements"};
  Tally tail{"trailing generator cross-check"};
  Tally lu{"LU bound soundness"};
  Tally varah{"Varah bound soundness"};

  for (std::size_t t = 0; t < instances; ++t) {
    const BandedMatrix a = random_dominant_banded(rng, opts);
    const std::size_t n = a.size(), r = a.r_lower();
    const Eigen::MatrixXd& dense = a.dense();
    const double a_norm = norm1(dense);
    const DominanceReport dom = dominance_mu(a);

    const StructuredLU slu = structured_lu(a);
    const oracle::DenseLU ref = oracle::dense_lu_no_pivot(dense);
    factor.observe(norm1(slu.lower() * slu.upper() - dense), 1e-11 * a_norm);
    factor.observe((slu.upper() - ref.upper).cwiseAbs().maxCoeff(),
                   1e-10 * a_norm);

    const Eigen::MatrixXd inv = oracle::dense_inverse(dense);
    const double inv_norm = norm1(inv);
    const GreenGenerators gens = inverse_green_generators(slu);
    const LowerReconstruction rec = reconstruct_lower(gens);
    const Eigen::MatrixXd diff =
        rec.mask.select(rec.values - inv, Eigen::MatrixXd::Zero(Index(n), Index(n)));
    recon.observe(diff.cwiseAbs().maxCoeff(), 1e-10 * inv_norm);

    for (std::size_t k = 1; k + r <= n; ++k)
      fnorm.observe(slu.f(k).lpNorm<1>(), dom.mu * kSlack + 1e-15);
    for (std::size_t k = 1; k <= n; ++k)
      pivots.observe((1.0 - dom.mu * dom.mu) * std::abs(a(k, k)),
                     std::abs(slu.gamma(k)) * kSlack);

    const Eigen::MatrixXd tail_ref = p_tail_cross_check(slu);
    tail.observe((gens.trailing() - tail_ref).cwiseAbs().maxCoeff(),
                 1e-12 * std::max(1.0, tail_ref.cwiseAbs().maxCoeff()));

    for (std::size_t ell : {std::size_t{1}, (n - r) / 2, n - r}) {
      if (ell < 1 || ell + r > n) continue;
      const Eigen::MatrixXd s = schur_complement(a, ell);
      schur.observe(dominance_mu(s, r).mu, dom.mu * kSlack + 1e-15);
      if (ell + r >= n) continue;
      const GreenGenerators sub = inverse_green_generators(
          BandedMatrix::from_dense(s, r, std::min(a.r_upper(), n - ell - 1)));
      double dev = (sub.trailing() - gens.trailing()).cwiseAbs().maxCoeff();
      for (std::size_t i = 1; i + ell + r <= n; ++i) {
        dev = std::max(dev, (sub.p(i) - gens.p(i + ell)).cwiseAbs().maxCoeff());
        dev = std::max(dev, (sub.q(i) - gens.q(i + ell)).cwiseAbs().maxCoeff());
        dev = std::max(dev, (sub.a(i) - gens.a(i + ell)).cwiseAbs().maxCoeff());
      }
      suffix.observe(dev, 1e-10 * std::max(1.0, inv_norm));
    }

    const DecayBound b = lu_bound(a);
    for (std::size_t j = 1; j <= n; ++j)
      for (std::size_t i = j; i <= n; ++i)
        lu.observe(std::abs(inv(Index(i - 1), Index(j - 1))),
                   *eval_bound(b, i, j) * kSlack);
    varah.observe(inv_norm, varah_bound(a));
  }

  return {factor.result(), recon.result(),  fnorm.result(),
          pivots.result(), schur.result(),  suffix.result(),
          tail.result(),   lu.result(),     varah.result()};
}

}  // namespace greendecay
