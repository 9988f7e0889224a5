#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "greendecay/banded_matrix.hpp"
#include "greendecay/bounds.hpp"

namespace greendecay {

enum class ExperimentName { ex1a, ex1b, ex1c, ex1d, ex2, ex3, ex4a, ex4b, ex5 };

std::string_view to_string(ExperimentName name);
/// Throws Error for an unknown name.
ExperimentName parse_experiment_name(std::string_view text);

struct ExperimentSpec {
  ExperimentName name = ExperimentName::ex1a;
  std::uint64_t seed = 7;
  /// Probe column of A^{-1}, 1-based.
  std::size_t column = 1;
  /// Matrix Market file, required by ex3.
  std::optional<std::filesystem::path> input_path;
  /// Lower bandwidth of the ex5 matrix, usually 1 or 2.
  std::size_t bandwidth = 1;
};

/// Builds the test matrix of an experiment. Deterministic for a fixed seed.
///
///   ex1a  50 x 50 Toeplitz, 6.25 on the diagonal, 0.25 for 0 < |i-j| <= 3
///   ex1b  ex1a with A(20,20) = 100
///   ex1c  ex1a with 100 added to the first 25 diagonal entries
///   ex1d  ex1a with the diagonal sign flipped at 10, 11, 12
///   ex2   ex1a with three column edits creating a large complex pair
///   ex3   Matrix Market input plus I_{N/2} (+) (-I_{N/2})
///   ex4a  100 x 100, lower bandwidth 5, one-sided; eigenvalue pairs near the
///         ellipse with semiaxes 2 and 1, noise in [-1e-3, 1e-3]
///   ex4b  as ex4a with real parts log-distributed in +-[1, 1e4]
///   ex5   20 x 20 one-sided, 0.5 on the lower band, 0.5 * 2^{-(j-i)} above,
///         diagonal +12 then -12
///
/// ex4a, ex4b and ex5 are reconstructions: only their qualitative regime is
/// prescribed. Throws Error when ex3 lacks an input file.
BandedMatrix generate(const ExperimentSpec& spec);

struct ReportRow {
  std::size_t i = 0;
  std::size_t j = 0;
  double exact = 0.0;
  std::optional<double> lu;
  std::optional<double> qr;
  std::optional<double> varah;
  std::optional<double> dms;
  std::optional<double> frommer;
  std::optional<double> chui_hasson;
};

struct ExperimentReport {
  std::string name;
  std::size_t n = 0;
  std::size_t r_lower = 0;
  std::size_t r_upper = 0;
  std::size_t column = 1;
  bool symmetric = false;
  DominanceReport dominance;
  std::optional<DecayBound> lu;
  std::optional<DecayBound> qr;
  std::optional<QRHypothesisReport> qr_report;
  std::optional<DecayBound> varah;
  std::optional<DecayBound> dms;
  std::optional<DecayBound> frommer;
  std::optional<DecayBound> chui_hasson;
  /// Spectral interval fed to the DMS / Chui-Hasson families.
  std::optional<std::pair<double, double>> spectral_interval;
  std::optional<bool> definite;
  std::vector<std::string> notes;
  std::vector<ReportRow> rows;

  /// True when at least one bound family (other than the constant-free
  /// Chui-Hasson rate) applies.
  bool any_bound() const noexcept;
};

/// Evaluates every applicable family on column `column` of A^{-1}.
/// Inapplicable families are left empty and explained in `notes`.
ExperimentReport analyze(const BandedMatrix& a, std::string name,
                         std::size_t column = 1);

ExperimentReport run_experiment(const ExperimentSpec& spec);

/// Header `i,j,exact,lu,qr,varah,dms,frommer,chui_hasson`, one line per row,
/// `NA` for inapplicable cells, shortest round-trip scientific notation.
void emit_csv(const ExperimentReport& report, std::ostream& out);
void emit_csv(const ExperimentReport& report,
              const std::filesystem::path& path);

/// Human-readable metadata block (mu, per-family constants, notes).
void print_summary(const ExperimentReport& report, std::ostream& out);

}  // namespace greendecay
