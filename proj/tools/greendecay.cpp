#include <cstdint>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "greendecay/banded_matrix.hpp"
#include "greendecay/bounds.hpp"
#include "greendecay/errors.hpp"
#include "greendecay/experiments.hpp"
#include "greendecay/matrix_market.hpp"
#include "greendecay/verify.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kNoBound = 2;

struct RunArgs {
  std::string name;
  std::uint64_t seed = 7;
  std::size_t column = 1;
  std::string input;
  std::string out;
  std::size_t bandwidth = 1;
};

int run_command(const RunArgs& args) {
  greendecay::ExperimentSpec spec;
  spec.name = greendecay::parse_experiment_name(args.name);
  spec.seed = args.seed;
  spec.column = args.column;
  spec.bandwidth = args.bandwidth;
  if (!args.input.empty()) spec.input_path = args.input;

  const greendecay::ExperimentReport report = greendecay::run_experiment(spec);
  if (args.out.empty()) {
    greendecay::emit_csv(report, std::cout);
  } else {
    greendecay::emit_csv(report, std::filesystem::path(args.out));
  }
  greendecay::print_summary(report, std::cerr);
  return report.any_bound() ? kOk : kNoBound;
}

int bounds_command(const std::string& path) {
  const greendecay::BandedMatrix a = greendecay::read_matrix_market(
      std::filesystem::path(path));
  const greendecay::DominanceReport dom = greendecay::dominance_mu(a);

  std::cout << std::setprecision(17);
  std::cout << "N       " << a.size() << '\n'
            << "r       " << a.r_lower()
            << (a.one_sided() ? " (one-sided)" : "") << '\n'
            << "mu      " << dom.mu << '\n'
            << "min|d|  " << dom.min_diag << '\n';
  if (!dom.satisfied) {
    std::cout << "dominance condition fails";
    if (dom.zero_diagonal) std::cout << " (zero diagonal at " << *dom.zero_diagonal << ")";
    std::cout << "; LU and Varah bounds do not apply\n";
    return kNoBound;
  }
  const greendecay::DecayBound lu = greendecay::lu_bound(a);
  std::cout << "gamma   " << lu.gamma << '\n'
            << "M       " << *lu.constant << '\n'
            << "varah   " << greendecay::varah_bound(a) << '\n';
  return kOk;
}

int verify_command(std::uint64_t seed, std::size_t instances) {
  bool all = true;
  for (const auto& check : greendecay::run_invariant_suite(seed, instances)) {
    std::cout << (check.passed ? "PASS  " : "FAIL  ") << check.name << "  ("
              << check.detail << ")\n";
    all = all && check.passed;
  }
  return all ? kOk : kFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decay bounds for inverses of banded matrices"};
  app.require_subcommand(1);

  RunArgs run_args;
  auto* run = app.add_subcommand("run", "Run an experiment and emit CSV");
  run->add_option("name", run_args.name,
                  "ex1a ex1b ex1c ex1d ex2 ex3 ex4a ex4b ex5")
      ->required();
  run->add_option("--seed", run_args.seed, "Random seed")->capture_default_str();
  run->add_option("--column", run_args.column, "Probe column of the inverse (1-based)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  run->add_option("--input", run_args.input, "Matrix Market file (ex3)");
  run->add_option("--out", run_args.out, "CSV output file (default: stdout)");
  run->add_option("--bandwidth", run_args.bandwidth, "Lower bandwidth of ex5")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  std::string mtx_path;
  auto* bounds = app.add_subcommand("bounds", "Print mu, gamma, M and Varah for a matrix");
  bounds->add_option("matrix", mtx_path, "Matrix Market file")
      ->required()
      ->check(CLI::ExistingFile);

  std::uint64_t verify_seed = 1;
  std::size_t verify_instances = 100;
  auto* verify = app.add_subcommand("verify", "Run the invariant suite on a random ensemble");
  verify->add_option("--seed", verify_seed)->capture_default_str();
  verify->add_option("--instances", verify_instances)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kFailure;
  }

  try {
    if (*run) return run_command(run_args);
    if (*bounds) return bounds_command(mtx_path);
    if (*verify) return verify_command(verify_seed, verify_instances);
  } catch (const std::exception& e) {
    std::cerr << "greendecay: " << e.what() << '\n';
    return kFailure;
  }
  return kFailure;
}
