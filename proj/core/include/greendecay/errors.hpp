#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace greendecay {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Dimension or bandwidth arguments that violate N > r_lower >= 1.
class ShapeError : public Error {
public:
  using Error::Error;
};

/// A vanishing pivot during elimination without pivoting. `index` is 1-based.
class ZeroPivotError : public Error {
public:
  ZeroPivotError(std::size_t index, double value)
      : Error("zero pivot at step " + std::to_string(index) +
              " (value " + std::to_string(value) +
              "): matrix is not strongly regular"),
        index_(index), value_(value) {}

  std::size_t index() const noexcept { return index_; }
  double value() const noexcept { return value_; }

private:
  std::size_t index_;
  double value_;
};

/// The column dominance hypothesis needed by a bound does not hold.
class DominanceError : public Error {
public:
  DominanceError(double mu, const std::string& what)
      : Error(what), mu_(mu) {}

  double mu() const noexcept { return mu_; }

private:
  double mu_;
};

/// Hypotheses of a bound family are not met (QR energy/dominance, spectral
/// interval, ...).
class HypothesisError : public Error {
public:
  using Error::Error;
};

/// Malformed input file. `line` is 1-based, 0 when not tied to a line.
class ParseError : public Error {
public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

}  // namespace greendecay
