#pragma once

#include <stdexcept>
#include <string>

namespace loblab {

/// Base class for all library-specific failures. Simple precondition
/// violations (negative sizes, out-of-range parameters) throw
/// std::invalid_argument instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input does not match the expected schema (missing column, bad header).
class FormatError : public Error {
 public:
  using Error::Error;
};

/// Too many malformed rows to trust the ingested stream.
class IngestionError : public Error {
 public:
  using Error::Error;
};

/// Records violate a required sort order.
class OrderingError : public Error {
 public:
  using Error::Error;
};

/// Intensity profile with zero total rate at a knot (sigma would vanish).
class DegenerateProfileError : public Error {
 public:
  using Error::Error;
};

/// nu(z) vanishes somewhere on the evaluation grid.
class SingularCoefficientError : public Error {
 public:
  using Error::Error;
};

/// A numerical routine could not meet its accuracy target.
class NumericalFailureError : public Error {
 public:
  NumericalFailureError(const std::string& what, double tail_estimate)
      : Error(what), tail_estimate_(tail_estimate) {}
  explicit NumericalFailureError(const std::string& what) : Error(what) {}

  double tail_estimate() const { return tail_estimate_; }

 private:
  double tail_estimate_ = 0.0;
};

/// Not enough data points to produce the requested estimate.
class InsufficientDataError : public Error {
 public:
  using Error::Error;
};

/// The fitting objective does not depend on the parameter.
class UnidentifiableError : public Error {
 public:
  using Error::Error;
};

/// Chain-oracle grid cap is too small: doubling it still moves the answer.
class CapInsufficientError : public Error {
 public:
  CapInsufficientError(const std::string& what, double doubling_change)
      : Error(what), doubling_change_(doubling_change) {}

  double doubling_change() const { return doubling_change_; }

 private:
  double doubling_change_ = 0.0;
};

/// A Monte Carlo experiment finished without any usable paths.
class InconclusiveExperimentError : public Error {
 public:
  using Error::Error;
};

/// Run configuration file could not be parsed or is incomplete.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace loblab
