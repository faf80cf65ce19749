#pragma once

#include <stdexcept>
#include <string>

namespace blowup {

// Base class for all library errors. Subclasses map onto CLI exit codes,
// see tools/main.cpp.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
struct DomainError : Error {
  using Error::Error;
};

// An iterative solver failed to reach its residual tolerance.
struct ConvergenceError : Error {
  using Error::Error;
};

// Evaluation requested at or after the blow-up time.
struct PostBlowupError : Error {
  using Error::Error;
};

// Characteristic root could not be bracketed inside the working interval.
struct BracketError : Error {
  using Error::Error;
};

// Initial data has no compressive region, so no finite-time blow-up.
struct NoBlowupError : Error {
  using Error::Error;
};

// Higher-order catastrophe or vanishing divisor; outside the generic case.
struct DegenerateError : Error {
  using Error::Error;
};

// Sampled field is too large at the window edge for a safe taper.
struct WindowError : Error {
  using Error::Error;
};

// Spectral peak sits on the grid boundary; the window is too small.
struct FlatFieldError : Error {
  using Error::Error;
};

// Least-squares fit over degenerate abscissae.
struct RankError : Error {
  using Error::Error;
};

}  // namespace blowup
