#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pmod {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input data (graphs, walks, files).
class InputError : public Error {
public:
  using Error::Error;
};

/// A numeric parameter outside its admissible range.
class ParameterError : public Error {
public:
  using Error::Error;
};

/// The operation is not defined for this kind of graph.
class UnsupportedOperation : public Error {
public:
  using Error::Error;
};

/// An internal consistency check failed.
class InternalError : public Error {
public:
  using Error::Error;
};

/// The solver gave up before certifying its tolerance; carries the last bounds.
class NonConvergence : public Error {
public:
  NonConvergence(const std::string& what, double primal_upper, double dual_lower,
                 std::size_t iterations)
      : Error(what), primal_upper_(primal_upper), dual_lower_(dual_lower),
        iterations_(iterations) {}

  double primal_upper() const noexcept { return primal_upper_; }
  double dual_lower() const noexcept { return dual_lower_; }
  std::size_t iterations() const noexcept { return iterations_; }

private:
  double primal_upper_;
  double dual_lower_;
  std::size_t iterations_;
};

} // namespace pmod
