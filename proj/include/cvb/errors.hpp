#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cvb {

/// Base class for every error this library throws.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Expression syntax error. `offset()` is the byte position in the source
/// text at which parsing failed.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (offset " + std::to_string(offset) + ")"), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

private:
  std::size_t offset_;
};

/// A subexpression was evaluated outside its domain (log of a non-positive
/// value, division by zero, fractional power of a negative base, ...).
/// The offending point must be excluded by the caller.
class DomainError : public Error {
public:
  DomainError(const std::string& what, double point) : Error(what), point_(point) {}
  double point() const noexcept { return point_; }

private:
  double point_;
};

/// Invalid argument values: reversed interval bounds, p <= 1, bad grid size.
class ParameterError : public Error {
public:
  using Error::Error;
};

/// A hypothesis of the requested bound failed its numeric check.
class PreconditionError : public Error {
public:
  using Error::Error;
};

/// A weight that must be nonnegative dipped below zero; carries a witness point.
class NegativityError : public PreconditionError {
public:
  NegativityError(const std::string& what, double witness)
      : PreconditionError(what), witness_(witness) {}
  double witness() const noexcept { return witness_; }

private:
  double witness_;
};

/// A weight that must be symmetric about the interval midpoint is not;
/// carries a witness point.
class SymmetryError : public PreconditionError {
public:
  SymmetryError(const std::string& what, double witness)
      : PreconditionError(what), witness_(witness) {}
  double witness() const noexcept { return witness_; }

private:
  double witness_;
};

/// Numeric integration or summation failure: non-convergence after the
/// subdivision budget, a divergent tail, or a non-finite sample.
class QuadratureError : public Error {
public:
  using Error::Error;
};

}  // namespace cvb
