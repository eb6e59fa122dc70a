#pragma once

#include <stdexcept>
#include <string>

namespace vbgeo {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Evaluation outside a chart box, outside r < r_max, or a positivity failure.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Bad parameters, dimension mismatch, wrong pairing of bundle and base.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// Numerics failed to settle (e.g. Lie closure did not terminate).
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace vbgeo
