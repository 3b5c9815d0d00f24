#pragma once

#include <stdexcept>

namespace hexfluid {

// Config-file syntax problems; message carries file/line context.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Violated scenario invariants; message names the offending field.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Quadrature failed to reach the requested tolerance.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hexfluid
