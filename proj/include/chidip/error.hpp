#pragma once

#include <stdexcept>
#include <string>

namespace chidip {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidGeometry : public Error {
 public:
  using Error::Error;
};

class InvalidSeparation : public Error {
 public:
  using Error::Error;
};

/// Argument outside the domain of a function (u <= 0 for the auxiliary
/// integrals, cutoff <= 1 for the Lamb shift, non-positive refractive index).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Rate coefficients that would make some collective state grow in time.
class UnphysicalRates : public Error {
 public:
  using Error::Error;
};

/// Successive refinements of a verification quadrature disagree.
class OracleDivergence : public Error {
 public:
  using Error::Error;
};

/// Bad command line or configuration input.
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace chidip
